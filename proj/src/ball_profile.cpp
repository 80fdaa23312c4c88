#include "dmc/ball_profile.hpp"

#include "dmc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace dmc {

namespace {

struct LinTri {
    double d0, d1, d2; // sorted corner distances
    double f0, f1, f2; // densities permuted alongside
    double area;
    double fint; // area * (f0+f1+f2)/3
    bool incident;
};

double lin_clip_area(const LinTri& t, double r) {
    if (r <= t.d0)
        return 0.0;
    if (r >= t.d2)
        return t.area;
    if (r <= t.d1) {
        const double t1 = t.d1 > t.d0 ? (r - t.d0) / (t.d1 - t.d0) : 1.0;
        const double t2 = t.d2 > t.d0 ? (r - t.d0) / (t.d2 - t.d0) : 1.0;
        return t.area * t1 * t2;
    }
    const double s0 = (t.d2 - r) / (t.d2 - t.d0);
    const double s1 = (t.d2 - r) / (t.d2 - t.d1);
    return t.area * (1.0 - s0 * s1);
}

double lin_clip_integral(const LinTri& t, double r) {
    if (r <= t.d0)
        return 0.0;
    if (r >= t.d2)
        return t.fint;
    if (r <= t.d1) {
        const double t1 = t.d1 > t.d0 ? (r - t.d0) / (t.d1 - t.d0) : 1.0;
        const double t2 = t.d2 > t.d0 ? (r - t.d0) / (t.d2 - t.d0) : 1.0;
        const double fq1 = t.f0 + t1 * (t.f1 - t.f0);
        const double fq2 = t.f0 + t2 * (t.f2 - t.f0);
        return t.area * t1 * t2 * (t.f0 + fq1 + fq2) / 3.0;
    }
    const double s0 = (t.d2 - r) / (t.d2 - t.d0);
    const double s1 = (t.d2 - r) / (t.d2 - t.d1);
    const double fr0 = t.f2 + s0 * (t.f0 - t.f2);
    const double fr1 = t.f2 + s1 * (t.f1 - t.f2);
    return t.fint - t.area * s0 * s1 * (t.f2 + fr0 + fr1) / 3.0;
}

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

// Green's-theorem contribution of the directed segment P->Q to the area of
// disk(O,r) intersect the region; inside stretches add chord triangles,
// outside stretches add circular sectors.
double segment_disk_contribution(double px, double py, double qx, double qy, double r) {
    const double dx = qx - px, dy = qy - py;
    const double a = dx * dx + dy * dy;
    if (a <= 0.0)
        return 0.0;
    const double b = 2.0 * (px * dx + py * dy);
    const double c = px * px + py * py - r * r;

    double ts[4];
    int nt = 0;
    ts[nt++] = 0.0;
    const double disc = b * b - 4.0 * a * c;
    if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        const double t1 = (-b - sq) / (2.0 * a);
        const double t2 = (-b + sq) / (2.0 * a);
        if (t1 > 0.0 && t1 < 1.0)
            ts[nt++] = t1;
        if (t2 > 0.0 && t2 < 1.0)
            ts[nt++] = t2;
    }
    ts[nt++] = 1.0;

    double total = 0.0;
    for (int i = 0; i + 1 < nt; ++i) {
        const double t0 = ts[i], t1 = ts[i + 1];
        const double tm = 0.5 * (t0 + t1);
        const double mx = px + tm * dx, my = py + tm * dy;
        const double x0 = px + t0 * dx, y0 = py + t0 * dy;
        const double x1 = px + t1 * dx, y1 = py + t1 * dy;
        if (mx * mx + my * my <= r * r) {
            total += 0.5 * cross2(x0, y0, x1, y1);
        } else {
            const double ang = std::atan2(cross2(x0, y0, x1, y1), x0 * x1 + y0 * y1);
            total += 0.5 * r * r * ang;
        }
    }
    return total;
}

} // namespace

double disk_corner_triangle_area(double ax, double ay, double bx, double by, double r) {
    double sign = 1.0;
    if (cross2(ax, ay, bx, by) < 0.0) {
        std::swap(ax, bx);
        std::swap(ay, by);
    }
    const double full = 0.5 * cross2(ax, ay, bx, by);
    if (r * r >= std::max(ax * ax + ay * ay, bx * bx + by * by))
        return full;
    const double area = segment_disk_contribution(ax, ay, bx, by, r);
    return sign * std::clamp(area, 0.0, full);
}

namespace {

struct SecTri {
    double ax, ay, bx, by; // non-center corners, center at origin, CCW
    double max_reach;      // full coverage beyond this radius
    double area;
};

} // namespace

double BallProfile::value_at(double r) const {
    if (radii.empty())
        return 0.0;
    if (r <= radii.front())
        return r <= 0.0 ? 0.0 : volume.front() * 1.0; // first breakpoint value
    if (r >= radii.back())
        return volume.back();
    const auto it = std::lower_bound(radii.begin(), radii.end(), r);
    const size_t hi = static_cast<size_t>(it - radii.begin());
    const size_t lo = hi - 1;
    const double w = (r - radii[lo]) / (radii[hi] - radii[lo]);
    return volume[lo] + w * (volume[hi] - volume[lo]);
}

double BallTables::integral_at(double r) const {
    const auto& radii = profile.radii;
    if (radii.empty())
        return 0.0;
    if (r <= radii.front())
        return r <= 0.0 ? 0.0 : habs_integral.front();
    if (r >= radii.back())
        return habs_integral.back();
    const auto it = std::lower_bound(radii.begin(), radii.end(), r);
    const size_t hi = static_cast<size_t>(it - radii.begin());
    const size_t lo = hi - 1;
    const double w = (r - radii[lo]) / (radii[hi] - radii[lo]);
    return habs_integral[lo] + w * (habs_integral[hi] - habs_integral[lo]);
}

void BallProfile::write_csv(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    std::fprintf(f, "r,V\n");
    for (size_t i = 0; i < radii.size(); ++i)
        std::fprintf(f, "%.17g,%.17g\n", radii[i], volume[i]);
    std::fclose(f);
}

BallTables compute_ball_tables(const Immersion& imm, const DistanceField& dist, int center,
                               Convention conv, const std::vector<double>& extra_radii,
                               int n_uniform) {
    const int F = imm.num_triangles();
    const Eigen::VectorXd f = imm.curvature.magnitudes(conv, imm.dim_m());

    std::vector<LinTri> lin(F);
    std::vector<SecTri> sectors;
    double d_max = 0.0;
    for (int t = 0; t < F; ++t) {
        int ids[3] = {imm.triangles(t, 0), imm.triangles(t, 1), imm.triangles(t, 2)};
        double dv[3], fv[3];
        int center_corner = -1;
        for (int j = 0; j < 3; ++j) {
            dv[j] = dist.vertex(ids[j]);
            fv[j] = f[ids[j]];
            if (ids[j] == center)
                center_corner = j;
            d_max = std::max(d_max, dv[j]);
        }
        // insertion sort of the three (distance, density) pairs
        int ord[3] = {0, 1, 2};
        if (dv[ord[0]] > dv[ord[1]]) std::swap(ord[0], ord[1]);
        if (dv[ord[1]] > dv[ord[2]]) std::swap(ord[1], ord[2]);
        if (dv[ord[0]] > dv[ord[1]]) std::swap(ord[0], ord[1]);
        LinTri& L = lin[t];
        L.d0 = dv[ord[0]]; L.d1 = dv[ord[1]]; L.d2 = dv[ord[2]];
        L.f0 = fv[ord[0]]; L.f1 = fv[ord[1]]; L.f2 = fv[ord[2]];
        L.area = imm.tri_area[t];
        L.fint = L.area * (fv[0] + fv[1] + fv[2]) / 3.0;
        L.incident = center_corner >= 0;

        if (center_corner >= 0) {
            // unfold with the center corner at the origin
            const double la = imm.side_length(t, (center_corner + 2) % 3); // to corner +1
            const double lb = imm.side_length(t, (center_corner + 1) % 3); // to corner +2
            const double lc = imm.side_length(t, center_corner);           // opposite side
            const double cosg = (la * la + lb * lb - lc * lc) / (2.0 * la * lb);
            const double sing = std::sqrt(std::max(0.0, 1.0 - cosg * cosg));
            SecTri s;
            s.ax = la; s.ay = 0.0;
            s.bx = lb * cosg; s.by = lb * sing;
            s.max_reach = std::max(la, lb);
            s.area = imm.tri_area[t];
            sectors.push_back(s);
            d_max = std::max(d_max, s.max_reach);
        }
    }

    // radius grid: vertex breakpoints + uniform refinement + extras
    std::vector<double> radii;
    radii.reserve(static_cast<size_t>(imm.num_vertices()) + n_uniform + extra_radii.size() + 1);
    for (int v = 0; v < imm.num_vertices(); ++v)
        if (v != center)
            radii.push_back(dist.vertex(v));
    for (int j = 1; j <= n_uniform; ++j)
        radii.push_back(d_max * j / n_uniform);
    for (double r : extra_radii)
        if (r > 0.0)
            radii.push_back(std::min(r, d_max));
    radii.push_back(d_max);
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end(),
                            [&](double a, double b) { return b - a <= 1e-15 * d_max; }),
                radii.end());

    // ascending sweep with activation (r > d0) and retirement (r >= d2)
    std::vector<int> by_d0(lin.size());
    for (size_t i = 0; i < lin.size(); ++i)
        by_d0[i] = static_cast<int>(i);
    std::sort(by_d0.begin(), by_d0.end(),
              [&](int a, int b) { return lin[a].d0 < lin[b].d0; });

    BallTables tables;
    tables.convention = conv;
    BallProfile& prof = tables.profile;
    prof.center = center;
    prof.radii = radii;
    prof.volume.resize(radii.size());
    prof.total_volume = imm.total_volume();
    prof.d_max = d_max;
    tables.habs_integral.resize(radii.size());

    std::vector<int> active;
    std::vector<char> retired(lin.size(), 0);
    size_t next_act = 0;
    double full_area = 0.0; // saturated triangles (sector ones counted at max_reach)
    double full_int = 0.0;
    std::vector<char> sector_done(sectors.size(), 0);

    for (size_t ri = 0; ri < radii.size(); ++ri) {
        const double r = radii[ri];
        while (next_act < by_d0.size() && lin[by_d0[next_act]].d0 < r)
            active.push_back(by_d0[next_act++]);

        double area = full_area;
        double integ = full_int;
        size_t w = 0;
        for (size_t i = 0; i < active.size(); ++i) {
            const int id = active[i];
            const LinTri& L = lin[id];
            if (r >= L.d2) {
                full_int += L.fint;
                integ += L.fint;
                if (!L.incident) {
                    full_area += L.area;
                    area += L.area;
                }
                retired[id] = 1;
                continue;
            }
            active[w++] = id;
            integ += lin_clip_integral(L, r);
            if (!L.incident)
                area += lin_clip_area(L, r);
        }
        active.resize(w);

        for (size_t s = 0; s < sectors.size(); ++s) {
            if (sector_done[s])
                continue;
            const SecTri& S = sectors[s];
            if (r >= S.max_reach) {
                full_area += S.area;
                area += S.area;
                sector_done[s] = 1;
            } else {
                area += disk_corner_triangle_area(S.ax, S.ay, S.bx, S.by, r);
            }
        }

        prof.volume[ri] = area;
        tables.habs_integral[ri] = integ;
    }
    return tables;
}

BallTables compute_ball_tables(const Immersion& imm, const SurfaceGraph& graph, int center,
                               Convention conv, const std::vector<double>& extra_radii,
                               int n_uniform) {
    const DistanceField dist = graph.distances(center);
    return compute_ball_tables(imm, dist, center, conv, extra_radii, n_uniform);
}

BallProfile ball_volume_profile(const Immersion& imm, const SurfaceGraph& graph, int center,
                                int n_uniform) {
    return compute_ball_tables(imm, graph, center, Convention::Trace, {}, n_uniform).profile;
}

ExtrinsicClip extrinsic_ball_clip(const Immersion& imm, const Eigen::Vector3d& x, double r,
                                  const Eigen::VectorXd& density) {
    if (!imm.is_flat3())
        throw Error(ErrorCode::InvalidArgument, "extrinsic clipping needs flat 3-space");
    ExtrinsicClip out;
    for (int t = 0; t < imm.num_triangles(); ++t) {
        int ids[3] = {imm.triangles(t, 0), imm.triangles(t, 1), imm.triangles(t, 2)};
        double dv[3], fv[3];
        for (int j = 0; j < 3; ++j) {
            dv[j] = (imm.positions.row(ids[j]).transpose() - x).norm();
            fv[j] = density[ids[j]];
        }
        int ord[3] = {0, 1, 2};
        if (dv[ord[0]] > dv[ord[1]]) std::swap(ord[0], ord[1]);
        if (dv[ord[1]] > dv[ord[2]]) std::swap(ord[1], ord[2]);
        if (dv[ord[0]] > dv[ord[1]]) std::swap(ord[0], ord[1]);
        LinTri L;
        L.d0 = dv[ord[0]]; L.d1 = dv[ord[1]]; L.d2 = dv[ord[2]];
        L.f0 = fv[ord[0]]; L.f1 = fv[ord[1]]; L.f2 = fv[ord[2]];
        L.area = imm.tri_area[t];
        L.fint = L.area * (fv[0] + fv[1] + fv[2]) / 3.0;
        L.incident = false;
        out.area += lin_clip_area(L, r);
        out.integral += lin_clip_integral(L, r);
    }
    return out;
}

double extrinsic_ball_area(const Immersion& imm, const Eigen::Vector3d& x, double r) {
    return extrinsic_ball_clip(imm, x, r, Eigen::VectorXd::Zero(imm.num_vertices())).area;
}

} // namespace dmc
