#include "dmc/parametric.hpp"

#include "dmc/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>

namespace dmc {

FundamentalForms fundamental_forms(const ChartFn& chart, double u, double v, double hu, double hv,
                                   const AmbientSpace& ambient) {
    const Eigen::VectorXd x = chart(u, v);
    const Eigen::VectorXd xpu = chart(u + hu, v);
    const Eigen::VectorXd xmu = chart(u - hu, v);
    const Eigen::VectorXd xpv = chart(u, v + hv);
    const Eigen::VectorXd xmv = chart(u, v - hv);
    const Eigen::VectorXd xpupv = chart(u + hu, v + hv);
    const Eigen::VectorXd xpumv = chart(u + hu, v - hv);
    const Eigen::VectorXd xmupv = chart(u - hu, v + hv);
    const Eigen::VectorXd xmumv = chart(u - hu, v - hv);

    const Eigen::VectorXd xu = (xpu - xmu) / (2.0 * hu);
    const Eigen::VectorXd xv = (xpv - xmv) / (2.0 * hv);
    const Eigen::VectorXd xuu = (xpu - 2.0 * x + xmu) / (hu * hu);
    const Eigen::VectorXd xvv = (xpv - 2.0 * x + xmv) / (hv * hv);
    const Eigen::VectorXd xuv = (xpupv - xpumv - xmupv + xmumv) / (4.0 * hu * hv);

    FundamentalForms out;
    out.tangent_u = ambient.project_tangent(x, xu);
    out.tangent_v = ambient.project_tangent(x, xv);

    Eigen::Matrix2d g;
    g(0, 0) = ambient.inner(out.tangent_u, out.tangent_u);
    g(0, 1) = g(1, 0) = ambient.inner(out.tangent_u, out.tangent_v);
    g(1, 1) = ambient.inner(out.tangent_v, out.tangent_v);
    out.first = g;

    const double scale2 = std::max(g(0, 0), g(1, 1));
    const double det = g.determinant();
    if (det <= 1e-12 * scale2 * scale2 || g(0, 0) <= 0.0)
        throw Error(ErrorCode::SingularMetric, "first fundamental form is singular");
    const Eigen::Matrix2d ginv = g.inverse();

    const Eigen::VectorXd d2[3] = {xuu, xuv, xvv};
    for (int k = 0; k < 3; ++k) {
        Eigen::VectorXd w = ambient.project_tangent(x, d2[k]);
        // strip the part tangent to M
        const Eigen::Vector2d rhs(ambient.inner(w, out.tangent_u),
                                  ambient.inner(w, out.tangent_v));
        const Eigen::Vector2d coef = ginv * rhs;
        w -= coef[0] * out.tangent_u + coef[1] * out.tangent_v;
        out.second[k] = w;
    }

    out.mean_curvature = ginv(0, 0) * out.second[0] + 2.0 * ginv(0, 1) * out.second[1] +
                         ginv(1, 1) * out.second[2];
    const double h2 = ambient.inner(out.mean_curvature, out.mean_curvature);
    out.habs = std::sqrt(std::max(h2, 0.0));
    return out;
}

Immersion build_chart_grid(const ChartFn& chart, double u_period, double v_period, int nu, int nv,
                           const AmbientSpace& ambient, const std::string& name) {
    if (nu < 3 || nv < 3 || nu > 1024 || nv > 1024)
        throw Error(ErrorCode::ParameterRange, "grid resolution must be in [3,1024]^2");
    const double du = u_period / nu;
    const double dv = v_period / nv;

    Immersion imm;
    imm.ambient = ambient;
    imm.name = name;
    const int V = nu * nv;
    imm.positions.resize(V, ambient.embedding_dim());
    auto node = [&](int i, int j) { return ((i % nu + nu) % nu) * nv + ((j % nv + nv) % nv); };
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            imm.positions.row(node(i, j)) = ambient.project_to_model(chart(i * du, j * dv));

    imm.triangles.resize(2 * V, 3);
    int f = 0;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            const int n00 = node(i, j), n10 = node(i + 1, j);
            const int n01 = node(i, j + 1), n11 = node(i + 1, j + 1);
            imm.triangles.row(f++) << n00, n10, n11;
            imm.triangles.row(f++) << n00, n11, n01;
        }

    imm.finalize_connectivity();
    imm.compute_intrinsic_metric();

    imm.dual_area.resize(V);
    imm.curvature.tag = Convention::Trace;
    imm.curvature.vectors.resize(V, ambient.embedding_dim());
    imm.curvature.magnitude.resize(V);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            const FundamentalForms ff = fundamental_forms(chart, i * du, j * dv, du, dv, ambient);
            const int id = node(i, j);
            imm.dual_area[id] = std::sqrt(ff.first.determinant()) * du * dv;
            imm.curvature.vectors.row(id) = ff.mean_curvature.transpose();
            imm.curvature.magnitude[id] = ff.habs;
        }
    return imm;
}

void icosphere_topology(int level, Eigen::MatrixXd& directions, Eigen::MatrixXi& faces) {
    if (level < 0 || level > 7)
        throw Error(ErrorCode::ParameterRange, "icosphere level must be in [0,7]");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Eigen::Vector3d> verts = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    for (auto& v : verts)
        v.normalize();
    std::vector<std::array<int, 3>> tris = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};

    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find({key.first, key.second});
            if (it != midpoint.end())
                return it->second;
            Eigen::Vector3d m = (verts[a] + verts[b]).normalized();
            verts.push_back(m);
            const int id = static_cast<int>(verts.size()) - 1;
            midpoint[{key.first, key.second}] = id;
            return id;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(tris.size() * 4);
        for (const auto& t : tris) {
            const int a = mid(t[0], t[1]);
            const int b = mid(t[1], t[2]);
            const int c = mid(t[2], t[0]);
            next.push_back({t[0], a, c});
            next.push_back({t[1], b, a});
            next.push_back({t[2], c, b});
            next.push_back({a, b, c});
        }
        tris = std::move(next);
    }

    directions.resize(static_cast<int>(verts.size()), 3);
    for (size_t i = 0; i < verts.size(); ++i)
        directions.row(static_cast<int>(i)) = verts[i].transpose();
    faces.resize(static_cast<int>(tris.size()), 3);
    for (size_t i = 0; i < tris.size(); ++i)
        faces.row(static_cast<int>(i)) << tris[i][0], tris[i][1], tris[i][2];
}

Immersion build_sphere_chart(const SphereChartFn& chart, const AmbientSpace& ambient, int level,
                             const std::string& name, double fd_step) {
    Eigen::MatrixXd dirs;
    Eigen::MatrixXi faces;
    icosphere_topology(level, dirs, faces);
    const int V = static_cast<int>(dirs.rows());

    Immersion imm;
    imm.ambient = ambient;
    imm.name = name;
    imm.triangles = faces;
    imm.positions.resize(V, ambient.embedding_dim());
    for (int i = 0; i < V; ++i)
        imm.positions.row(i) =
            ambient.project_to_model(chart(dirs.row(i).transpose())).transpose();

    imm.finalize_connectivity();
    imm.compute_intrinsic_metric();
    imm.compute_mixed_dual_areas();

    imm.curvature.tag = Convention::Trace;
    imm.curvature.vectors.resize(V, ambient.embedding_dim());
    imm.curvature.magnitude.resize(V);
    for (int i = 0; i < V; ++i) {
        const Eigen::Vector3d w = dirs.row(i).transpose();
        // orthonormal frame of the direction sphere at w
        Eigen::Vector3d seed = std::abs(w.z()) < 0.9 ? Eigen::Vector3d::UnitZ()
                                                     : Eigen::Vector3d::UnitX();
        const Eigen::Vector3d e1 = w.cross(seed).normalized();
        const Eigen::Vector3d e2 = w.cross(e1).normalized();
        ChartFn local = [&](double s, double t) {
            return chart((w + s * e1 + t * e2).normalized());
        };
        const FundamentalForms ff = fundamental_forms(local, 0.0, 0.0, fd_step, fd_step, ambient);
        imm.curvature.vectors.row(i) = ff.mean_curvature.transpose();
        imm.curvature.magnitude[i] = ff.habs;
    }
    return imm;
}

double max_constraint_residual(const Immersion& imm) {
    double worst = 0.0;
    for (int i = 0; i < imm.num_vertices(); ++i)
        worst = std::max(worst,
                         imm.ambient.constraint_residual(imm.positions.row(i).transpose()));
    return worst;
}

} // namespace dmc
