#include "dmc/immersion.hpp"

#include "dmc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace dmc {

const char* convention_name(Convention c) {
    return c == Convention::Trace ? "trace" : "average";
}

Convention parse_convention(const std::string& s) {
    if (s == "trace" || s == "Trace")
        return Convention::Trace;
    if (s == "average" || s == "Average")
        return Convention::Average;
    throw Error(ErrorCode::ParseError, "unknown convention '" + s + "'");
}

void Immersion::finalize_connectivity() {
    const int V = num_vertices();
    const int F = num_triangles();
    if (V < 3 || F < 2)
        throw Error(ErrorCode::InvalidArgument, "immersion needs at least 3 vertices and 2 faces");

    for (int f = 0; f < F; ++f) {
        for (int j = 0; j < 3; ++j) {
            const int v = triangles(f, j);
            if (v < 0 || v >= V)
                throw Error(ErrorCode::InvalidArgument, "triangle index out of range");
        }
        if (triangles(f, 0) == triangles(f, 1) || triangles(f, 1) == triangles(f, 2) ||
            triangles(f, 0) == triangles(f, 2))
            throw Error(ErrorCode::DegenerateTriangle, "repeated vertex in triangle");
    }

    struct EdgeInfo {
        int count = 0;
        int forward = 0; // times seen as (u,v) with u<v in traversal order
    };
    std::map<std::pair<int, int>, EdgeInfo> edge_map;
    for (int f = 0; f < F; ++f) {
        for (int j = 0; j < 3; ++j) {
            const int a = triangles(f, (j + 1) % 3);
            const int b = triangles(f, (j + 2) % 3);
            auto key = std::minmax(a, b);
            auto& info = edge_map[{key.first, key.second}];
            info.count += 1;
            if (a < b)
                info.forward += 1;
        }
    }

    for (const auto& [key, info] : edge_map) {
        if (info.count == 1) {
            std::ostringstream os;
            os << "edge (" << key.first << "," << key.second << ") bounds a single face";
            throw Error(ErrorCode::OpenBoundary, os.str());
        }
        if (info.count > 2) {
            std::ostringstream os;
            os << "edge (" << key.first << "," << key.second << ") bounds " << info.count
               << " faces";
            throw Error(ErrorCode::NonManifoldEdge, os.str());
        }
        if (info.forward != 1) {
            std::ostringstream os;
            os << "edge (" << key.first << "," << key.second
               << ") traversed twice in the same direction";
            throw Error(ErrorCode::NonOrientable, os.str());
        }
    }

    edges.resize(static_cast<int>(edge_map.size()), 2);
    std::map<std::pair<int, int>, int> edge_index;
    int e = 0;
    for (const auto& [key, info] : edge_map) {
        edges(e, 0) = key.first;
        edges(e, 1) = key.second;
        edge_index[key] = e;
        ++e;
    }

    face_edges.resize(F, 3);
    for (int f = 0; f < F; ++f) {
        for (int j = 0; j < 3; ++j) {
            const int a = triangles(f, (j + 1) % 3);
            const int b = triangles(f, (j + 2) % 3);
            auto key = std::minmax(a, b);
            face_edges(f, j) = edge_index[{key.first, key.second}];
        }
    }

    // Connectivity over vertices through edges; isolated vertices also fail.
    std::vector<int> comp(V, -1);
    std::vector<std::vector<int>> adj(V);
    for (int i = 0; i < edges.rows(); ++i) {
        adj[edges(i, 0)].push_back(edges(i, 1));
        adj[edges(i, 1)].push_back(edges(i, 0));
    }
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (comp[w] < 0) {
                comp[w] = 0;
                stack.push_back(w);
            }
    }
    for (int v = 0; v < V; ++v)
        if (comp[v] < 0)
            throw Error(ErrorCode::Disconnected, "surface has more than one component");
}

void Immersion::compute_intrinsic_metric() {
    const int E = num_edges();
    const int F = num_triangles();
    edge_length.resize(E);
    for (int e = 0; e < E; ++e) {
        edge_length[e] = ambient.geodesic_distance(positions.row(edges(e, 0)).transpose(),
                                                   positions.row(edges(e, 1)).transpose());
    }

    tri_area.resize(F);
    for (int f = 0; f < F; ++f) {
        const double a = side_length(f, 0);
        const double b = side_length(f, 1);
        const double c = side_length(f, 2);
        // Numerically stable Heron (Kahan ordering).
        double x = a, y = b, z = c;
        if (x < y) std::swap(x, y);
        if (y < z) std::swap(y, z);
        if (x < y) std::swap(x, y);
        const double t = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
        tri_area[f] = t > 0.0 ? 0.25 * std::sqrt(t) : 0.0;
    }

    const double mean_area = tri_area.sum() / F;
    for (int f = 0; f < F; ++f) {
        if (tri_area[f] < 1e-14 * mean_area) {
            std::ostringstream os;
            os << "triangle " << f << " has area " << tri_area[f] << " (mean " << mean_area << ")";
            throw Error(ErrorCode::DegenerateTriangle, os.str());
        }
    }
}

void Immersion::compute_mixed_dual_areas() {
    const int F = num_triangles();
    dual_area = Eigen::VectorXd::Zero(num_vertices());
    for (int f = 0; f < F; ++f) {
        const double l0 = side_length(f, 0);
        const double l1 = side_length(f, 1);
        const double l2 = side_length(f, 2);
        const double area = tri_area[f];
        // cos of corner j (opposite side j) by the law of cosines
        double cosv[3] = {(l1 * l1 + l2 * l2 - l0 * l0) / (2 * l1 * l2),
                          (l0 * l0 + l2 * l2 - l1 * l1) / (2 * l0 * l2),
                          (l0 * l0 + l1 * l1 - l2 * l2) / (2 * l0 * l1)};
        int obtuse = -1;
        for (int j = 0; j < 3; ++j)
            if (cosv[j] < 0.0)
                obtuse = j;
        if (obtuse >= 0) {
            for (int j = 0; j < 3; ++j)
                dual_area[triangles(f, j)] += (j == obtuse) ? 0.5 * area : 0.25 * area;
            continue;
        }
        const double l[3] = {l0, l1, l2};
        // cot(theta_j) = cos * l_a l_b / (2 area) with the adjacent sides of j
        double cot[3];
        for (int j = 0; j < 3; ++j) {
            const double la = l[(j + 1) % 3];
            const double lb = l[(j + 2) % 3];
            cot[j] = cosv[j] * la * lb / (2.0 * area);
        }
        for (int j = 0; j < 3; ++j) {
            const double a = l[(j + 1) % 3];
            const double b = l[(j + 2) % 3];
            dual_area[triangles(f, j)] += 0.125 * (a * a * cot[(j + 1) % 3] + b * b * cot[(j + 2) % 3]);
        }
    }
}

double total_area(const Immersion& imm) { return imm.tri_area.sum(); }

double hm1_integral(const Immersion& imm, int m, Convention conv) {
    const Eigen::VectorXd mag = imm.curvature.magnitudes(conv, imm.dim_m());
    double sum = 0.0;
    for (int v = 0; v < imm.num_vertices(); ++v)
        sum += std::pow(mag[v], m - 1) * imm.dual_area[v];
    return sum;
}

double willmore_energy(const Immersion& imm, Convention conv) {
    const Eigen::VectorXd mag = imm.curvature.magnitudes(conv, imm.dim_m());
    return (mag.array().square() * imm.dual_area.array()).sum();
}

} // namespace dmc
