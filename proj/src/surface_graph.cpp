#include "dmc/surface_graph.hpp"

#include "dmc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

namespace dmc {

namespace {

struct Planar {
    double x = 0.0, y = 0.0;
};

double planar_dist(const Planar& a, const Planar& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace

void SurfaceGraph::add_edge(int a, int b, double w) {
    triplets_.push_back({{a, b}, w});
    triplets_.push_back({{b, a}, w});
}

SurfaceGraph::SurfaceGraph(const Immersion& imm, int steiner_per_edge)
    : imm_(&imm), k_(steiner_per_edge) {
    if (k_ < 0 || k_ > 16)
        throw Error(ErrorCode::ParameterRange, "steiner_per_edge must be in [0,16]");
    const int V = imm.num_vertices();
    const int E = imm.num_edges();
    const int F = imm.num_triangles();
    num_vertices_ = V;
    num_nodes_ = V + E * k_;
    distortion_ = 1.0 / (2.0 * (k_ + 1) * (k_ + 1));

    triplets_.reserve(static_cast<size_t>(F) * (3 + 3 * k_) * (3 + 3 * k_) / 2);

    // chains along each mesh edge
    for (int e = 0; e < E; ++e) {
        const double seg = imm.edge_length[e] / (k_ + 1);
        int prev = imm.edges(e, 0);
        for (int s = 0; s < k_; ++s) {
            const int node = V + e * k_ + s;
            add_edge(prev, node, seg);
            prev = node;
        }
        add_edge(prev, imm.edges(e, 1), seg);
    }

    // intra-face connections between nodes on different sides
    std::vector<int> ids;
    std::vector<Planar> pts;
    std::vector<int> side_of;
    for (int f = 0; f < F; ++f) {
        const double l0 = imm.side_length(f, 0);
        const double l1 = imm.side_length(f, 1);
        const double l2 = imm.side_length(f, 2);
        // unfold: corners C0=(0,0), C1=(l2,0), C2 from the side lengths
        Planar corner[3];
        corner[0] = {0.0, 0.0};
        corner[1] = {l2, 0.0};
        const double cx = (l1 * l1 + l2 * l2 - l0 * l0) / (2.0 * l2);
        const double cy2 = l1 * l1 - cx * cx;
        corner[2] = {cx, std::sqrt(std::max(cy2, 0.0))};

        ids.clear();
        pts.clear();
        side_of.clear();
        for (int j = 0; j < 3; ++j) {
            ids.push_back(imm.triangles(f, j));
            pts.push_back(corner[j]);
            side_of.push_back(-1 - j); // unique tag per corner; corners join all sides
        }
        for (int j = 0; j < 3; ++j) { // side j runs between corners j+1, j+2
            const int e = imm.face_edges(f, j);
            const int ca = (j + 1) % 3;
            const int cb = (j + 2) % 3;
            const bool fwd = imm.edges(e, 0) == imm.triangles(f, ca);
            for (int s = 0; s < k_; ++s) {
                const double t_global = static_cast<double>(s + 1) / (k_ + 1);
                const double t = fwd ? t_global : 1.0 - t_global;
                Planar p{corner[ca].x + t * (corner[cb].x - corner[ca].x),
                         corner[ca].y + t * (corner[cb].y - corner[ca].y)};
                ids.push_back(V + e * k_ + s);
                pts.push_back(p);
                side_of.push_back(j);
            }
        }

        const int n = static_cast<int>(ids.size());
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                // skip pairs living on one side (corner-corner and
                // corner/steiner of the adjoining side): those run along a
                // mesh edge and are covered exactly by the edge chains
                const bool a_corner = side_of[a] < 0;
                const bool b_corner = side_of[b] < 0;
                bool same_side = false;
                if (!a_corner && !b_corner)
                    same_side = side_of[a] == side_of[b];
                else if (a_corner && !b_corner) {
                    const int cj = -side_of[a] - 1;
                    same_side = cj != side_of[b]; // corner j touches sides != j
                } else if (!a_corner && b_corner) {
                    const int cj = -side_of[b] - 1;
                    same_side = cj != side_of[a];
                } else {
                    same_side = true; // corner-corner pairs share a side
                }
                if (same_side)
                    continue;
                add_edge(ids[a], ids[b], planar_dist(pts[a], pts[b]));
            }
    }

    // CSR assembly
    offsets_.assign(num_nodes_ + 1, 0);
    for (const auto& t : triplets_)
        offsets_[t.first.first + 1]++;
    for (int i = 0; i < num_nodes_; ++i)
        offsets_[i + 1] += offsets_[i];
    targets_.resize(triplets_.size());
    weights_.resize(triplets_.size());
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& t : triplets_) {
        const int at = cursor[t.first.first]++;
        targets_[at] = t.first.second;
        weights_[at] = t.second;
    }
    triplets_.clear();
    triplets_.shrink_to_fit();
}

DistanceField SurfaceGraph::distances(int source_vertex) const {
    if (source_vertex < 0 || source_vertex >= num_vertices_)
        throw Error(ErrorCode::InvalidArgument, "source vertex out of range");
    DistanceField field;
    field.source = source_vertex;
    field.error_bound = distortion_;
    field.node_dist.assign(num_nodes_, std::numeric_limits<double>::infinity());
    field.pred.assign(num_nodes_, -1);

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    field.node_dist[source_vertex] = 0.0;
    heap.push({0.0, source_vertex});
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > field.node_dist[u])
            continue;
        for (int it = offsets_[u]; it < offsets_[u + 1]; ++it) {
            const int w = targets_[it];
            const double nd = d + weights_[it];
            if (nd < field.node_dist[w]) {
                field.node_dist[w] = nd;
                field.pred[w] = u;
                heap.push({nd, w});
            }
        }
    }
    return field;
}

Eigen::VectorXd SurfaceGraph::node_position(int node) const {
    const Immersion& imm = *imm_;
    if (node < num_vertices_)
        return imm.positions.row(node).transpose();
    const int rel = node - num_vertices_;
    const int e = rel / k_;
    const int s = rel % k_;
    const double t = static_cast<double>(s + 1) / (k_ + 1);
    const Eigen::VectorXd a = imm.positions.row(imm.edges(e, 0)).transpose();
    const Eigen::VectorXd b = imm.positions.row(imm.edges(e, 1)).transpose();
    const Eigen::VectorXd lerp = (1.0 - t) * a + t * b;
    if (imm.ambient.kind() == AmbientSpace::Kind::Flat)
        return lerp;
    return imm.ambient.project_to_model(lerp);
}

GeodesicPolyline SurfaceGraph::backtrack(const DistanceField& field, int target_node) const {
    GeodesicPolyline poly;
    std::vector<int> rev;
    int u = target_node;
    while (u >= 0) {
        rev.push_back(u);
        if (u == field.source)
            break;
        u = field.pred[u];
    }
    std::reverse(rev.begin(), rev.end());
    poly.nodes = rev;
    poly.arclength.resize(rev.size());
    poly.points.resize(static_cast<long>(rev.size()), imm_->positions.cols());
    for (size_t i = 0; i < rev.size(); ++i) {
        poly.arclength[i] = field.node_dist[rev[i]];
        poly.points.row(static_cast<long>(i)) = node_position(rev[i]).transpose();
    }
    poly.length = poly.arclength.empty() ? 0.0 : poly.arclength.back();
    return poly;
}

GeodesicPolyline SurfaceGraph::shortest_geodesic(int x_vertex, int y_vertex) const {
    const DistanceField field = distances(x_vertex);
    return backtrack(field, y_vertex);
}

DiameterResult intrinsic_diameter_exhaustive(const SurfaceGraph& graph) {
    DiameterResult best;
    best.d_int = -1.0;
    const int V = graph.vertex_count();
    for (int s = 0; s < V; ++s) {
        const DistanceField field = graph.distances(s);
        for (int t = 0; t < V; ++t) {
            const double d = field.vertex(t);
            if (d > best.d_int) {
                best.d_int = d;
                best.v1 = s;
                best.v2 = t;
            }
        }
    }
    return best;
}

DiameterResult intrinsic_diameter_accelerated(const SurfaceGraph& graph, unsigned seed,
                                              int restarts, int max_iters) {
    const int V = graph.vertex_count();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, V - 1);

    DiameterResult best;
    best.d_int = -1.0;
    for (int r = 0; r < restarts; ++r) {
        int u = (r == 0) ? 0 : pick(rng);
        double prev = -1.0;
        for (int it = 0; it < max_iters; ++it) {
            const DistanceField field = graph.distances(u);
            int far_v = 0;
            double far_d = -1.0;
            for (int t = 0; t < V; ++t)
                if (field.vertex(t) > far_d) {
                    far_d = field.vertex(t);
                    far_v = t;
                }
            if (far_d > best.d_int) {
                best.d_int = far_d;
                best.v1 = std::min(u, far_v);
                best.v2 = std::max(u, far_v);
            }
            if (far_d <= prev * (1.0 + 1e-12))
                break;
            prev = far_d;
            u = far_v;
        }
    }
    return best;
}

ExtrinsicDiameter extrinsic_diameter(const Immersion& imm) {
    if (imm.ambient.kind() != AmbientSpace::Kind::Flat)
        throw Error(ErrorCode::InvalidArgument, "extrinsic diameter needs a flat ambient space");
    const int V = imm.num_vertices();
    ExtrinsicDiameter best;
    for (int i = 0; i < V; ++i) {
        for (int j = i + 1; j < V; ++j) {
            const double d2 = (imm.positions.row(i) - imm.positions.row(j)).squaredNorm();
            if (d2 > best.d_ext) {
                best.d_ext = d2;
                best.v1 = i;
                best.v2 = j;
            }
        }
    }
    best.d_ext = std::sqrt(best.d_ext);
    return best;
}

} // namespace dmc
