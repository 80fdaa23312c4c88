#pragma once

#include "dmc/ambient.hpp"

#include <Eigen/Core>

#include <string>

namespace dmc {

/// Normalization of the mean curvature vector: Trace is the sum of
/// principal curvatures (the unnormalized trace of the second fundamental
/// form), Average divides by the surface dimension m.
enum class Convention { Trace, Average };

const char* convention_name(Convention c);
Convention parse_convention(const std::string& s);

/// Per-sample mean curvature vectors in ambient embedding coordinates,
/// together with their magnitudes.  Stored in the Trace convention;
/// Average values are derived views.
struct MeanCurvatureField {
    Eigen::MatrixXd vectors;   // V x embedding_dim, Trace convention
    Eigen::VectorXd magnitude; // |H| per sample, Trace convention
    Convention tag = Convention::Trace;

    Eigen::VectorXd magnitudes(Convention c, int m = 2) const {
        return c == Convention::Trace ? magnitude : (magnitude / double(m)).eval();
    }
};

/// A sampled closed immersed surface: triangle complex with intrinsic side
/// lengths, per-triangle areas, per-vertex measures, and a mean curvature
/// field.  Flat triangle meshes, periodic chart grids and sphere-topology
/// chart samplings all land in this one representation; everything
/// intrinsic downstream (distances, profiles, verifiers) only reads the
/// fields below.
struct Immersion {
    AmbientSpace ambient = AmbientSpace::flat(3);
    std::string name;

    Eigen::MatrixXd positions; // V x embedding_dim
    Eigen::MatrixXi triangles; // F x 3

    // Connectivity (filled by finalize_connectivity)
    Eigen::MatrixXi edges;      // E x 2, u < v
    Eigen::VectorXd edge_length;// E, intrinsic
    Eigen::MatrixXi face_edges; // F x 3, edge index of the side opposite corner j

    Eigen::VectorXd tri_area;  // F, from side lengths (Heron)
    Eigen::VectorXd dual_area; // V, vertex measure used by all integrals

    MeanCurvatureField curvature;

    int num_vertices() const { return static_cast<int>(positions.rows()); }
    int num_triangles() const { return static_cast<int>(triangles.rows()); }
    int num_edges() const { return static_cast<int>(edges.rows()); }
    int dim_m() const { return 2; }

    double side_length(int face, int corner) const { return edge_length[face_edges(face, corner)]; }
    double total_volume() const { return tri_area.sum(); }
    bool is_flat3() const {
        return ambient.kind() == AmbientSpace::Kind::Flat && ambient.dim() == 3;
    }

    /// Builds edges/face_edges and validates that the complex is closed,
    /// manifold, consistently oriented and connected.  Throws dmc::Error.
    void finalize_connectivity();

    /// Fills edge_length from ambient geodesic distances between endpoint
    /// samples, then tri_area by Heron.  Throws on degenerate triangles.
    void compute_intrinsic_metric();

    /// Obtuse-safe Voronoi-mixed vertex areas from side lengths alone;
    /// the three corner shares of each triangle partition its area.
    void compute_mixed_dual_areas();
};

/// Sum of triangle areas.
double total_area(const Immersion& imm);

/// \int_M |H|^{m-1} dmu with dual-area quadrature.
double hm1_integral(const Immersion& imm, int m, Convention conv);

/// \int_M |H|^2 dmu.
double willmore_energy(const Immersion& imm, Convention conv);

} // namespace dmc
