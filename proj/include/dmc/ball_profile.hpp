#pragma once

#include "dmc/immersion.hpp"
#include "dmc/surface_graph.hpp"

#include <vector>

namespace dmc {

/// Volume profile V(x,r) of intrinsic balls around one center sample,
/// evaluated on a grid of breakpoint radii (all vertex distances plus a
/// uniform refinement grid).  V is non-decreasing and saturates at the
/// total surface volume.
struct BallProfile {
    int center = 0;
    std::vector<double> radii;  // ascending
    std::vector<double> volume; // V(x,r) at radii
    double total_volume = 0.0;
    double d_max = 0.0; // saturation radius of the grid

    double value_at(double r) const; // piecewise-linear between grid radii
    void write_csv(const std::string& path) const;
};

/// Profile plus the ball integrals \int_{B(x,r)} |H| dmu on the same grid.
struct BallTables {
    BallProfile profile;
    std::vector<double> habs_integral;
    Convention convention = Convention::Trace;

    double integral_at(double r) const;
};

/// Clipped quantities per radius.  Triangles incident to the center use
/// the exact flat-triangle disk intersection (level sets of the distance
/// from a corner are circles in the unfolded triangle); all other
/// triangles clip the linear interpolant of the corner distances, whose
/// sublevel areas are exact for the interpolated field.  Ball integrals
/// of |H| use the linear interpolant everywhere.
BallTables compute_ball_tables(const Immersion& imm, const DistanceField& dist, int center,
                               Convention conv, const std::vector<double>& extra_radii = {},
                               int n_uniform = 256);

/// Convenience: distance field + tables in one call.
BallTables compute_ball_tables(const Immersion& imm, const SurfaceGraph& graph, int center,
                               Convention conv, const std::vector<double>& extra_radii = {},
                               int n_uniform = 256);

BallProfile ball_volume_profile(const Immersion& imm, const SurfaceGraph& graph, int center,
                                int n_uniform = 256);

/// Area of the disk of radius r around the origin intersected with the
/// triangle (O, A, B); exact.
double disk_corner_triangle_area(double ax, double ay, double bx, double by, double r);

/// Extrinsic clipped quantities in flat 3-space: area of
/// {p in M : |p - x| < r} and the integral of the per-vertex density over
/// it, both from per-triangle linear interpolation of the corner values.
struct ExtrinsicClip {
    double area = 0.0;
    double integral = 0.0;
};
ExtrinsicClip extrinsic_ball_clip(const Immersion& imm, const Eigen::Vector3d& x, double r,
                                  const Eigen::VectorXd& density);

double extrinsic_ball_area(const Immersion& imm, const Eigen::Vector3d& x, double r);

} // namespace dmc
