#pragma once

#include "dmc/immersion.hpp"

#include <array>
#include <functional>

namespace dmc {

/// Smooth chart into ambient embedding coordinates.
using ChartFn = std::function<Eigen::VectorXd(double, double)>;

/// Direction on the unit 2-sphere -> ambient embedding point; used by the
/// sphere-topology builders (geodesic spheres, equators, round spheres).
using SphereChartFn = std::function<Eigen::VectorXd(const Eigen::Vector3d&)>;

struct FundamentalForms {
    Eigen::Matrix2d first;                  // induced metric at the node
    std::array<Eigen::VectorXd, 3> second;  // II_uu, II_uv, II_vv relative to N
    Eigen::VectorXd mean_curvature;         // Trace convention, normal to M in N
    double habs = 0.0;                      // |H| (Trace)
    Eigen::VectorXd tangent_u, tangent_v;   // projected first derivatives
};

/// First and second fundamental forms by central finite differences of the
/// chart.  Second derivatives are projected onto T_x N first and their
/// M-tangential part is removed, which leaves the second form of M in N.
/// Throws Error(SingularMetric) when det(first) <= 1e-12 * scale^2.
FundamentalForms fundamental_forms(const ChartFn& chart, double u, double v, double hu, double hv,
                                   const AmbientSpace& ambient);

/// Closed surface sampled from a doubly periodic chart on an nu x nv grid.
/// Vertex measures are sqrt(det g) du dv; triangle areas come from the
/// intrinsic side lengths.  max_constraint_residual reports the worst
/// model-space constraint violation among the samples.
Immersion build_chart_grid(const ChartFn& chart, double u_period, double v_period, int nu, int nv,
                           const AmbientSpace& ambient, const std::string& name);

/// Sphere-topology surface from a map on unit directions, sampled at
/// icosphere vertices of the given subdivision level.  Mean curvature at
/// each sample comes from a local orthogonal chart through that direction,
/// differentiated with step fd_step.
Immersion build_sphere_chart(const SphereChartFn& chart, const AmbientSpace& ambient, int level,
                             const std::string& name, double fd_step = 1e-3);

/// Icosphere topology: unit directions and faces at subdivision level
/// (level 0 = icosahedron, 10*4^level + 2 vertices).
void icosphere_topology(int level, Eigen::MatrixXd& directions, Eigen::MatrixXi& faces);

/// Worst |constraint(x)| over samples; 0 in flat ambients.
double max_constraint_residual(const Immersion& imm);

} // namespace dmc
