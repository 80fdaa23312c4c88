#pragma once

#include "dmc/constants.hpp"

#include <Eigen/Core>

#include <string>

namespace dmc {

/// Constant-curvature model spaces N.  The round sphere of curvature b^2
/// lives as the radius-1/b sphere in Euclidean R^{n+1}; hyperbolic space of
/// curvature -beta^2 as the upper hyperboloid <x,x> = -1/beta^2 in Minkowski
/// R^{n,1} with the time coordinate stored last.
class AmbientSpace {
public:
    enum class Kind { Flat, RoundSphere, Hyperbolic };

    static AmbientSpace flat(int n);
    static AmbientSpace round_sphere(int n, double b);
    static AmbientSpace hyperbolic(int n, double beta);

    Kind kind() const { return kind_; }
    int dim() const { return n_; }
    double curvature_param() const { return param_; } // b or beta
    int embedding_dim() const;

    CurvatureBound curvature_bound() const;
    /// Injectivity radius of N restricted to any subset: +inf except pi/b
    /// on the round sphere.
    double inj_radius_restricted() const;

    /// Euclidean or Minkowski inner product of embedding vectors.
    double inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

    /// Geodesic distance in N between two embedded points of N.
    double geodesic_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

    /// |<x,x> - model constraint|; zero for Flat.
    double constraint_residual(const Eigen::VectorXd& x) const;

    /// Rescales x onto the model hypersurface (no-op for Flat).
    Eigen::VectorXd project_to_model(const Eigen::VectorXd& x) const;

    /// Orthogonal projection of an ambient vector onto T_x N.
    Eigen::VectorXd project_tangent(const Eigen::VectorXd& x, const Eigen::VectorXd& v) const;

    std::string describe() const;

private:
    AmbientSpace(Kind k, int n, double p) : kind_(k), n_(n), param_(p) {}

    Kind kind_ = Kind::Flat;
    int n_ = 3;
    double param_ = 0.0;
};

} // namespace dmc
