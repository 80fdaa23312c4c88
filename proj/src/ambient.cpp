#include "dmc/ambient.hpp"

#include "dmc/errors.hpp"

#include <cmath>
#include <sstream>

namespace dmc {

AmbientSpace AmbientSpace::flat(int n) {
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "ambient dimension must be >= 2");
    return {Kind::Flat, n, 0.0};
}

AmbientSpace AmbientSpace::round_sphere(int n, double b) {
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "ambient dimension must be >= 2");
    if (!(b > 0.0))
        throw Error(ErrorCode::InvalidArgument, "sphere curvature parameter b must be > 0");
    return {Kind::RoundSphere, n, b};
}

AmbientSpace AmbientSpace::hyperbolic(int n, double beta) {
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "ambient dimension must be >= 2");
    if (!(beta > 0.0))
        throw Error(ErrorCode::InvalidArgument, "hyperbolic curvature parameter beta must be > 0");
    return {Kind::Hyperbolic, n, beta};
}

int AmbientSpace::embedding_dim() const {
    return kind_ == Kind::Flat ? n_ : n_ + 1;
}

CurvatureBound AmbientSpace::curvature_bound() const {
    switch (kind_) {
    case Kind::Flat: return CurvatureBound::zero();
    case Kind::RoundSphere: return CurvatureBound::positive_real(param_);
    case Kind::Hyperbolic: return CurvatureBound::imaginary(param_);
    }
    return CurvatureBound::zero();
}

double AmbientSpace::inj_radius_restricted() const {
    return kind_ == Kind::RoundSphere ? M_PI / param_ : kInfiniteRadius;
}

double AmbientSpace::inner(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    if (kind_ == Kind::Hyperbolic) {
        const int d = static_cast<int>(u.size());
        return u.head(d - 1).dot(v.head(d - 1)) - u[d - 1] * v[d - 1];
    }
    return u.dot(v);
}

double AmbientSpace::geodesic_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    switch (kind_) {
    case Kind::Flat:
        return (x - y).norm();
    case Kind::RoundSphere: {
        const double c = std::clamp(param_ * param_ * x.dot(y), -1.0, 1.0);
        return std::acos(c) / param_;
    }
    case Kind::Hyperbolic: {
        const double c = std::max(1.0, -param_ * param_ * inner(x, y));
        return std::acosh(c) / param_;
    }
    }
    return 0.0;
}

double AmbientSpace::constraint_residual(const Eigen::VectorXd& x) const {
    switch (kind_) {
    case Kind::Flat: return 0.0;
    case Kind::RoundSphere: return std::abs(x.dot(x) - 1.0 / (param_ * param_));
    case Kind::Hyperbolic: return std::abs(inner(x, x) + 1.0 / (param_ * param_));
    }
    return 0.0;
}

Eigen::VectorXd AmbientSpace::project_to_model(const Eigen::VectorXd& x) const {
    switch (kind_) {
    case Kind::Flat:
        return x;
    case Kind::RoundSphere:
        return x / (param_ * x.norm());
    case Kind::Hyperbolic: {
        // Rescale along the ray from the origin onto <x,x> = -1/beta^2.
        const double q = -inner(x, x);
        if (!(q > 0.0))
            throw Error(ErrorCode::InvalidArgument, "point is not timelike");
        return x / (param_ * std::sqrt(q));
    }
    }
    return x;
}

Eigen::VectorXd AmbientSpace::project_tangent(const Eigen::VectorXd& x,
                                              const Eigen::VectorXd& v) const {
    switch (kind_) {
    case Kind::Flat:
        return v;
    case Kind::RoundSphere:
        // <x,x> = 1/b^2, normal direction is x itself.
        return v - (param_ * param_ * x.dot(v)) * x;
    case Kind::Hyperbolic:
        // <x,x> = -1/beta^2; P(v) = v - (<v,x>/<x,x>) x.
        return v + (param_ * param_ * inner(v, x)) * x;
    }
    return v;
}

std::string AmbientSpace::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Flat: os << "flat R^" << n_; break;
    case Kind::RoundSphere: os << "round sphere S^" << n_ << " (b=" << param_ << ")"; break;
    case Kind::Hyperbolic: os << "hyperbolic H^" << n_ << " (beta=" << param_ << ")"; break;
    }
    return os.str();
}

} // namespace dmc
