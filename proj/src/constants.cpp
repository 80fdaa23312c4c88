#include "dmc/constants.hpp"

#include "dmc/errors.hpp"

#include <cmath>
#include <sstream>

namespace dmc {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::OpenBoundary: return "OPEN_BOUNDARY";
    case ErrorCode::NonManifoldEdge: return "NON_MANIFOLD_EDGE";
    case ErrorCode::NonOrientable: return "NON_ORIENTABLE";
    case ErrorCode::Disconnected: return "DISCONNECTED";
    case ErrorCode::DegenerateTriangle: return "DEGENERATE_TRIANGLE";
    case ErrorCode::ArcsinDomain: return "ARCSIN_DOMAIN";
    case ErrorCode::SingularMetric: return "SINGULAR_METRIC";
    case ErrorCode::NoRadius: return "NO_RADIUS";
    case ErrorCode::UnknownGenerator: return "UNKNOWN_GENERATOR";
    case ErrorCode::ParameterRange: return "PARAMETER_RANGE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

const char* admiss_reason_name(AdmissReason r) {
    switch (r) {
    case AdmissReason::Ok: return "OK";
    case AdmissReason::VolumeTooLarge: return "VOLUME_TOO_LARGE";
    case AdmissReason::InjectivityTooSmall: return "INJECTIVITY_TOO_SMALL";
    }
    return "UNKNOWN";
}

CurvatureBound CurvatureBound::positive_real(double b) {
    if (!(b > 0.0))
        throw Error(ErrorCode::InvalidArgument, "curvature bound b must be > 0");
    return {Kind::PositiveReal, b};
}

CurvatureBound CurvatureBound::imaginary(double beta) {
    if (!(beta > 0.0))
        throw Error(ErrorCode::InvalidArgument, "curvature bound beta must be > 0");
    return {Kind::Imaginary, beta};
}

double CurvatureBound::squared() const {
    switch (kind) {
    case Kind::PositiveReal: return magnitude * magnitude;
    case Kind::Zero: return 0.0;
    case Kind::Imaginary: return -magnitude * magnitude;
    }
    return 0.0;
}

std::string CurvatureBound::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::PositiveReal: os << "b=" << magnitude; break;
    case Kind::Zero: os << "b=0"; break;
    case Kind::Imaginary: os << "b=i*" << magnitude; break;
    }
    return os.str();
}

void AdmissibilityInput::validate() const {
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "m must be >= 2");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0,1)");
    if (!(volume > 0.0))
        throw Error(ErrorCode::InvalidArgument, "volume must be > 0");
    if (!(inj_radius > 0.0))
        throw Error(ErrorCode::InvalidArgument, "inj_radius must be > 0");
}

double unit_ball_volume(int m) {
    if (m < 1)
        throw Error(ErrorCode::InvalidArgument, "unit_ball_volume needs m >= 1");
    return std::pow(M_PI, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
}

double sobolev_constant(int m, double beta) {
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "sobolev_constant needs m >= 2");
    if (!(beta > 0.0 && beta < 1.0))
        throw Error(ErrorCode::InvalidArgument, "beta must lie in (0,1)");
    const double md = m;
    return M_PI * std::pow(2.0, md - 1.0) / beta * std::pow(1.0 - beta, -1.0 / md) *
           (md / (md - 1.0)) * std::pow(unit_ball_volume(m), -1.0 / md);
}

namespace {

// (1-alpha)^{-1/m} (Vol/omega_m)^{1/m}, shared by both rho0 branches.
double rho0_scale(int m, double volume, double alpha) {
    return std::pow(1.0 - alpha, -1.0 / m) * std::pow(volume / unit_ball_volume(m), 1.0 / m);
}

} // namespace

double rho0(int m, const CurvatureBound& bound, double volume, double alpha) {
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "rho0 needs m >= 2");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0,1)");
    if (!(volume > 0.0))
        throw Error(ErrorCode::InvalidArgument, "volume must be > 0");

    const double scale = rho0_scale(m, volume, alpha);
    if (bound.kind == CurvatureBound::Kind::PositiveReal) {
        const double b = bound.magnitude;
        const double arg = b * scale;
        if (arg > 1.0) {
            std::ostringstream os;
            os << "asin argument " << arg << " exceeds 1";
            throw Error(ErrorCode::ArcsinDomain, os.str());
        }
        return std::asin(arg) / b;
    }
    // Zero is evaluated through the imaginary-branch formula; it is the
    // b -> 0 limit of b^{-1} asin(b x) = x.
    return scale;
}

AdmissibilityVerdict check_admissibility(const AdmissibilityInput& input,
                                         bool use_strong_injectivity) {
    input.validate();
    AdmissibilityVerdict v;

    const double scale = rho0_scale(input.m, input.volume, input.alpha);
    v.condition_lhs = input.bound.squared() * scale * scale;

    if (v.condition_lhs > 1.0) {
        v.admissible = false;
        v.reason = AdmissReason::VolumeTooLarge;
        std::ostringstream os;
        os << "b^2 (1-alpha)^{-2/m} (Vol/omega_m)^{2/m} = " << v.condition_lhs << " > 1";
        v.detail = os.str();
        return v;
    }

    // The volume condition guarantees the asin argument is at most 1.
    v.rho0 = rho0(input.m, input.bound, input.volume, input.alpha);

    bool inj_ok;
    std::ostringstream os;
    if (use_strong_injectivity && input.bound.kind == CurvatureBound::Kind::PositiveReal) {
        const double needed = M_PI / input.bound.magnitude;
        inj_ok = input.inj_radius >= needed;
        os << "strong condition: inj_radius " << input.inj_radius << " vs pi/b " << needed;
    } else {
        inj_ok = 2.0 * *v.rho0 <= input.inj_radius;
        os << "2 rho0 = " << 2.0 * *v.rho0 << " vs inj_radius " << input.inj_radius;
    }
    v.detail = os.str();

    if (!inj_ok) {
        v.admissible = false;
        v.reason = AdmissReason::InjectivityTooSmall;
        return v;
    }
    v.admissible = true;
    v.reason = AdmissReason::Ok;
    return v;
}

namespace {

// Residual of the smallness inequality; the admissible deltas are exactly
// the sublevel set {g <= 0} below the unique positive root.
double delta_residual(int m, double inv_c, double delta) {
    const double md = m;
    return md * delta + std::pow(delta, (2.0 * md - 3.0) / (md - 1.0)) -
           inv_c * std::pow(delta, (md - 1.0) / md);
}

} // namespace

double solve_delta(int m, double alpha) {
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "solve_delta needs m >= 2");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0,1)");

    const double inv_c = 1.0 / sobolev_constant(m, alpha);
    double lo = 1e-300;
    double hi = unit_ball_volume(m) * (1.0 - 1e-12);
    if (delta_residual(m, inv_c, hi) <= 0.0)
        return hi; // root beyond omega_m; clamp to the constraint delta < omega_m

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (delta_residual(m, inv_c, mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * lo)
            break;
    }
    return 0.5 * (lo + hi);
}

double diameter_constant(int m, double alpha) {
    const double delta = solve_delta(m, alpha);
    return 4.0 * std::pow(delta, 1.0 - static_cast<double>(m));
}

OptimalAlpha optimal_alpha(int m) {
    // Coarse scan, then golden-section refinement on the bracketing interval.
    double best_alpha = 0.5;
    double best_C = std::numeric_limits<double>::infinity();
    const int grid = 99;
    for (int i = 1; i <= grid; ++i) {
        const double a = static_cast<double>(i) / (grid + 1);
        const double C = diameter_constant(m, a);
        if (C < best_C) {
            best_C = C;
            best_alpha = a;
        }
    }

    const double step = 1.0 / (grid + 1);
    double lo = std::max(1e-9, best_alpha - step);
    double hi = std::min(1.0 - 1e-9, best_alpha + step);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = diameter_constant(m, x1);
    double f2 = diameter_constant(m, x2);
    while (hi - lo > 1e-8) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = diameter_constant(m, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = diameter_constant(m, x2);
        }
    }
    OptimalAlpha out;
    out.alpha_star = 0.5 * (lo + hi);
    out.C_min = diameter_constant(m, out.alpha_star);
    return out;
}

ConstantsBundle constants_bundle(const AdmissibilityInput& input, bool use_strong_injectivity) {
    ConstantsBundle b;
    b.m = input.m;
    b.alpha = input.alpha;
    b.c = sobolev_constant(input.m, input.alpha);
    b.delta = solve_delta(input.m, input.alpha);
    b.C = 4.0 * std::pow(b.delta, 1.0 - static_cast<double>(input.m));
    b.verdict = check_admissibility(input, use_strong_injectivity);
    return b;
}

} // namespace dmc
