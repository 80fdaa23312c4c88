#pragma once

#include <limits>
#include <optional>
#include <string>

namespace dmc {

/// Upper bound b on the sectional curvatures of the ambient space N,
/// K_N <= b^2.  b is a positive real, zero, or pure imaginary i*beta
/// (so Imaginary(beta) encodes K_N <= -beta^2).
struct CurvatureBound {
    enum class Kind { PositiveReal, Zero, Imaginary };

    Kind kind = Kind::Zero;
    double magnitude = 0.0; // b for PositiveReal, beta for Imaginary, unused for Zero

    static CurvatureBound positive_real(double b);
    static CurvatureBound zero() { return {Kind::Zero, 0.0}; }
    static CurvatureBound imaginary(double beta);

    /// b^2 as a signed real: b^2, 0, or -beta^2.
    double squared() const;
    std::string describe() const;
};

constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

/// Inputs of the admissibility conditions: manifold dimension m >= 2,
/// interpolation parameter alpha in (0,1), the ambient curvature bound,
/// the intrinsic m-volume of M, and the injectivity radius of N
/// restricted to M (+inf allowed).
struct AdmissibilityInput {
    int m = 2;
    double alpha = 0.0;
    CurvatureBound bound;
    double volume = 0.0;
    double inj_radius = kInfiniteRadius;

    void validate() const; // throws Error(InvalidArgument) on bad fields
};

enum class AdmissReason { Ok, VolumeTooLarge, InjectivityTooSmall };

const char* admiss_reason_name(AdmissReason r);

struct AdmissibilityVerdict {
    bool admissible = false;
    AdmissReason reason = AdmissReason::Ok;
    std::optional<double> rho0; // defined whenever the volume condition holds
    double condition_lhs = 0.0; // b^2 (1-alpha)^{-2/m} (Vol/omega_m)^{2/m}
    std::string detail;
};

/// Everything the closed-form side of the theorem produces for one
/// (m, alpha, bound, volume, inj_radius) tuple.
struct ConstantsBundle {
    int m = 2;
    double alpha = 0.0;
    double c = 0.0;     // Sobolev constant c(m, alpha)
    double delta = 0.0; // dichotomy constant, in (0, omega_m)
    double C = 0.0;     // diameter constant, C = 4 delta^{1-m}
    AdmissibilityVerdict verdict;
};

/// Volume of the unit ball in R^m.
double unit_ball_volume(int m);

/// c(m, beta) = pi 2^{m-1} beta^{-1} (1-beta)^{-1/m} (m/(m-1)) omega_m^{-1/m}.
/// Rejects m < 2: the m/(m-1) factor excludes curves.
double sobolev_constant(int m, double beta);

/// rho_0 for the given bound.  Real b uses b^{-1} asin(b (1-alpha)^{-1/m}
/// (Vol/omega_m)^{1/m}) and throws Error(ArcsinDomain) when the argument
/// exceeds 1.  Zero and Imaginary use the limit formula
/// (1-alpha)^{-1/m} (Vol/omega_m)^{1/m}.
double rho0(int m, const CurvatureBound& bound, double volume, double alpha);

/// Evaluates both admissibility conditions.  Inadmissibility is a verdict,
/// never an exception.  With use_strong_injectivity the injectivity
/// condition for real b becomes inj_radius >= pi/b instead of 2 rho0.
AdmissibilityVerdict check_admissibility(const AdmissibilityInput& input,
                                         bool use_strong_injectivity = false);

/// Largest delta in (0, omega_m) with
///   m delta + delta^{(2m-3)/(m-1)} <= c(m,alpha)^{-1} delta^{(m-1)/m}
/// holding on (0, delta].  Bisection to relative tolerance 1e-12; for m=2
/// the root has the closed form alpha^2 (1-alpha) / (144 pi).
double solve_delta(int m, double alpha);

/// Diameter constant C(m, alpha) = 4 solve_delta(m, alpha)^{1-m}.
double diameter_constant(int m, double alpha);

struct OptimalAlpha {
    double alpha_star = 0.0;
    double C_min = 0.0;
};

/// Minimizes diameter_constant over alpha in (0,1) by a coarse grid plus
/// golden-section refinement; the minimizer lands on m/(m+1).
OptimalAlpha optimal_alpha(int m);

/// Bundles c, delta, C and the admissibility verdict for one input tuple.
ConstantsBundle constants_bundle(const AdmissibilityInput& input,
                                 bool use_strong_injectivity = false);

} // namespace dmc
