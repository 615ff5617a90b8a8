#ifndef VFRAC_NUMERICS_HPP
#define VFRAC_NUMERICS_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

// Shared numerical kernels: Richardson/Neville extrapolation of a
// sampled quantity to eps = 0, adaptive Simpson quadrature with an
// exact power substitution for the x^(alpha-1) weight at 0, and
// bracketed bisection with a grid pre-scan.

namespace vfrac::numerics {

using Fn = std::function<double(double)>;

// Geometric ladder eps0 * ratio^j, j = 0..levels-1.
struct EpsilonSchedule {
    double eps0 = 1e-3;
    double ratio = 0.5;
    int levels = 6;

    void validate() const; // eps0 > 0, ratio in (0,1), levels >= 2
    std::vector<double> steps() const;
};

struct ExtrapolationResult {
    double value;
    double err_estimate; // size of the last extrapolation correction
};

// Neville interpolation through (eps_j, q_j) evaluated at eps = 0.
// Samples must have strictly decreasing positive eps. Throws
// DivergenceError when the diagonal corrections blow up monotonically.
ExtrapolationResult
extrapolated_limit(const std::vector<std::pair<double, double>>& samples);

// Sample q on the schedule, then extrapolate.
ExtrapolationResult extrapolated_limit(const Fn& q,
                                       const EpsilonSchedule& sched);

struct QuadratureResult {
    double value;
    double err_estimate;
    int subdivisions; // accepted leaf intervals, >= 1
};

// Adaptive Simpson on [a, b] with recursion depth capped at 40.
// An integrable power singularity at a == 0 is detected from the local
// growth exponent and removed by the substitution x = u^m. Throws
// ConvergenceError when the integrand looks non-integrable or the
// depth cap is hit with the error budget blown.
QuadratureResult adaptive_quad(const Fn& f, double a, double b, double tol);

// Integral of f(x) * x^(alpha-1) over [a, b], a >= 0. For a == 0 the
// substitution u = x^alpha turns the weight into a constant, so the
// endpoint is exact rather than detected.
QuadratureResult adaptive_quad_power_weight(const Fn& f, double alpha,
                                            double a, double b, double tol);

// Bisection on a sign-changing bracket. Throws NoBracketError when
// g(lo) and g(hi) have the same sign.
double find_root_bracketed(const Fn& g, double lo, double hi, double tol);

// Scan [lo, hi] with a uniform grid and return the first cell whose
// endpoints have opposite signs, if any.
std::optional<std::pair<double, double>> scan_bracket(const Fn& g, double lo,
                                                      double hi,
                                                      int cells = 256);

} // namespace vfrac::numerics

#endif
