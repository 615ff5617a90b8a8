#ifndef VFRAC_V_OPERATOR_HPP
#define VFRAC_V_OPERATOR_HPP

#include "vfrac/fn_spec.hpp"
#include "vfrac/numerics.hpp"
#include "vfrac/special_functions.hpp"

#include <functional>
#include <utility>

// The truncated V-fractional derivative: the limit definition built
// from the truncated H function, its closed form C t^(1-alpha) f'(t),
// the n-th order extension, order composition, and the closed-form
// derivative of the two-parameter Mittag-Leffler function.

namespace vfrac::v_operator {

using special_functions::MLParams;
using vfrac::expr::FnSpec;

// Fractional order alpha in (n, n+1].
struct Order {
    double alpha = 0.5;
    int n = 0;

    Order() = default;
    explicit Order(double a);
    void validate() const;
};

struct OperatorConfig {
    MLParams params;
    Order order{};
    int trunc_i = 3; // truncation index of the H function
    // eps0 == 0 means auto: 1e-3 * t^alpha, resolved at the call site.
    numerics::EpsilonSchedule schedule{0.0, 0.5, 6};
    double tol = 1e-6;        // closed/limit agreement target
    bool fd_fallback = false; // numeric f' when none is attached

    void validate() const;
};

// C = Gamma(beta) (rho)_q / (Gamma(gamma+beta) (delta)_p), the slope
// of the truncated H function at 0. Exactly 1 for all-ones params.
double coefficient(const MLParams& params);
double log_coefficient(const MLParams& params);

// Closed form C t^(n+1-alpha) f^(n+1)(t), t > 0. For base orders
// (n = 0) this is C t^(1-alpha) f'(t).
double deriv_closed(const FnSpec& f, double t, const OperatorConfig& cfg);

// Difference quotient [f^(n)(t * iH(eps t^(n-alpha))) - f^(n)(t)] / eps
// extrapolated to eps = 0 with the config's epsilon ladder.
double deriv_limit(const FnSpec& f, double t, const OperatorConfig& cfg);

// Same limit, but the caller supplies the increment
// delta(t1, t2) == f(t2) - f(t1) so cancellation can be done
// analytically (quadrature-backed functions need this).
double deriv_limit_increment(
    const std::function<double(double, double)>& delta, double t,
    const OperatorConfig& cfg);

// n-th order closed form; alias of deriv_closed kept for call sites
// that want the extension to be explicit.
double deriv_n_closed(const FnSpec& f, double t, const OperatorConfig& cfg);

// The operator as a FnSpec, so it can be differentiated or fed back in.
FnSpec apply_closed(const FnSpec& f, const OperatorConfig& cfg);

// Generalized derivative G_r h = C t^(1-r) h'(t) for any real r; the
// order-composition identity extends the closed form beyond (0, 1].
double generalized_deriv(const FnSpec& h, double t, double r,
                         const MLParams& params);

// Order composition: returns {D^alpha(D^mu f)(t), the composed closed
// form C[(1-mu) G_{alpha+mu} f + t G_{alpha+mu} f']}. The two agree;
// neither equals D^{alpha+mu} f in general.
std::pair<double, double> compose_orders(const FnSpec& f, double t,
                                         double alpha, double mu,
                                         const MLParams& params);

// D^alpha E_{mu,kappa}(t) = C t^(n+1-alpha) (n+1)! E^{n+2}_{mu, kappa+mu(n+1)}(t)
// with n the integer part of the extended order, n < alpha <= n+1.
double ml_deriv(double mu, double kappa, double t, const OperatorConfig& cfg,
                int n = 0);

// Right limit t -> 0+ of the closed form, evaluated on a decreasing
// t-grid and extrapolated.
double deriv_at_zero(const FnSpec& f, const OperatorConfig& cfg,
                     double t0 = 1e-2);

} // namespace vfrac::v_operator

#endif
