#ifndef VFRAC_V_INTEGRAL_HPP
#define VFRAC_V_INTEGRAL_HPP

#include "vfrac/fn_spec.hpp"
#include "vfrac/numerics.hpp"
#include "vfrac/special_functions.hpp"
#include "vfrac/v_operator.hpp"

#include <utility>

// The V-fractional integral (1/C) * integral_a^t f(x) x^(alpha-1) dx,
// its composition law, the Mittag-Leffler integral formula, and the
// Riemann-Liouville power-function closed forms used by the bridges.

namespace vfrac::v_integral {

using special_functions::MLParams;
using v_operator::Order;
using vfrac::expr::FnSpec;

struct IntervalSpec {
    double a = 0.0;
    double t = 1.0;
    void validate() const; // 0 <= a <= t, both finite
};

// I f(t) = (1/C) integral_a^t f(x) x^(alpha-1) dx. The a == 0 endpoint
// goes through the exact power substitution; elsewhere the weight is
// assembled as exp((alpha-1) ln x).
numerics::QuadratureResult integrate(const FnSpec& f, const IntervalSpec& iv,
                                     const Order& alpha,
                                     const MLParams& params,
                                     double tol = 1e-10);

// Composition law: returns {I_alpha(I_mu f)(t) by nested quadrature,
// (1/C)[(t^alpha/alpha) I_mu f(t) - (1/alpha) I_{alpha+mu} f(t)]}.
// The inner integral runs at tol/10.
std::pair<double, double>
integrate_composed(const FnSpec& f, const IntervalSpec& iv, const Order& alpha,
                   const Order& mu, const MLParams& params, double tol = 1e-8);

// V-fractional integral of E_{mu,kappa} as a term-wise integrated
// series: (1/C)[S(t) - S(a)] with
//   S(x) = sum_k x^(k+alpha) / ((k+alpha) Gamma(mu k + kappa)).
double ml_integrate(double mu, double kappa, const IntervalSpec& iv,
                    const Order& alpha, const MLParams& params,
                    double tol = 1e-14);

// Riemann-Liouville closed forms on power functions:
//   integral:   J^alpha t^mu = Gamma(mu+1)/Gamma(mu+1+alpha) t^(mu+alpha)
//   derivative: D^alpha t^mu = Gamma(mu+1)/Gamma(mu+1-alpha) t^(mu-alpha)
enum class RLMode { integral, derivative };
double rl_power(RLMode mode, double mu, const Order& alpha, double t);

} // namespace vfrac::v_integral

#endif
