#include "vfrac/v_integral.hpp"
#include "vfrac/errors.hpp"

#include <cmath>
#include <string>

namespace vfrac::v_integral {

namespace sf = vfrac::special_functions;
namespace num = vfrac::numerics;

void IntervalSpec::validate() const {
    if (!std::isfinite(a) || !std::isfinite(t))
        throw DomainError("IntervalSpec: endpoints must be finite");
    if (!(a >= 0.0))
        throw DomainError("IntervalSpec: requires a >= 0");
    if (!(a <= t))
        throw DomainError("IntervalSpec: requires a <= t");
}

num::QuadratureResult integrate(const FnSpec& f, const IntervalSpec& iv,
                                const Order& alpha, const MLParams& params,
                                double tol) {
    iv.validate();
    alpha.validate();
    params.validate();
    if (!(tol > 0.0)) throw DomainError("integrate: tol must be positive");
    if (iv.a == iv.t) return {0.0, 0.0, 1};

    const double c = v_operator::coefficient(params);
    const auto fn = [&f](double x) { return f(x); };
    num::QuadratureResult r =
        num::adaptive_quad_power_weight(fn, alpha.alpha, iv.a, iv.t, tol * c);
    r.value /= c;
    r.err_estimate /= c;
    return r;
}

std::pair<double, double>
integrate_composed(const FnSpec& f, const IntervalSpec& iv, const Order& alpha,
                   const Order& mu, const MLParams& params, double tol) {
    iv.validate();
    alpha.validate();
    mu.validate();
    params.validate();
    if (!(alpha.alpha + mu.alpha < 2.0))
        throw DomainError("integrate_composed: requires alpha + mu < 2");
    if (!(tol > 0.0))
        throw DomainError("integrate_composed: tol must be positive");

    const double inner_tol = tol / 10.0;
    const FnSpec inner = FnSpec::make(
        "I_mu f", [&f, &iv, &mu, &params, inner_tol](double x) {
            return integrate(f, {iv.a, x}, mu, params, inner_tol).value;
        });

    const double lhs = integrate(inner, iv, alpha, params, tol).value;

    const double c = v_operator::coefficient(params);
    const double i_mu_t = integrate(f, iv, mu, params, inner_tol).value;
    const Order sum_order(alpha.alpha + mu.alpha);
    const double i_sum_t = integrate(f, iv, sum_order, params, inner_tol).value;
    const double a = alpha.alpha;
    const double rhs =
        (1.0 / c) * ((std::pow(iv.t, a) / a) * i_mu_t - i_sum_t / a);
    return {lhs, rhs};
}

namespace {

// S(x) = sum_k x^(k+alpha) / ((k+alpha) Gamma(mu k + kappa)), the
// term-wise V-integral of the E_{mu,kappa} series from 0 to x.
double ml_integral_series(double mu, double kappa, double alpha, double x,
                          double tol) {
    if (x == 0.0) return 0.0;
    if (x > 50.0)
        throw DomainError("ml_integrate: upper limit exceeds the series "
                          "evaluation cap of 50");
    const double log_x = std::log(x);
    double sum = 0.0;
    int consecutive_small = 0;
    for (int k = 0; k <= 1000; ++k) {
        const double lt = (k + alpha) * log_x -
                          sf::log_gamma(mu * k + kappa).log_abs -
                          std::log(k + alpha);
        const double term = std::exp(lt);
        sum += term;
        if (std::fabs(term) < tol * std::max(1.0, std::fabs(sum))) {
            if (++consecutive_small == 3) return sum;
        } else {
            consecutive_small = 0;
        }
    }
    throw ConvergenceError(
        "ml_integrate: series did not converge within 1000 terms");
}

} // namespace

double ml_integrate(double mu, double kappa, const IntervalSpec& iv,
                    const Order& alpha, const MLParams& params, double tol) {
    iv.validate();
    alpha.validate();
    params.validate();
    if (!(mu > 0.0) || !(kappa > 0.0))
        throw DomainError("ml_integrate: mu and kappa must be positive");
    if (!(tol > 0.0)) throw DomainError("ml_integrate: tol must be positive");
    if (iv.a == iv.t) return 0.0;

    const double a = alpha.alpha;
    const double s_t = ml_integral_series(mu, kappa, a, iv.t, tol);
    const double s_a = ml_integral_series(mu, kappa, a, iv.a, tol);
    return (s_t - s_a) / v_operator::coefficient(params);
}

double rl_power(RLMode mode, double mu, const Order& alpha, double t) {
    alpha.validate();
    if (alpha.n != 0)
        throw DomainError("rl_power: alpha must lie in (0, 1]");
    if (!(mu > -1.0))
        throw DomainError("rl_power: requires mu > -1");
    if (!(t > 0.0))
        throw DomainError("rl_power: requires t > 0");

    const double a = alpha.alpha;
    const sf::SignedLog num_lg = sf::log_gamma(mu + 1.0);
    if (mode == RLMode::integral) {
        const sf::SignedLog den_lg = sf::log_gamma(mu + 1.0 + a);
        return num_lg.sign * den_lg.sign *
               std::exp(num_lg.log_abs - den_lg.log_abs +
                        (mu + a) * std::log(t));
    }
    sf::SignedLog den_lg;
    try {
        den_lg = sf::log_gamma(mu + 1.0 - a);
    } catch (const PoleError&) {
        throw PoleError("rl_power: Gamma pole at mu + 1 - alpha = " +
                        std::to_string(mu + 1.0 - a));
    }
    return num_lg.sign * den_lg.sign *
           std::exp(num_lg.log_abs - den_lg.log_abs + (mu - a) * std::log(t));
}

} // namespace vfrac::v_integral
