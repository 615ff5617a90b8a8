#include "vfrac/v_operator.hpp"
#include "vfrac/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace vfrac::v_operator {

namespace sf = vfrac::special_functions;
namespace num = vfrac::numerics;
using vfrac::expr::FnSpec;

Order::Order(double a) : alpha(a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("Order: alpha must be a positive finite real");
    n = static_cast<int>(std::ceil(a)) - 1;
    validate();
}

void Order::validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("Order: alpha must be a positive finite real");
    if (n < 0 || !(alpha > n) || !(alpha <= n + 1))
        throw DomainError("Order: require n < alpha <= n+1");
}

void OperatorConfig::validate() const {
    params.validate();
    order.validate();
    if (trunc_i < 1)
        throw DomainError("OperatorConfig: trunc_i must be >= 1");
    if (schedule.eps0 < 0.0 || !std::isfinite(schedule.eps0))
        throw DomainError("OperatorConfig: schedule.eps0 must be >= 0 "
                          "(0 = auto)");
    if (!(schedule.ratio > 0.0 && schedule.ratio < 1.0))
        throw DomainError("OperatorConfig: schedule.ratio must lie in (0, 1)");
    if (schedule.levels < 2)
        throw DomainError("OperatorConfig: schedule.levels must be >= 2");
    if (!(tol > 0.0))
        throw DomainError("OperatorConfig: tol must be positive");
}

double log_coefficient(const MLParams& params) {
    params.validate();
    // Written so paired log-gamma values cancel exactly for all-ones
    // parameters, making C == 1 bit-for-bit.
    const double log_num =
        sf::log_gamma(params.beta).log_abs +
        sf::log_gen_pochhammer(params.rho, params.q, 1).log_abs;
    const double log_den =
        sf::log_gamma(params.gamma + params.beta).log_abs +
        sf::log_gen_pochhammer(params.delta, params.p, 1).log_abs;
    return log_num - log_den;
}

double coefficient(const MLParams& params) {
    return std::exp(log_coefficient(params));
}

namespace {

void require_positive_t(double t, const char* who) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainError(std::string(who) +
                          ": requires t > 0 (t = " + std::to_string(t) + ")");
}

FnSpec nth_derivative(const FnSpec& f, int n, const OperatorConfig& cfg,
                      double t_hint) {
    FnSpec d = f;
    for (int i = 0; i < n; ++i) {
        if (!d.has_derivative()) {
            if (!cfg.fd_fallback)
                throw MissingDerivativeError(
                    "v_operator: '" + d.name() +
                    "' carries no derivative and fd_fallback is off");
            // Central-difference fallback, extrapolated on the ladder.
            const FnSpec base = d;
            const double h0 = 1e-3 * std::max(1.0, std::fabs(t_hint));
            d = FnSpec::make(
                base.name() + "'", [base, h0](double x) {
                    num::EpsilonSchedule sched{h0, 0.5, 6};
                    return num::extrapolated_limit(
                               [&](double h) {
                                   return (base(x + h) - base(x - h)) /
                                          (2.0 * h);
                               },
                               sched)
                        .value;
                });
        } else {
            d = d.derivative();
        }
    }
    return d;
}

num::EpsilonSchedule resolve_schedule(const OperatorConfig& cfg, double t) {
    num::EpsilonSchedule sched = cfg.schedule;
    if (sched.eps0 == 0.0) sched.eps0 = 1e-3 * std::pow(t, cfg.order.alpha);
    return sched;
}

} // namespace

double deriv_closed(const FnSpec& f, double t, const OperatorConfig& cfg) {
    cfg.validate();
    require_positive_t(t, "deriv_closed");
    const int n = cfg.order.n;
    const FnSpec fd = nth_derivative(f, n + 1, cfg, t);
    return coefficient(cfg.params) *
           std::pow(t, n + 1.0 - cfg.order.alpha) * fd(t);
}

double deriv_n_closed(const FnSpec& f, double t, const OperatorConfig& cfg) {
    return deriv_closed(f, t, cfg);
}

double deriv_limit(const FnSpec& f, double t, const OperatorConfig& cfg) {
    cfg.validate();
    require_positive_t(t, "deriv_limit");
    const int n = cfg.order.n;
    const FnSpec fn = nth_derivative(f, n, cfg, t);
    return deriv_limit_increment(
        [&fn](double t1, double t2) { return fn(t2) - fn(t1); }, t, cfg);
}

double deriv_limit_increment(
    const std::function<double(double, double)>& delta, double t,
    const OperatorConfig& cfg) {
    cfg.validate();
    require_positive_t(t, "deriv_limit");
    const double scale = std::pow(t, cfg.order.n - cfg.order.alpha);
    const num::EpsilonSchedule sched = resolve_schedule(cfg, t);
    const auto quotient = [&](double eps) {
        const double h = sf::h_eval(cfg.params, eps * scale, cfg.trunc_i);
        return delta(t, t * h) / eps;
    };
    return num::extrapolated_limit(quotient, sched).value;
}

FnSpec apply_closed(const FnSpec& f, const OperatorConfig& cfg) {
    cfg.validate();
    const int n = cfg.order.n;
    const FnSpec fd = nth_derivative(f, n + 1, cfg, 1.0);
    const double c = coefficient(cfg.params);
    return vfrac::expr::scale(
        c, vfrac::expr::product(
               vfrac::expr::catalog::power(n + 1.0 - cfg.order.alpha), fd));
}

double generalized_deriv(const FnSpec& h, double t, double r,
                         const MLParams& params) {
    require_positive_t(t, "generalized_deriv");
    if (!h.has_derivative())
        throw MissingDerivativeError(
            "generalized_deriv: '" + h.name() + "' carries no derivative");
    return coefficient(params) * std::pow(t, 1.0 - r) * h.derivative()(t);
}

std::pair<double, double> compose_orders(const FnSpec& f, double t,
                                         double alpha, double mu,
                                         const MLParams& params) {
    require_positive_t(t, "compose_orders");
    const Order oa(alpha);
    const Order om(mu);
    if (oa.n != 0 || om.n != 0)
        throw DomainError("compose_orders: both orders must lie in (0, 1]");

    OperatorConfig inner;
    inner.params = params;
    inner.order = om;
    const FnSpec df_mu = apply_closed(f, inner);

    OperatorConfig outer = inner;
    outer.order = oa;
    const double lhs = deriv_closed(df_mu, t, outer);

    const double c = coefficient(params);
    const double rhs =
        c * ((1.0 - mu) * generalized_deriv(f, t, alpha + mu, params) +
             t * generalized_deriv(f.derivative(), t, alpha + mu, params));
    return {lhs, rhs};
}

double ml_deriv(double mu, double kappa, double t, const OperatorConfig& cfg,
                int n) {
    cfg.validate();
    require_positive_t(t, "ml_deriv");
    if (!(mu > 0.0) || !(kappa > 0.0))
        throw DomainError("ml_deriv: mu and kappa must be positive");
    if (n < 0 || n != cfg.order.n)
        throw DomainError("ml_deriv: n must match the config order "
                          "(n < alpha <= n+1)");
    double factorial = 1.0; // (n+1)!
    for (int i = 2; i <= n + 1; ++i) factorial *= i;
    const double e3 = sf::ml_three(mu, kappa + mu * (n + 1), n + 2.0, t);
    return coefficient(cfg.params) *
           std::pow(t, n + 1.0 - cfg.order.alpha) * factorial * e3;
}

double deriv_at_zero(const FnSpec& f, const OperatorConfig& cfg, double t0) {
    cfg.validate();
    if (!(t0 > 0.0))
        throw DomainError("deriv_at_zero: t0 must be positive");
    std::vector<std::pair<double, double>> samples;
    double t = t0;
    for (int j = 0; j < cfg.schedule.levels; ++j, t *= cfg.schedule.ratio)
        samples.emplace_back(t, deriv_closed(f, t, cfg));
    return num::extrapolated_limit(samples).value;
}

} // namespace vfrac::v_operator
