#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vfrac/errors.hpp"
#include "vfrac/fn_spec.hpp"
#include "vfrac/v_integral.hpp"
#include "vfrac/v_operator.hpp"

#include <cmath>
#include <vector>

using namespace vfrac;
using namespace vfrac::v_integral;
using vfrac::expr::FnSpec;
namespace cat = vfrac::expr::catalog;
namespace op = vfrac::v_operator;
namespace sf = vfrac::special_functions;

namespace {

double relerr(double got, double want) {
    return std::fabs(got - want) / (1.0 + std::fabs(want));
}

const MLParams kSetB{1.2, 0.8, 1.5, 2.0, 1.1, 0.9};

} // namespace

TEST_CASE("interval validation") {
    CHECK_NOTHROW((IntervalSpec{0.0, 1.0}).validate());
    CHECK_NOTHROW((IntervalSpec{2.0, 2.0}).validate());
    CHECK_THROWS_AS((IntervalSpec{-0.1, 1.0}).validate(), DomainError);
    CHECK_THROWS_AS((IntervalSpec{1.0, 0.5}).validate(), DomainError);
}

TEST_CASE("integral closed forms") {
    auto ones = MLParams::all_ones();
    Order half(0.5);

    // I 1 over [0,1], alpha = 0.5: (1/C) * 2
    auto r = integrate(cat::constant(1.0), {0.0, 1.0}, half, ones);
    CHECK(relerr(r.value, 2.0) < 1e-12);

    // the weight cancels f = x^(1-alpha): I f = t - a
    auto s = integrate(cat::power(0.5), {0.0, 2.0}, half, ones);
    CHECK(relerr(s.value, 2.0) < 1e-11);
    auto s2 = integrate(cat::power(0.5), {0.5, 2.0}, half, ones);
    CHECK(relerr(s2.value, 1.5) < 1e-11);

    // frozen reference: integral_0.5^2 x^2 x^(-1/2) dx
    auto q = integrate(FnSpec::from_expression("t^2"), {0.5, 2.0}, half,
                       ones, 1e-12);
    CHECK(relerr(q.value, 2.192031021678297326) < 1e-12);

    // general parameters scale by 1/C
    auto qb = integrate(FnSpec::from_expression("t^2"), {0.5, 2.0}, half,
                        kSetB, 1e-12);
    CHECK(relerr(qb.value, 2.192031021678297326 / op::coefficient(kSetB)) <
          1e-11);

    // empty interval
    auto z = integrate(cat::exp_at(), {1.0, 1.0}, half, ones);
    CHECK(z.value == 0.0);
}

TEST_CASE("Mittag-Leffler integral series") {
    auto ones = MLParams::all_ones();
    Order half(0.5);

    // I e^x over [0,1], alpha = 0.5: integral_0^1 e^x x^(-1/2) dx
    double got = ml_integrate(1.0, 1.0, {0.0, 1.0}, half, ones);
    CHECK(relerr(got, 2.9253034918143632) < 1e-12);

    // against quadrature of the series-backed FnSpec
    for (auto [mu, kappa] : std::vector<std::pair<double, double>>{
             {1.0, 2.0}, {0.8, 1.2}, {1.5, 0.9}})
        for (const auto& p :
             std::vector<MLParams>{MLParams::all_ones(), kSetB}) {
            Order a(0.75);
            double series = ml_integrate(mu, kappa, {0.5, 2.0}, a, p);
            double quad =
                integrate(cat::mlf(mu, kappa), {0.5, 2.0}, a, p, 1e-12)
                    .value;
            CHECK(relerr(series, quad) < 1e-10);
        }

    // a == t collapses to zero
    CHECK(ml_integrate(1.0, 1.0, {1.0, 1.0}, half, ones) == 0.0);
}

TEST_CASE("composition of integrals") {
    auto ones = MLParams::all_ones();
    auto [lhs, rhs] = integrate_composed(cat::constant(1.0), {0.0, 1.0},
                                         Order(0.5), Order(0.5), ones);
    CHECK(relerr(lhs, 2.0) < 1e-7);
    CHECK(relerr(rhs, 2.0) < 1e-9);
    CHECK(relerr(lhs, rhs) < 1e-7);

    // indices do not add
    double single =
        integrate(cat::constant(1.0), {0.0, 1.0}, Order(1.0), ones).value;
    CHECK(relerr(single, 1.0) < 1e-12);

    auto [l2, r2] = integrate_composed(FnSpec::from_expression("t^2"),
                                       {0.5, 2.0}, Order(0.3), Order(0.4),
                                       kSetB);
    CHECK(relerr(l2, r2) < 1e-7);

    CHECK_THROWS_AS(integrate_composed(cat::constant(1.0), {0.0, 1.0},
                                       Order(1.0), Order(1.0), ones),
                    DomainError); // needs alpha + mu < 2
}

TEST_CASE("Riemann-Liouville power closed forms") {
    Order half(0.5);
    // J^0.5 t at t=2: Gamma(2)/Gamma(2.5) 2^1.5
    CHECK(relerr(rl_power(RLMode::integral, 1.0, half, 2.0),
                 2.127692162140974282) < 1e-14);
    // D^0.5 t at t=1: Gamma(2)/Gamma(1.5) = 2/sqrt(pi)
    CHECK(relerr(rl_power(RLMode::derivative, 1.0, half, 1.0),
                 1.1283791670955126) < 1e-14);
    // D^0.5 t^0.5 at t=1: Gamma(1.5)
    CHECK(relerr(rl_power(RLMode::derivative, 0.5, half, 1.0),
                 1.0 / 1.1283791670955126) < 1e-14);
    // J^alpha 1 = t^alpha / Gamma(alpha+1)
    CHECK(relerr(rl_power(RLMode::integral, 0.0, Order(0.25), 3.0),
                 std::pow(3.0, 0.25) / sf::gamma_fn(1.25)) < 1e-14);

    // D^1 t^0 hits the Gamma(0) pole
    CHECK_THROWS_AS(rl_power(RLMode::derivative, 0.0, Order(1.0), 1.0),
                    PoleError);
    CHECK_THROWS_AS(rl_power(RLMode::integral, -1.2, half, 1.0), DomainError);
    CHECK_THROWS_AS(rl_power(RLMode::integral, 1.0, half, 0.0), DomainError);
    CHECK_THROWS_AS(rl_power(RLMode::integral, 1.0, Order(1.5), 1.0),
                    DomainError); // bridge orders keep n == 0
}

TEST_CASE("bridge identities at spot values") {
    // I_0[(t-x)^mu](t) = (Gamma(alpha)/C) J^alpha t^mu
    double mu = 0.5, alpha = 0.5, t = 1.0;
    FnSpec kernel = FnSpec::make("k", [mu, t](double x) {
        return std::pow(std::max(t - x, 0.0), mu);
    });
    double lhs = integrate(kernel, {0.0, t}, Order(alpha), kSetB, 1e-11).value;
    double rhs = sf::gamma_fn(alpha) / op::coefficient(kSetB) *
                 rl_power(RLMode::integral, mu, Order(alpha), t);
    CHECK(relerr(lhs, rhs) < 1e-8);

    // frozen spot value of the derivative-bridge right side at
    // mu=0.5, alpha=0.25, t=1.3 (all-ones, C = 1)
    double factor = sf::gamma_fn(0.25) * sf::gamma_fn(1.25) /
                    sf::gamma_fn(1.75);
    double rhs2 = factor * std::pow(1.3, 0.25) * 0.75 *
                  rl_power(RLMode::derivative, 0.5, Order(0.25), 1.3);
    CHECK(relerr(rhs2, 2.98960558659942376) < 1e-13);
}
