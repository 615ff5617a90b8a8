#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vfrac/errors.hpp"
#include "vfrac/numerics.hpp"

#include <cmath>

using namespace vfrac;
using namespace vfrac::numerics;

TEST_CASE("epsilon schedule") {
    EpsilonSchedule s;
    CHECK_NOTHROW(s.validate());
    auto steps = s.steps();
    REQUIRE(steps.size() == 6);
    CHECK(steps[0] == 1e-3);
    CHECK(steps[1] == doctest::Approx(5e-4));
    CHECK(steps[5] == doctest::Approx(1e-3 / 32.0));

    s.eps0 = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = EpsilonSchedule{};
    s.ratio = 1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = EpsilonSchedule{};
    s.levels = 1;
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("extrapolation to eps = 0") {
    EpsilonSchedule sched;
    auto quad = extrapolated_limit(
        [](double e) { return 5.0 + 2.0 * e + e * e; }, sched);
    CHECK(std::fabs(quad.value - 5.0) < 1e-12);
    CHECK(quad.err_estimate < 1e-9);

    auto flat = extrapolated_limit([](double) { return 7.0; }, sched);
    CHECK(flat.value == 7.0);

    // rough data still extrapolates to the right limit
    auto res = extrapolated_limit(
        [](double e) { return 1.0 + std::sin(e) / e * e; }, sched);
    CHECK(std::fabs(res.value - 1.0) < 1e-10);
}

TEST_CASE("extrapolation divergence detection") {
    EpsilonSchedule sched;
    CHECK_THROWS_AS(
        extrapolated_limit([](double e) { return 1.0 / e; }, sched),
        DivergenceError);
}

TEST_CASE("extrapolation input validation") {
    CHECK_THROWS_AS(extrapolated_limit({{1e-3, 1.0}}), DomainError);
    // eps must decrease strictly
    CHECK_THROWS_AS(extrapolated_limit({{1e-3, 1.0}, {1e-3, 1.0}}),
                    DomainError);
}

TEST_CASE("adaptive Simpson on smooth integrands") {
    auto sq = adaptive_quad([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(std::fabs(sq.value - 1.0 / 3.0) < 1e-12);
    CHECK(sq.subdivisions >= 1);

    auto sine = adaptive_quad([](double x) { return std::sin(x); }, 0.0,
                              M_PI, 1e-11);
    CHECK(std::fabs(sine.value - 2.0) < 1e-10);

    auto empty = adaptive_quad([](double x) { return x; }, 2.0, 2.0, 1e-10);
    CHECK(empty.value == 0.0);
}

TEST_CASE("integrable singularity at zero is substituted away") {
    auto r = adaptive_quad([](double x) { return 1.0 / std::sqrt(x); }, 0.0,
                           1.0, 1e-10);
    CHECK(std::fabs(r.value - 2.0) < 1e-7);

    auto s = adaptive_quad([](double x) { return std::pow(x, -0.25); }, 0.0,
                           2.0, 1e-10);
    CHECK(std::fabs(s.value - std::pow(2.0, 0.75) / 0.75) < 1e-7);
}

TEST_CASE("non-integrable singularity is rejected") {
    CHECK_THROWS_AS(
        adaptive_quad([](double x) { return std::pow(x, -1.2); }, 0.0, 1.0,
                      1e-8),
        ConvergenceError);
}

TEST_CASE("quadrature additivity") {
    auto f = [](double x) { return std::exp(x); };
    double whole = adaptive_quad(f, 0.0, 2.0, 1e-11).value;
    double split = adaptive_quad(f, 0.0, 1.0, 1e-11).value +
                   adaptive_quad(f, 1.0, 2.0, 1e-11).value;
    CHECK(std::fabs(whole - split) < 2e-10);
    CHECK(std::fabs(whole - (std::exp(2.0) - 1.0)) < 1e-9);
}

TEST_CASE("power-weighted quadrature") {
    auto one = [](double) { return 1.0; };
    auto ident = [](double x) { return x; };

    // exact substitution at a == 0: integral_0^1 x^(-1/2) dx = 2
    auto r = adaptive_quad_power_weight(one, 0.5, 0.0, 1.0, 1e-12);
    CHECK(std::fabs(r.value - 2.0) < 1e-12);

    // integral_0^1 x * x^(-1/2) dx = 2/3
    auto s = adaptive_quad_power_weight(ident, 0.5, 0.0, 1.0, 1e-12);
    CHECK(std::fabs(s.value - 2.0 / 3.0) < 1e-11);

    // alpha == 1 collapses to plain quadrature
    auto p = adaptive_quad_power_weight([](double x) { return x * x; }, 1.0,
                                        0.0, 1.0, 1e-12);
    CHECK(std::fabs(p.value - 1.0 / 3.0) < 1e-12);

    // interior interval, weight assembled explicitly:
    // integral_0.5^2 x^2 x^(-1/2) dx = (2^2.5 - 0.5^2.5) / 2.5
    auto q = adaptive_quad_power_weight([](double x) { return x * x; }, 0.5,
                                        0.5, 2.0, 1e-13);
    CHECK(std::fabs(q.value - 2.192031021678297326) < 1e-12);
}

TEST_CASE("bracketed root finding") {
    auto c = find_root_bracketed([](double x) { return std::cos(x); }, 1.0,
                                 2.0, 1e-13);
    CHECK(std::fabs(c - M_PI / 2.0) < 1e-12);

    CHECK_THROWS_AS(
        find_root_bracketed([](double x) { return std::cos(x); }, 0.0, 1.0,
                            1e-13),
        NoBracketError);

    auto br = scan_bracket([](double x) { return std::sin(x); }, 2.0, 4.0);
    REQUIRE(br.has_value());
    CHECK(br->first < M_PI);
    CHECK(br->second > M_PI);

    auto none =
        scan_bracket([](double x) { return 1.0 + x * x; }, -1.0, 1.0);
    CHECK(!none.has_value());
}
