#ifndef VFRAC_THEOREM_VERIFIER_HPP
#define VFRAC_THEOREM_VERIFIER_HPP

#include "vfrac/fn_spec.hpp"
#include "vfrac/special_functions.hpp"
#include "vfrac/v_integral.hpp"
#include "vfrac/v_operator.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Executable certification of the operator calculus: every rule
// evaluates both sides of one identity (or inequality, or existence
// statement) over a suite of functions, grids, and parameter sets,
// and reports the worst residual. Residuals are normalized as
// |lhs - rhs| / (1 + max(|lhs|, |rhs|)) unless a rule states
// otherwise; existence rules locate their witness by root finding
// and record the defining residual at it.

namespace vfrac::theorem_verifier {

using special_functions::MLParams;
using v_integral::IntervalSpec;
using v_operator::Order;
using vfrac::expr::FnSpec;

enum class RuleId {
    linearity_d,
    product,
    quotient,
    constant_zero,
    chain_composition,
    order_composition,
    continuity,
    rolle,
    mvt,
    extended_mvt,
    linearity_i,
    inverse,
    ftc,
    parts,
    abs_bound,
    sup_bound,
    integral_composition,
    integral_mvt,
    average_value,
    rl_integral_bridge,
    rl_derivative_bridge,
    reduction_m_fractional,
    reduction_conformable,
    ml_deriv_identity,
    ml_integral_identity,
};

const std::vector<RuleId>& all_rules();
const char* rule_name(RuleId rule);
// One-line statement of the identity the rule certifies.
const char* rule_statement(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);
double default_tolerance(RuleId rule);

struct CaseResult {
    std::string inputs;
    double residual = 0.0;
    std::optional<double> witness;
};

struct VerificationReport {
    RuleId rule;
    std::string rule_label;
    double tolerance = 0.0;
    double max_residual = 0.0;
    bool passed = false; // max_residual <= tolerance
    std::vector<CaseResult> cases;
};

// Inputs a rule runs over; rules read the fields they need and
// ignore the rest. default_suite fills in what each rule expects.
struct Suite {
    std::vector<FnSpec> functions;
    std::vector<std::array<FnSpec, 2>> pairs; // (f, g) for two-function rules
    std::vector<double> t_grid;
    std::vector<double> alphas;
    std::vector<std::pair<double, double>> alpha_mu; // composition orders
    std::vector<MLParams> params_sets;
    std::vector<std::pair<double, double>> intervals; // (a, b)
    std::vector<double> mus;                          // RL bridge exponents
    std::vector<std::pair<double, double>> ml_mu_kappa;
    double quad_tol = 1e-10;
};

Suite default_suite(RuleId rule);

VerificationReport verify(RuleId rule, const Suite& suite, double tol);
VerificationReport verify(RuleId rule); // default suite and tolerance

enum class WitnessMode { rolle, mvt, extended_mvt, integral_mvt, average_value };

// Locates the point the mean-value-type theorems assert. g is only
// read by extended_mvt (ratio denominator) and integral_mvt (weight
// function); pass a default-constructed FnSpec otherwise. Throws
// NoBracketError when the sign scan finds no bracket and
// PreconditionError when the mode's hypotheses are violated.
double find_mean_value_point(WitnessMode mode, const FnSpec& f,
                             const FnSpec& g, const IntervalSpec& iv,
                             const Order& alpha, const MLParams& params);

} // namespace vfrac::theorem_verifier

#endif
