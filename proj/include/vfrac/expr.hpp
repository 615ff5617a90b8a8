#ifndef VFRAC_EXPR_HPP
#define VFRAC_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

// Small expression language over one variable t:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' signed-number)?
//   base   := number | 't' | fn '(' expr ')' | '(' expr ')'
//   fn     := exp | ln | sin | cos | sqrt
// Exponents are numeric constants, which keeps symbolic
// differentiation closed under the grammar.

namespace vfrac::expr {

enum class NodeKind {
    number,
    variable, // t
    negate,
    add,
    subtract,
    multiply,
    divide,
    power, // a ^ number
    call,
};

enum class FuncId { exp, ln, sin, cos, sqrt };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind;
    double number = 0.0; // number nodes; exponent for power nodes
    FuncId func = FuncId::exp;
    ExprPtr a; // left / only child
    ExprPtr b; // right child
};

// Throws SyntaxError (0-based position) or UnknownIdentifierError.
ExprPtr parse(std::string_view text);

// Throws DomainError on division by zero, ln/sqrt outside their
// domain, or a non-finite intermediate.
double eval(const ExprPtr& ast, double t);

// Symbolic derivative with the trivial simplifications (0*x, 1*x,
// x+0, constant folding) applied.
ExprPtr differentiate(const ExprPtr& ast);

// Parseable text form; parse(to_string(ast)) is structurally equal
// to ast.
std::string to_string(const ExprPtr& ast);

bool equal(const ExprPtr& lhs, const ExprPtr& rhs);

// Simplifying constructors, shared by parser and differentiator.
ExprPtr make_number(double v);
ExprPtr make_variable();
ExprPtr make_negate(ExprPtr a);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_subtract(ExprPtr a, ExprPtr b);
ExprPtr make_multiply(ExprPtr a, ExprPtr b);
ExprPtr make_divide(ExprPtr a, ExprPtr b);
ExprPtr make_power(ExprPtr base, double exponent);
ExprPtr make_call(FuncId f, ExprPtr a);

} // namespace vfrac::expr

#endif
