#include "vfrac/expr.hpp"
#include "vfrac/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace vfrac::expr {

ExprPtr make_number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::number;
    n->number = v;
    return n;
}

ExprPtr make_variable() {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::variable;
    return n;
}

ExprPtr make_negate(ExprPtr a) {
    if (a->kind == NodeKind::number) return make_number(-a->number);
    if (a->kind == NodeKind::negate) return a->a;
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::negate;
    n->a = std::move(a);
    return n;
}

namespace {

bool is_number(const ExprPtr& e, double v) {
    return e->kind == NodeKind::number && e->number == v;
}

ExprPtr make_binary(NodeKind kind, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

} // namespace

ExprPtr make_add(ExprPtr a, ExprPtr b) {
    if (is_number(a, 0.0)) return b;
    if (is_number(b, 0.0)) return a;
    if (a->kind == NodeKind::number && b->kind == NodeKind::number)
        return make_number(a->number + b->number);
    return make_binary(NodeKind::add, std::move(a), std::move(b));
}

ExprPtr make_subtract(ExprPtr a, ExprPtr b) {
    if (is_number(b, 0.0)) return a;
    if (a->kind == NodeKind::number && b->kind == NodeKind::number)
        return make_number(a->number - b->number);
    if (is_number(a, 0.0)) return make_negate(std::move(b));
    return make_binary(NodeKind::subtract, std::move(a), std::move(b));
}

ExprPtr make_multiply(ExprPtr a, ExprPtr b) {
    if (is_number(a, 0.0) || is_number(b, 0.0)) return make_number(0.0);
    if (is_number(a, 1.0)) return b;
    if (is_number(b, 1.0)) return a;
    if (a->kind == NodeKind::number && b->kind == NodeKind::number)
        return make_number(a->number * b->number);
    return make_binary(NodeKind::multiply, std::move(a), std::move(b));
}

ExprPtr make_divide(ExprPtr a, ExprPtr b) {
    if (is_number(b, 1.0)) return a;
    if (is_number(a, 0.0) && !is_number(b, 0.0)) return make_number(0.0);
    return make_binary(NodeKind::divide, std::move(a), std::move(b));
}

ExprPtr make_power(ExprPtr base, double exponent) {
    if (exponent == 1.0) return base;
    if (exponent == 0.0) return make_number(1.0);
    if (base->kind == NodeKind::number)
        return make_number(std::pow(base->number, exponent));
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::power;
    n->number = exponent;
    n->a = std::move(base);
    return n;
}

ExprPtr make_call(FuncId f, ExprPtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::call;
    n->func = f;
    n->a = std::move(a);
    return n;
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { number, ident, lparen, rparen, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind;
    double value = 0.0;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    while (i < n) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n &&
             std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            double v = 0.0;
            const char* first = src.data() + i;
            const char* last = src.data() + n;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc{})
                throw SyntaxError("malformed number", i);
            out.push_back({Tok::number, v, std::string(first, ptr), i});
            i += static_cast<std::size_t>(ptr - first);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                             src[j] == '_'))
                ++j;
            out.push_back({Tok::ident, 0.0, std::string(src.substr(i, j - i)), i});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, 0.0, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::end, 0.0, "", n});
    return out;
}

// ---------------------------------------------------------------- parser

struct Parser {
    const std::vector<Token>& toks;
    std::size_t at = 0;

    const Token& peek() const { return toks[at]; }
    const Token& next() { return toks[at++]; }
    bool accept(Tok k) {
        if (toks[at].kind == k) {
            ++at;
            return true;
        }
        return false;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        for (;;) {
            if (accept(Tok::plus))
                e = make_add(std::move(e), parse_term());
            else if (accept(Tok::minus))
                e = make_subtract(std::move(e), parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        for (;;) {
            if (accept(Tok::star))
                e = make_multiply(std::move(e), parse_unary());
            else if (accept(Tok::slash))
                e = make_divide(std::move(e), parse_unary());
            else
                return e;
        }
    }

    ExprPtr parse_unary() {
        if (accept(Tok::minus)) return make_negate(parse_unary());
        return parse_factor();
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (!accept(Tok::caret)) return base;
        double sign = 1.0;
        if (accept(Tok::minus)) sign = -1.0;
        const Token& t = peek();
        if (t.kind != Tok::number)
            throw SyntaxError("exponent must be a numeric constant", t.pos);
        next();
        return make_power(std::move(base), sign * t.value);
    }

    ExprPtr parse_base() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::number:
            next();
            return make_number(t.value);
        case Tok::lparen: {
            next();
            ExprPtr e = parse_expr();
            if (!accept(Tok::rparen))
                throw SyntaxError("expected ')'", peek().pos);
            return e;
        }
        case Tok::ident: {
            next();
            if (t.text == "t") return make_variable();
            FuncId f;
            if (t.text == "exp") f = FuncId::exp;
            else if (t.text == "ln") f = FuncId::ln;
            else if (t.text == "sin") f = FuncId::sin;
            else if (t.text == "cos") f = FuncId::cos;
            else if (t.text == "sqrt") f = FuncId::sqrt;
            else
                throw UnknownIdentifierError(
                    "unknown identifier '" + t.text + "'", t.pos);
            if (!accept(Tok::lparen))
                throw SyntaxError("expected '(' after '" + t.text + "'",
                                  peek().pos);
            ExprPtr arg = parse_expr();
            if (!accept(Tok::rparen))
                throw SyntaxError("expected ')'", peek().pos);
            return make_call(f, std::move(arg));
        }
        case Tok::end:
            throw SyntaxError("unexpected end of expression", t.pos);
        default:
            throw SyntaxError("unexpected token '" + t.text + "'", t.pos);
        }
    }
};

} // namespace

ExprPtr parse(std::string_view text) {
    const std::vector<Token> toks = tokenize(text);
    Parser p{toks};
    ExprPtr e = p.parse_expr();
    if (p.peek().kind != Tok::end)
        throw SyntaxError("unexpected trailing input", p.peek().pos);
    return e;
}

// ---------------------------------------------------------------- eval

double eval(const ExprPtr& ast, double t) {
    if (!ast) throw Error("eval: empty expression");
    double v = 0.0;
    switch (ast->kind) {
    case NodeKind::number: return ast->number;
    case NodeKind::variable: return t;
    case NodeKind::negate: return -eval(ast->a, t);
    case NodeKind::add: v = eval(ast->a, t) + eval(ast->b, t); break;
    case NodeKind::subtract: v = eval(ast->a, t) - eval(ast->b, t); break;
    case NodeKind::multiply: v = eval(ast->a, t) * eval(ast->b, t); break;
    case NodeKind::divide: {
        const double den = eval(ast->b, t);
        if (den == 0.0) throw DomainError("eval: division by zero");
        v = eval(ast->a, t) / den;
        break;
    }
    case NodeKind::power:
        v = std::pow(eval(ast->a, t), ast->number);
        break;
    case NodeKind::call: {
        const double x = eval(ast->a, t);
        switch (ast->func) {
        case FuncId::exp: v = std::exp(x); break;
        case FuncId::ln:
            if (!(x > 0.0)) throw DomainError("eval: ln of non-positive value");
            v = std::log(x);
            break;
        case FuncId::sin: v = std::sin(x); break;
        case FuncId::cos: v = std::cos(x); break;
        case FuncId::sqrt:
            if (x < 0.0) throw DomainError("eval: sqrt of negative value");
            v = std::sqrt(x);
            break;
        }
        break;
    }
    }
    if (!std::isfinite(v))
        throw DomainError("eval: non-finite value at t = " + std::to_string(t));
    return v;
}

// ------------------------------------------------------- differentiate

ExprPtr differentiate(const ExprPtr& ast) {
    if (!ast) throw Error("differentiate: empty expression");
    switch (ast->kind) {
    case NodeKind::number: return make_number(0.0);
    case NodeKind::variable: return make_number(1.0);
    case NodeKind::negate: return make_negate(differentiate(ast->a));
    case NodeKind::add:
        return make_add(differentiate(ast->a), differentiate(ast->b));
    case NodeKind::subtract:
        return make_subtract(differentiate(ast->a), differentiate(ast->b));
    case NodeKind::multiply:
        return make_add(make_multiply(differentiate(ast->a), ast->b),
                        make_multiply(ast->a, differentiate(ast->b)));
    case NodeKind::divide:
        return make_divide(
            make_subtract(make_multiply(differentiate(ast->a), ast->b),
                          make_multiply(ast->a, differentiate(ast->b))),
            make_power(ast->b, 2.0));
    case NodeKind::power:
        // d/dt a^c = c a^(c-1) a'
        return make_multiply(
            make_multiply(make_number(ast->number),
                          make_power(ast->a, ast->number - 1.0)),
            differentiate(ast->a));
    case NodeKind::call: {
        const ExprPtr da = differentiate(ast->a);
        switch (ast->func) {
        case FuncId::exp:
            return make_multiply(make_call(FuncId::exp, ast->a), da);
        case FuncId::ln: return make_divide(da, ast->a);
        case FuncId::sin:
            return make_multiply(make_call(FuncId::cos, ast->a), da);
        case FuncId::cos:
            return make_negate(
                make_multiply(make_call(FuncId::sin, ast->a), da));
        case FuncId::sqrt:
            return make_divide(
                da, make_multiply(make_number(2.0),
                                  make_call(FuncId::sqrt, ast->a)));
        }
        break;
    }
    }
    throw Error("differentiate: unreachable");
}

// ----------------------------------------------------------- printing

namespace {

int precedence(const ExprPtr& e) {
    switch (e->kind) {
    case NodeKind::add:
    case NodeKind::subtract: return 1;
    case NodeKind::multiply:
    case NodeKind::divide:
    case NodeKind::negate: return 2;
    case NodeKind::power: return 3;
    default: return 4;
    }
}

std::string format_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

const char* func_name(FuncId f) {
    switch (f) {
    case FuncId::exp: return "exp";
    case FuncId::ln: return "ln";
    case FuncId::sin: return "sin";
    case FuncId::cos: return "cos";
    case FuncId::sqrt: return "sqrt";
    }
    return "?";
}

void print_node(std::string& out, const ExprPtr& e);

void print_child(std::string& out, const ExprPtr& child, bool needs_parens) {
    if (needs_parens) {
        out += '(';
        print_node(out, child);
        out += ')';
    } else {
        print_node(out, child);
    }
}

void print_node(std::string& out, const ExprPtr& e) {
    const int prec = precedence(e);
    switch (e->kind) {
    case NodeKind::number: out += format_double(e->number); return;
    case NodeKind::variable: out += 't'; return;
    case NodeKind::negate:
        out += '-';
        print_child(out, e->a, precedence(e->a) <= 2);
        return;
    case NodeKind::add:
    case NodeKind::subtract:
    case NodeKind::multiply:
    case NodeKind::divide: {
        print_child(out, e->a, precedence(e->a) < prec);
        switch (e->kind) {
        case NodeKind::add: out += " + "; break;
        case NodeKind::subtract: out += " - "; break;
        case NodeKind::multiply: out += "*"; break;
        default: out += "/"; break;
        }
        // parenthesize right operands of equal precedence under the
        // non-associative operators so a - (b + c) and a/(b*c)
        // survive the round trip; parenthesize right-side negations
        // for readability
        const int rp = precedence(e->b);
        const bool non_assoc = e->kind == NodeKind::subtract ||
                               e->kind == NodeKind::divide;
        print_child(out, e->b,
                    rp < prec || (rp == prec && non_assoc) ||
                        e->b->kind == NodeKind::negate);
        return;
    }
    case NodeKind::power:
        print_child(out, e->a, precedence(e->a) < 4);
        out += '^';
        out += format_double(e->number);
        return;
    case NodeKind::call:
        out += func_name(e->func);
        out += '(';
        print_node(out, e->a);
        out += ')';
        return;
    }
}

} // namespace

std::string to_string(const ExprPtr& ast) {
    if (!ast) throw Error("to_string: empty expression");
    std::string out;
    print_node(out, ast);
    return out;
}

bool equal(const ExprPtr& lhs, const ExprPtr& rhs) {
    if (lhs == rhs) return true;
    if (!lhs || !rhs) return false;
    if (lhs->kind != rhs->kind) return false;
    switch (lhs->kind) {
    case NodeKind::number: return lhs->number == rhs->number;
    case NodeKind::variable: return true;
    case NodeKind::power:
        return lhs->number == rhs->number && equal(lhs->a, rhs->a);
    case NodeKind::call:
        return lhs->func == rhs->func && equal(lhs->a, rhs->a);
    case NodeKind::negate: return equal(lhs->a, rhs->a);
    default:
        return equal(lhs->a, rhs->a) && equal(lhs->b, rhs->b);
    }
}

} // namespace vfrac::expr
