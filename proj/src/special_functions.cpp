#include "vfrac/special_functions.hpp"
#include "vfrac/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace vfrac::special_functions {

namespace {

// Lanczos g = 7, 9 coefficients (Godfrey's table). Relative error
// below 1e-15 on the positive half line.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kHalfLogTwoPi = 0.91893853320467274178; // ln(2 pi) / 2

double lanczos_log_gamma(double x) {
    // valid for x >= 0.5
    const double xm1 = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (xm1 + i);
    const double t = xm1 + kLanczosG + 0.5;
    return kHalfLogTwoPi + (xm1 + 0.5) * std::log(t) - t + std::log(acc);
}

// |sin(pi x)| and the sign of sin(pi x), with argument reduction so
// precision does not degrade for moderately large negative x.
struct SinPi {
    double abs;
    int sign;
};

SinPi sin_pi(double x) {
    double n = std::floor(x);
    double r = x - n; // in [0, 1)
    int sign = (static_cast<long long>(n) % 2 == 0) ? 1 : -1;
    // sin(pi (n + r)) = (-1)^n sin(pi r), and sin(pi r) >= 0 on [0, 1]
    double s = (r > 0.5) ? std::sin(M_PI * (1.0 - r)) : std::sin(M_PI * r);
    return {s, sign};
}

} // namespace

SignedLog log_gamma(double x) {
    if (!std::isfinite(x))
        throw DomainError("log_gamma: argument is not finite");
    if (x == 1.0 || x == 2.0) return {0.0, 1};
    if (x >= 0.5) return {lanczos_log_gamma(x), 1};
    if (x <= 0.0 && x == std::floor(x))
        throw PoleError("log_gamma: pole at non-positive integer x = " +
                        std::to_string(x));
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const SinPi s = sin_pi(x);
    const double log_abs =
        std::log(M_PI) - std::log(s.abs) - lanczos_log_gamma(1.0 - x);
    return {log_abs, s.sign};
}

double gamma_fn(double x) {
    const SignedLog lg = log_gamma(x);
    if (lg.log_abs > 709.0)
        throw OverflowError("gamma_fn: overflow at x = " + std::to_string(x));
    return lg.sign * std::exp(lg.log_abs);
}

SignedLog log_gen_pochhammer(double rho, double q, int k) {
    if (k < 0)
        throw DomainError("gen_pochhammer: k must be a non-negative integer");
    if (!(q > 0.0))
        throw DomainError("gen_pochhammer: q must be positive");
    if (k == 0) return {0.0, 1};
    const SignedLog num = log_gamma(rho + q * k);
    const SignedLog den = log_gamma(rho);
    return {num.log_abs - den.log_abs, num.sign * den.sign};
}

double gen_pochhammer(double rho, double q, int k) {
    const SignedLog lp = log_gen_pochhammer(rho, q, k);
    if (lp.log_abs > 709.0)
        throw OverflowError("gen_pochhammer: overflow for rho = " +
                            std::to_string(rho) + ", q = " + std::to_string(q) +
                            ", k = " + std::to_string(k));
    return lp.sign * std::exp(lp.log_abs);
}

void MLParams::validate() const {
    const double vals[] = {gamma, beta, rho, delta, p, q};
    for (double v : vals)
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("MLParams: all six parameters must be positive "
                              "finite reals");
    if (gamma + p < q)
        throw DomainError("MLParams: require gamma + p >= q for convergence");
}

TruncationSpec TruncationSpec::fixed(int i) {
    TruncationSpec t;
    t.mode = Mode::fixed;
    t.index = i;
    t.validate();
    return t;
}

TruncationSpec TruncationSpec::adaptive(double tol, int k_max, double z_max) {
    TruncationSpec t;
    t.mode = Mode::adaptive;
    t.tol = tol;
    t.k_max = k_max;
    t.z_max = z_max;
    t.validate();
    return t;
}

void TruncationSpec::validate() const {
    if (mode == Mode::fixed) {
        if (index < 1)
            throw DomainError("TruncationSpec: fixed truncation index must be "
                              ">= 1");
    } else {
        if (!(tol > 0.0))
            throw DomainError("TruncationSpec: adaptive tol must be positive");
        if (k_max < 1)
            throw DomainError("TruncationSpec: k_max must be >= 1");
        if (!(z_max > 0.0))
            throw DomainError("TruncationSpec: z_max must be positive");
    }
}

namespace {

// log of the k-th series coefficient (everything except z^k). All
// gamma arguments are positive for valid params, so no sign handling
// is needed here. Written so the k = 0 coefficient is exactly
// -log_gamma(beta): paired lgamma values cancel to zero bit-for-bit.
double log_coeff(const MLParams& mp, int k) {
    const double num = log_gamma(mp.rho + mp.q * k).log_abs -
                       log_gamma(mp.rho).log_abs;
    const double den = log_gamma(mp.delta + mp.p * k).log_abs -
                       log_gamma(mp.delta).log_abs;
    return num - den - log_gamma(mp.gamma * k + mp.beta).log_abs;
}

struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

double term_at(const MLParams& mp, double z, double log_abs_z, int k) {
    if (k == 0) return std::exp(log_coeff(mp, 0));
    const double lt = log_coeff(mp, k) + k * log_abs_z;
    double term = std::exp(lt);
    if (z < 0.0 && (k & 1)) term = -term;
    return term;
}

} // namespace

double ml_eval(const MLParams& params, double z, const TruncationSpec& trunc) {
    params.validate();
    trunc.validate();

    if (trunc.mode == TruncationSpec::Mode::fixed) {
        const double log_abs_z = (z == 0.0) ? 0.0 : std::log(std::fabs(z));
        KahanSum s;
        s.add(term_at(params, z, log_abs_z, 0));
        if (z != 0.0)
            for (int k = 1; k <= trunc.index; ++k)
                s.add(term_at(params, z, log_abs_z, k));
        return s.sum;
    }

    if (std::fabs(z) > trunc.z_max)
        throw DomainError("ml_eval: |z| exceeds z_max = " +
                          std::to_string(trunc.z_max));

    KahanSum s;
    s.add(term_at(params, z, 0.0, 0));
    if (z == 0.0) return s.sum;

    const double log_abs_z = std::log(std::fabs(z));
    int consecutive_small = 0;
    for (int k = 1; k <= trunc.k_max; ++k) {
        const double term = term_at(params, z, log_abs_z, k);
        s.add(term);
        if (std::fabs(term) < trunc.tol * std::max(1.0, std::fabs(s.sum))) {
            if (++consecutive_small == 3) return s.sum;
        } else {
            consecutive_small = 0;
        }
    }
    throw ConvergenceError("ml_eval: series did not converge within k_max = " +
                           std::to_string(trunc.k_max) + " terms");
}

double h_eval(const MLParams& params, double z, int i) {
    params.validate();
    if (i < 1)
        throw DomainError("h_eval: truncation index i must be >= 1");

    const double lg_beta = log_gamma(params.beta).log_abs;
    // k = 0 term is exp(lg_beta - lg_beta) == 1 exactly, so H(0) == 1.
    KahanSum s;
    s.add(std::exp(lg_beta + log_coeff(params, 0)));
    if (z == 0.0) return s.sum;

    const double log_abs_z = std::log(std::fabs(z));
    for (int k = 1; k <= i; ++k) {
        const double lt = lg_beta + log_coeff(params, k) + k * log_abs_z;
        double term = std::exp(lt);
        if (z < 0.0 && (k & 1)) term = -term;
        s.add(term);
    }
    return s.sum;
}

double ml_one(double gamma, double z, const TruncationSpec& trunc) {
    return ml_two(gamma, 1.0, z, trunc);
}

double ml_two(double gamma, double beta, double z, const TruncationSpec& trunc) {
    MLParams mp;
    mp.gamma = gamma;
    mp.beta = beta;
    return ml_eval(mp, z, trunc);
}

double ml_three(double gamma, double beta, double rho, double z,
                const TruncationSpec& trunc) {
    MLParams mp;
    mp.gamma = gamma;
    mp.beta = beta;
    mp.rho = rho;
    return ml_eval(mp, z, trunc);
}

} // namespace vfrac::special_functions
