#ifndef VFRAC_SPECIAL_FUNCTIONS_HPP
#define VFRAC_SPECIAL_FUNCTIONS_HPP

// Gamma machinery and the six-parameter Mittag-Leffler family,
// both the full series and its truncated partial sums, plus the
// normalized H function used by the derivative operator.

namespace vfrac::special_functions {

// log |Gamma(x)| together with the sign of Gamma(x).
struct SignedLog {
    double log_abs;
    int sign; // +1 or -1
};

// Lanczos approximation on [0.5, inf), reflection below.
// Throws PoleError at 0, -1, -2, ...
// Exact 0 at x = 1 and x = 2 so downstream coefficients built
// from all-ones parameters come out exactly 1.
SignedLog log_gamma(double x);

// exp of log_gamma, sign restored. Throws OverflowError when the
// result would exceed the range of double.
double gamma_fn(double x);

// Generalized Pochhammer symbol (rho)_{q k} = Gamma(rho + q k) / Gamma(rho)
// for integer k >= 0. Sign-aware so rho may sit between poles.
SignedLog log_gen_pochhammer(double rho, double q, int k);
double gen_pochhammer(double rho, double q, int k);

// Parameter block of the six-parameter Mittag-Leffler function
//   E(z) = sum_k (rho)_{q k} / (delta)_{p k} * z^k / Gamma(gamma k + beta).
struct MLParams {
    double gamma = 1.0;
    double beta = 1.0;
    double rho = 1.0;
    double delta = 1.0;
    double p = 1.0;
    double q = 1.0;

    // All six entries positive reals and gamma + p >= q, which keeps
    // the series convergent for every finite z. Throws DomainError.
    void validate() const;

    static MLParams all_ones() { return {}; }
};

struct TruncationSpec {
    enum class Mode { fixed, adaptive };
    Mode mode = Mode::adaptive;
    int index = 3;         // fixed: sum k = 0..index, index >= 1
    double tol = 1e-13;    // adaptive stopping tolerance
    int k_max = 1000;      // adaptive iteration budget
    double z_max = 50.0;   // adaptive |z| guard

    static TruncationSpec fixed(int i);
    static TruncationSpec adaptive(double tol = 1e-13, int k_max = 1000,
                                   double z_max = 50.0);
    void validate() const;
};

// Six-parameter Mittag-Leffler function. Fixed mode returns the exact
// partial sum with index+1 terms; adaptive mode sums until three
// consecutive terms fall below tol * max(1, |sum|), throwing
// ConvergenceError if k_max is exhausted and DomainError when
// |z| > z_max.
double ml_eval(const MLParams& params, double z, const TruncationSpec& trunc);

// Truncated H function, i H(z) = Gamma(beta) * i E(z), i >= 1.
// H(0) == 1 exactly.
double h_eval(const MLParams& params, double z, int i);

// Reduced-family conveniences (classic one/two/three parameter forms).
double ml_one(double gamma, double z,
              const TruncationSpec& trunc = TruncationSpec::adaptive());
double ml_two(double gamma, double beta, double z,
              const TruncationSpec& trunc = TruncationSpec::adaptive());
double ml_three(double gamma, double beta, double rho, double z,
                const TruncationSpec& trunc = TruncationSpec::adaptive());

} // namespace vfrac::special_functions

#endif
