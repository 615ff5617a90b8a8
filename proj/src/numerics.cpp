#include "vfrac/numerics.hpp"
#include "vfrac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vfrac::numerics {

void EpsilonSchedule::validate() const {
    if (!(eps0 > 0.0))
        throw DomainError("EpsilonSchedule: eps0 must be positive");
    if (!(ratio > 0.0 && ratio < 1.0))
        throw DomainError("EpsilonSchedule: ratio must lie in (0, 1)");
    if (levels < 2)
        throw DomainError("EpsilonSchedule: need at least 2 levels");
}

std::vector<double> EpsilonSchedule::steps() const {
    validate();
    std::vector<double> out(levels);
    double e = eps0;
    for (int j = 0; j < levels; ++j, e *= ratio) out[j] = e;
    return out;
}

ExtrapolationResult
extrapolated_limit(const std::vector<std::pair<double, double>>& samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 2)
        throw DomainError("extrapolated_limit: need at least 2 samples");
    for (int j = 0; j < n; ++j) {
        if (!(samples[j].first > 0.0))
            throw DomainError("extrapolated_limit: eps must be positive");
        if (j > 0 && !(samples[j].first < samples[j - 1].first))
            throw DomainError(
                "extrapolated_limit: eps must be strictly decreasing");
        if (!std::isfinite(samples[j].second))
            throw DomainError("extrapolated_limit: non-finite sample value");
    }

    // Neville tableau evaluated at eps = 0, row j holding the
    // polynomial through samples j-m..j. diag[j] uses j+1 samples.
    std::vector<double> row(n);
    std::vector<double> diag(n);
    for (int j = 0; j < n; ++j) {
        row[j] = samples[j].second;
        for (int m = j - 1; m >= 0; --m) {
            const double ei = samples[m].first;     // larger eps
            const double ej = samples[j].first;     // smaller eps
            row[m] = (ei * row[m + 1] - ej * row[m]) / (ei - ej);
        }
        diag[j] = row[0];
    }

    std::vector<double> corr(n - 1);
    for (int j = 1; j < n; ++j) corr[j - 1] = std::fabs(diag[j] - diag[j - 1]);

    if (n >= 4) {
        bool growing = true;
        for (size_t j = 1; j < corr.size(); ++j)
            if (!(corr[j] > corr[j - 1])) { growing = false; break; }
        if (growing && corr.back() > corr.front())
            throw DivergenceError(
                "extrapolated_limit: corrections grow monotonically, the "
                "sampled quantity does not appear to converge");
    }

    return {diag[n - 1], corr[n - 2]};
}

ExtrapolationResult extrapolated_limit(const Fn& q,
                                       const EpsilonSchedule& sched) {
    std::vector<std::pair<double, double>> samples;
    for (double e : sched.steps()) samples.emplace_back(e, q(e));
    return extrapolated_limit(samples);
}

namespace {

constexpr int kMaxDepth = 40;

struct AdaptState {
    const Fn* f;
    int leaves = 0;
    double err = 0.0;
    double capped_err = 0.0; // error contributed by depth-capped leaves
};

double eval_checked(const Fn& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw DomainError("adaptive_quad: integrand not finite at x = " +
                          std::to_string(x));
    return v;
}

double simpson_step(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(AdaptState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval_checked(*st.f, lm);
    const double frm = eval_checked(*st.f, rm);
    const double left = simpson_step(fa, flm, fm, m - a);
    const double right = simpson_step(fm, frm, fb, b - m);
    const double diff = left + right - whole;

    if (std::fabs(diff) <= 15.0 * tol || depth <= 0) {
        const double leaf_err = std::fabs(diff) / 15.0;
        st.err += leaf_err;
        if (depth <= 0 && std::fabs(diff) > 15.0 * tol)
            st.capped_err += leaf_err;
        st.leaves += 2;
        return left + right + diff / 15.0;
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

QuadratureResult adapt_run(const Fn& f, double a, double b, double tol) {
    AdaptState st;
    st.f = &f;
    const double fa = eval_checked(f, a);
    const double fb = eval_checked(f, b);
    const double fm = eval_checked(f, 0.5 * (a + b));
    const double whole = simpson_step(fa, fm, fb, b - a);
    const double value = adapt(st, a, b, fa, fm, fb, whole, tol, kMaxDepth);
    if (st.capped_err > std::max(tol, 1e-12 * std::fabs(value)))
        throw ConvergenceError(
            "adaptive_quad: max subdivision depth reached with error above "
            "tolerance");
    return {value, st.err, std::max(st.leaves, 1)};
}

// Local growth exponent of |f| near 0 from two interior samples.
double exponent_near_zero(const Fn& f, double b) {
    const double x1 = b * 1e-7;
    const double x2 = b * 1e-6;
    const double f1 = std::fabs(f(x1));
    const double f2 = std::fabs(f(x2));
    if (!std::isfinite(f1) || !std::isfinite(f2) || f1 == 0.0 || f2 == 0.0)
        return 0.0;
    return std::log(f1 / f2) / std::log(x1 / x2);
}

} // namespace

QuadratureResult adaptive_quad(const Fn& f, double a, double b, double tol) {
    if (!(tol > 0.0)) throw DomainError("adaptive_quad: tol must be positive");
    if (!(a <= b)) throw DomainError("adaptive_quad: requires a <= b");
    if (a == b) return {0.0, 0.0, 1};

    if (a == 0.0 && !std::isfinite(f(a))) {
        // Integrable power singularity at the origin: estimate the local
        // exponent s, then substitute x = u^m with m = 1/(1+s) so the
        // transformed integrand is bounded.
        const double s = exponent_near_zero(f, b);
        if (s <= -0.999)
            throw ConvergenceError(
                "adaptive_quad: integrand appears non-integrable at x = 0 "
                "(local exponent " + std::to_string(s) + ")");
        const double m = 1.0 / (1.0 + std::clamp(s, -0.999, -0.001));
        const Fn g = [&f, m](double u) {
            return f(std::pow(u, m)) * m * std::pow(u, m - 1.0);
        };
        const double u_hi = std::pow(b, 1.0 / m);
        // The tail [0, u_hi*1e-16] of the transformed integral is
        // O(u_lo) and sits far below double rounding of the result.
        return adapt_run(g, u_hi * 1e-16, u_hi, tol);
    }
    return adapt_run(f, a, b, tol);
}

QuadratureResult adaptive_quad_power_weight(const Fn& f, double alpha,
                                            double a, double b, double tol) {
    if (!(alpha > 0.0))
        throw DomainError("adaptive_quad_power_weight: alpha must be positive");
    if (!(a >= 0.0))
        throw DomainError("adaptive_quad_power_weight: requires a >= 0");
    if (!(a <= b))
        throw DomainError("adaptive_quad_power_weight: requires a <= b");
    if (a == b) return {0.0, 0.0, 1};

    if (alpha == 1.0) return adaptive_quad(f, a, b, tol);

    if (a == 0.0) {
        // u = x^alpha exactly: the weight becomes du/alpha.
        const double inv_alpha = 1.0 / alpha;
        const Fn g = [&f, inv_alpha](double u) {
            return f(std::pow(u, inv_alpha)) * inv_alpha;
        };
        return adapt_run(g, 0.0, std::pow(b, alpha), tol);
    }

    const Fn g = [&f, alpha](double x) {
        return f(x) * std::exp((alpha - 1.0) * std::log(x));
    };
    return adapt_run(g, a, b, tol);
}

double find_root_bracketed(const Fn& g, double lo, double hi, double tol) {
    if (!(lo < hi))
        throw DomainError("find_root_bracketed: requires lo < hi");
    if (!(tol > 0.0))
        throw DomainError("find_root_bracketed: tol must be positive");
    double glo = g(lo);
    double ghi = g(hi);
    if (!std::isfinite(glo) || !std::isfinite(ghi))
        throw DomainError("find_root_bracketed: non-finite endpoint value");
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0))
        throw NoBracketError(
            "find_root_bracketed: g has the same sign at both ends");

    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (!std::isfinite(gm))
            throw DomainError("find_root_bracketed: non-finite value at x = " +
                              std::to_string(mid));
        if (gm == 0.0) return mid;
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::optional<std::pair<double, double>> scan_bracket(const Fn& g, double lo,
                                                      double hi, int cells) {
    if (!(lo < hi) || cells < 1)
        throw DomainError("scan_bracket: bad interval or cell count");
    const double h = (hi - lo) / cells;
    double x_prev = lo;
    double g_prev = g(lo);
    for (int i = 1; i <= cells; ++i) {
        const double x = (i == cells) ? hi : lo + i * h;
        const double gx = g(x);
        if (std::isfinite(g_prev) && std::isfinite(gx) && g_prev * gx <= 0.0)
            return std::make_pair(x_prev, x);
        x_prev = x;
        g_prev = gx;
    }
    return std::nullopt;
}

} // namespace vfrac::numerics
