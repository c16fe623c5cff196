#include "beliefsim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "beliefsim/errors.hpp"

namespace beliefsim {

Bracket::Bracket(double lo, double hi, double f_lo, double f_hi)
    : lo(lo), hi(hi), f_lo(f_lo), f_hi(f_hi) {
    if (!(lo < hi)) throw std::invalid_argument("Bracket: lo must be below hi");
    if (!std::isfinite(f_lo) || !std::isfinite(f_hi))
        throw std::invalid_argument("Bracket: endpoint values must be finite");
    if (f_lo * f_hi > 0.0)
        throw std::invalid_argument("Bracket: endpoint values do not change sign");
}

double brent_root(const std::function<double(double)>& f, const Bracket& bracket,
                  double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("brent_root: tol must be positive");
    double a = bracket.lo, b = bracket.hi, c = bracket.hi;
    double fa = bracket.f_lo, fb = bracket.f_hi, fc = fb;
    double d = b - a, e = b - a;
    for (int iter = 0; iter < 200; ++iter) {
        if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 =
            2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if (!std::isfinite(fb))
            throw NumericalError("brent_root: non-finite function value at x=" +
                                 std::to_string(b));
    }
    throw NumericalError("brent_root: no convergence after 200 iterations");
}

double log_sum_exp(std::span<const double> values, std::span<const double> log_weights) {
    if (values.empty()) throw std::invalid_argument("log_sum_exp: empty input");
    if (!log_weights.empty() && log_weights.size() != values.size())
        throw std::invalid_argument("log_sum_exp: size mismatch");
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i] + (log_weights.empty() ? 0.0 : log_weights[i]);
        if (std::isnan(v)) throw std::invalid_argument("log_sum_exp: NaN input");
        m = std::max(m, v);
    }
    if (m == -std::numeric_limits<double>::infinity())
        throw std::invalid_argument("log_sum_exp: all terms vanish");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i] + (log_weights.empty() ? 0.0 : log_weights[i]);
        acc += std::exp(v - m);
    }
    return m + std::log(acc);
}

double log_sum_exp(std::span<const double> values) {
    return log_sum_exp(values, std::span<const double>());
}

namespace {

double kummer_series(double a, double b, double u) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 20000; ++k) {
        term *= (a + k) * u / ((b + k) * (k + 1.0));
        sum += term;
        if (!std::isfinite(sum)) throw NumericalError("kummer_1f1: series overflow");
        if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
    }
    throw NumericalError("kummer_1f1: series did not converge");
}

// log of the (all-nonnegative) series for u >= 0, renormalized whenever the
// running sum grows large so arbitrarily big u stays representable. The
// largest term sits near k = u, so the iteration budget scales with u.
double log_kummer_series(double a, double b, double u) {
    if (a == 0.0 || u == 0.0) return 0.0;
    double term = 1.0;
    double sum = 1.0;
    double log_scale = 0.0;
    const long max_iter = 4000 + 4 * static_cast<long>(u);
    for (long k = 0; k < max_iter; ++k) {
        term *= (a + k) * u / ((b + k) * (k + 1.0));
        sum += term;
        if (term <= 1e-17 * sum && static_cast<double>(k) > u - b)
            return log_scale + std::log(sum);
        if (sum > 1e280) {
            log_scale += std::log(sum);
            term /= sum;
            sum = 1.0;
        }
    }
    throw NumericalError("log_kummer_1f1: series did not converge");
}

}  // namespace

double kummer_1f1(double a, double b, double u) {
    if (!(a >= 0.0) || !(b > 0.0))
        throw std::invalid_argument("kummer_1f1: requires a >= 0 and b > 0");
    if (!std::isfinite(u) || std::abs(u) > 700.0)
        throw NumericalError("kummer_1f1: |u| must be at most 700, got " +
                             std::to_string(u));
    if (a == 0.0) return 1.0;
    // For negative u the direct series alternates and cancels catastrophically
    // (its largest term dwarfs the sum); route through the reflection
    // 1F1(a;b;u) = e^u 1F1(b-a;b;-u), whose series has nonnegative terms.
    if (u < 0.0 && b >= a) return std::exp(u) * kummer_series(b - a, b, -u);
    if (u < -40.0)
        throw NumericalError("kummer_1f1: unstable regime (b < a with u < -40)");
    return kummer_series(a, b, u);
}

double log_kummer_1f1(double a, double b, double u) {
    if (!(a >= 0.0) || !(b > 0.0))
        throw std::invalid_argument("log_kummer_1f1: requires a >= 0 and b > 0");
    if (!std::isfinite(u)) throw NumericalError("log_kummer_1f1: non-finite argument");
    if (u < 0.0) {
        if (b < a)
            throw std::invalid_argument("log_kummer_1f1: requires b >= a for negative u");
        return u + log_kummer_series(b - a, b, -u);
    }
    return log_kummer_series(a, b, u);
}

double norminv(double p) {
    // Wichura's PPND16 (AS 241).
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("norminv: p must lie strictly in (0, 1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                  3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -val : val;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

LinearFit ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ols_fit: need at least two matching points");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw std::invalid_argument("ols_fit: non-finite input");
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0.0) throw std::invalid_argument("ols_fit: zero variance in x");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

double mean_of(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("mean_of: empty input");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
    if (v.size() < 2) throw std::invalid_argument("sample_variance: need two entries");
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double standard_error(std::span<const double> v) {
    return std::sqrt(sample_variance(v) / static_cast<double>(v.size()));
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("pearson_correlation: need two matching entries");
    const double ma = mean_of(a), mb = mean_of(b);
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
        sab += (a[i] - ma) * (b[i] - mb);
    }
    if (saa <= 0.0 || sbb <= 0.0)
        throw std::invalid_argument("pearson_correlation: zero variance input");
    return sab / std::sqrt(saa * sbb);
}

}  // namespace beliefsim
