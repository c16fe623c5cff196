#pragma once

#include <functional>
#include <span>
#include <vector>

namespace beliefsim {

// Sign-changing interval for root finding. Construction fails unless the
// endpoint values actually bracket a root.
struct Bracket {
    Bracket(double lo, double hi, double f_lo, double f_hi);

    double lo, hi;
    double f_lo, f_hi;
};

// Brent's method on a bracketing interval. Stops once the interval shrinks
// below tol * (1 + |root|) or the residual vanishes; throws NumericalError
// after 200 iterations without convergence.
double brent_root(const std::function<double(double)>& f, const Bracket& bracket,
                  double tol = 1e-14);

// log sum_i exp(values[i] + log_weights[i]), max-shifted. Empty input and
// all-(-inf) input are rejected.
double log_sum_exp(std::span<const double> values, std::span<const double> log_weights);
double log_sum_exp(std::span<const double> values);

// Confluent hypergeometric function 1F1(a; b; u) for a >= 0, b > 0 and
// |u| <= 700. Power series with term-ratio stopping; negative arguments are
// routed through 1F1(a;b;u) = e^u 1F1(b-a;b;-u) so every series evaluated has
// nonnegative terms and no cancellation.
double kummer_1f1(double a, double b, double u);

// log 1F1(a; b; u) with no magnitude cap on u (the series is summed with
// running renormalization). Negative u requires b >= a for the reflection.
double log_kummer_1f1(double a, double b, double u);

// Inverse standard normal CDF (Wichura's PPND16, ~1e-15 accuracy).
double norminv(double p);

double normal_cdf(double x);

struct LinearFit {
    double slope;
    double intercept;
};

// Least-squares line through (x, y). Degenerate designs are rejected.
LinearFit ols_fit(std::span<const double> x, std::span<const double> y);

double mean_of(std::span<const double> v);
// Unbiased sample variance; needs at least two entries.
double sample_variance(std::span<const double> v);
// Standard error of the sample mean.
double standard_error(std::span<const double> v);
// Pearson correlation; throws when either side has zero variance.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

}  // namespace beliefsim
