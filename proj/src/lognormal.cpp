#include "beliefsim/lognormal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "beliefsim/errors.hpp"
#include "beliefsim/numerics.hpp"

namespace beliefsim {

namespace {

void check_law(const LognormalLaw& law) {
    if (!std::isfinite(law.m) || !std::isfinite(law.s) || law.s < 0.0)
        throw std::invalid_argument("LognormalLaw: m must be finite and s nonnegative");
}

double checked_exp(double arg, std::size_t component) {
    if (arg > 709.0)
        throw NumericalError("lognormal moments: exponent overflow in component " +
                             std::to_string(component));
    return std::exp(arg);
}

}  // namespace

double lognormal_mean(const LognormalLaw& law) {
    check_law(law);
    return std::exp(law.m + 0.5 * law.s * law.s);
}

double lognormal_std(const LognormalLaw& law) {
    check_law(law);
    const double s2 = law.s * law.s;
    return std::sqrt(std::expm1(s2) * std::exp(2.0 * law.m + s2));
}

void validate_mixture(const QuantileMixture& mix) {
    if (mix.components.empty() || mix.components.size() != mix.weights.size())
        throw std::invalid_argument("QuantileMixture: component/weight size mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < mix.components.size(); ++i) {
        check_law(mix.components[i]);
        if (!(mix.weights[i] >= 0.0))
            throw std::invalid_argument("QuantileMixture: negative weight");
        total += mix.weights[i];
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("QuantileMixture: weights must sum to 1 within 1e-12");
}

std::pair<double, double> barycenter_lognormal_moments(const QuantileMixture& mix) {
    validate_mixture(mix);
    const std::size_t n = mix.components.size();
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = mix.components[i];
        mean += mix.weights[i] * checked_exp(c.m + 0.5 * c.s * c.s, i);
    }
    double second = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ci = mix.components[i];
        for (std::size_t j = 0; j < n; ++j) {
            const auto& cj = mix.components[j];
            const double ss = ci.s + cj.s;
            second += mix.weights[i] * mix.weights[j] *
                      checked_exp(ci.m + cj.m + 0.5 * ss * ss, i);
        }
    }
    const double var = std::max(second - mean * mean, 0.0);
    return {mean, std::sqrt(var)};
}

std::pair<double, double> gaussian_conjugate_posterior(double prior_mean, double prior_var,
                                                       double obs, double obs_var) {
    if (!(obs_var > 0.0))
        throw std::invalid_argument("gaussian_conjugate_posterior: obs_var must be positive");
    if (!(prior_var >= 0.0))
        throw std::invalid_argument("gaussian_conjugate_posterior: prior_var must be nonnegative");
    const double denom = prior_var + obs_var;
    const double post_var = prior_var * obs_var / denom;
    const double post_mean = (obs_var * prior_mean + prior_var * obs) / denom;
    return {post_mean, post_var};
}

DiscreteMeasure1D quantile_discretize(const LognormalLaw& law, std::size_t n) {
    check_law(law);
    if (n < 1) throw std::invalid_argument("quantile_discretize: n must be positive");
    std::vector<double> atoms(n), weights(n, 1.0 / static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const double u = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
        atoms[k] = std::exp(law.m + law.s * norminv(u));
    }
    return DiscreteMeasure1D(std::move(atoms), std::move(weights));
}

DiscreteMeasure1D quantile_discretize_normal(double mean, double sd, std::size_t n) {
    if (!(sd >= 0.0)) throw std::invalid_argument("quantile_discretize_normal: sd < 0");
    if (n < 1) throw std::invalid_argument("quantile_discretize_normal: n must be positive");
    std::vector<double> atoms(n), weights(n, 1.0 / static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const double u = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
        atoms[k] = mean + sd * norminv(u);
    }
    return DiscreteMeasure1D(std::move(atoms), std::move(weights));
}

}  // namespace beliefsim
