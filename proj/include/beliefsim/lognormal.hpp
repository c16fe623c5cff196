#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "beliefsim/measures.hpp"

namespace beliefsim {

// Law of exp(m + s Z) with Z standard normal; s = 0 is the point mass at e^m.
struct LognormalLaw {
    double m = 0.0;
    double s = 0.0;
};

double lognormal_mean(const LognormalLaw& law);
double lognormal_std(const LognormalLaw& law);

// Mixture of lognormal components coupled through one shared standard normal
// driver, i.e. the quantile average X = sum_i w_i exp(m_i + s_i Z).
struct QuantileMixture {
    std::vector<LognormalLaw> components;
    std::vector<double> weights;
};

void validate_mixture(const QuantileMixture& mix);

// Exact (mean, std) of the quantile average. Overflow in any exponent is
// reported as a numerical failure naming the offending component.
std::pair<double, double> barycenter_lognormal_moments(const QuantileMixture& mix);

// Posterior (mean, variance) of a Gaussian state X ~ N(prior_mean, prior_var)
// after observing Y = X + noise with noise variance obs_var.
std::pair<double, double> gaussian_conjugate_posterior(double prior_mean, double prior_var,
                                                       double obs, double obs_var);

// Equal-weight quantile discretization on n points at levels (k + 1/2)/n.
DiscreteMeasure1D quantile_discretize(const LognormalLaw& law, std::size_t n = 512);

// Same discretization for a Gaussian N(mean, sd^2); helper for tests.
DiscreteMeasure1D quantile_discretize_normal(double mean, double sd, std::size_t n = 512);

}  // namespace beliefsim
