#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

// Slow reference implementations used to cross-check the library. Each takes
// a deliberately different route than the code under test.
namespace oracle {

// Optimal quadratic transport cost between two finite measures on the line,
// via the monotone (north-west corner) coupling of the sorted atom lists.
// Returns the transport distance (square root of the minimal cost).
double transport_lp_1d(const std::vector<double>& atoms_a, const std::vector<double>& weights_a,
                       const std::vector<double>& atoms_b, const std::vector<double>& weights_b);

// Gauss-Legendre nodes and weights on [0, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_unit(std::size_t n);

struct TiltQuadrature {
    double log_z;
    double mean;
    double variance;
    double kl;
};

// Exponentially tilted statistics of rho = a_hat + c1 * lambda under a prior
// density on lambda in [0, 1], all integrals by 200-point quadrature. The
// divergence is integrated directly as the density ratio integral.
TiltQuadrature quad_tilt(double theta, double a_hat, double c1,
                         const std::function<double(double)>& prior_density);

double uniform_density(double lambda);
std::function<double(double)> beta_density(double a, double b);

struct MonteCarloMoments {
    double mean;
    double mean_se;
    double second;
    double second_se;
};

// Monte Carlo moments of the comonotone mixture sum_i w_i exp(m_i + s_i Z)
// with one shared standard normal Z.
MonteCarloMoments mc_mixture_moments(const std::vector<double>& m, const std::vector<double>& s,
                                     const std::vector<double>& w, std::size_t n_samples,
                                     std::uint64_t seed);

struct GridPosterior {
    double mean;
    double variance;
};

// Posterior of x ~ N(prior_mean, prior_var) given y = x + N(0, obs_var), by
// direct numerical Bayes on a fine grid.
GridPosterior grid_posterior(double prior_mean, double prior_var, double y, double obs_var,
                             std::size_t n_grid = 20001);

}  // namespace oracle
