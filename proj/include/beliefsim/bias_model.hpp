#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "beliefsim/lognormal.hpp"
#include "beliefsim/sde.hpp"
#include "beliefsim/summary.hpp"
#include "beliefsim/time_grid.hpp"

namespace beliefsim {

struct BiasConfig {
    double kappa_b = 1e-3;  // bias-weight scale
    double p_b = 2.4;       // bias-weight exponent
    double mu_op = 0.2;     // opinionated drift level
    double c_rel = 1.0;     // ambiguity loading of the opinionated drift
    double eps = 1e-6;      // regularizer in relative-ambiguity ratios
    double tau = 14.0;      // observation noise scale of the single filter
    double s0 = 100.0;
    double mu_star = 0.08;
    double sigma_star = 0.6;
    std::vector<double> info_levels = {1.0, 10.0, 100.0, 1000.0};
    std::size_t n_paths = 30;
    TimeGrid grid{1.0, 252};
    std::uint64_t seed = 20250801;
    std::size_t threads = 1;
};

void validate_bias(const BiasConfig& cfg);

// Filter summary at one instant: price estimate, ambiguity, bias weight.
struct AmbiguityState {
    double s_hat = 0.0;
    double gamma = 0.0;
    double beta = 0.0;
};

// Conditional price standard deviation (price units) of a lognormal posterior.
double ambiguity(const LognormalLaw& posterior);

// beta = 1 - exp(-kappa_b * gamma^p_b), in [0, 1).
double bias_weight(double gamma, double kappa_b, double p_b);

// Opinionated drift rho = mu_op * s_hat * (1 + c_rel * gamma / (s_hat + eps)).
double opinion_drift(double s_hat, double gamma, const BiasConfig& cfg);

// Convex mixture (1 - beta) * base_drift(t, x) + beta * rho.
double mixed_drift(double t, double x, double beta, double rho,
                   const std::function<double(double, double)>& base_drift);

AmbiguityState ambiguity_state(const LognormalLaw& posterior, const BiasConfig& cfg);

struct BiasPairResult {
    PathBundle bundle;
    double sup_sq_error = 0.0;  // sup_t |synthetic - true|^2
    double int_beta_sq = 0.0;   // integral of beta^2 over [0, horizon]
};

BiasPairResult simulate_bias_pair_stats(const BiasConfig& cfg, double n,
                                        std::uint64_t path_index);
PathBundle simulate_bias_pair(const BiasConfig& cfg, double n, std::uint64_t path_index);

struct RateResult {
    std::vector<LevelStat> summary;  // aux = int_beta_sq
    std::vector<PathStat> paths;     // aux = int_beta_sq
    double slope = 0.0;              // least-squares slope of log error vs log n
    double eta_target = 0.0;
};

// Runs the coupled pair across the configured information levels and fits the
// log-log decay rate of the mean squared sup error. Degenerate fits (fewer
// than two usable levels, zero spread in n, vanishing errors) are numerical
// failures.
RateResult rate_experiment(const BiasConfig& cfg, double eta_target);

}  // namespace beliefsim
