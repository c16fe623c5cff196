#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "beliefsim/coefficients.hpp"
#include "beliefsim/lognormal.hpp"
#include "beliefsim/measures.hpp"
#include "beliefsim/rng.hpp"
#include "beliefsim/sde.hpp"
#include "beliefsim/summary.hpp"
#include "beliefsim/time_grid.hpp"

namespace beliefsim {

// One market participant: observation noise scale tau and aggregation weight.
struct TraderConfig {
    double tau = 1.0;
    double weight = 1.0;
};

struct MarketConfig {
    double s0 = 100.0;
    double mu_star = 0.08;
    double sigma_star = 0.6;
    std::vector<TraderConfig> traders = {
        {2.0, 0.4}, {1.2, 0.3}, {2.5, 0.2}, {1.5, 0.1}};
    CoefficientFamily family{};  // baseline with kappa_d = 0.35, kappa_v = 2.75
    std::vector<double> info_levels = {1.0, 10.0, 100.0, 1000.0};
    std::size_t n_paths = 30;
    TimeGrid grid{1.0, 252};
    std::uint64_t seed = 20250801;
    std::size_t threads = 1;
};

void validate_market(const MarketConfig& cfg);

// Posterior price law of one trader who observes the true log price through
// noise of variance tau^2 / n, against the running Gaussian prior.
LognormalLaw trader_posterior(double log_price_true, double n, const TraderConfig& trader,
                              double prior_mean, double prior_var, GaussianStream& rng);

// Weighted family of posterior laws coupled through one shared driver.
QuantileMixture market_beliefs(const std::vector<LognormalLaw>& posteriors,
                               const std::vector<double>& weights);

struct MarketPairResult {
    PathBundle bundle;
    double sup_sq_error = 0.0;  // sup_t |synthetic - true|^2
    double mean_w2_sq = 0.0;    // time average of the squared belief-to-price distance
};

// Simulates the coupled (true, synthetic) pair on one shared Brownian path at
// information level n.
MarketPairResult simulate_market_pair_stats(const MarketConfig& cfg, double n,
                                            std::uint64_t path_index);
PathBundle simulate_market_pair(const MarketConfig& cfg, double n,
                                std::uint64_t path_index);

struct ConvergenceResult {
    std::vector<LevelStat> summary;   // per level; aux = mean_w2_sq
    std::vector<PathStat> paths;      // per (level, path); aux = mean_w2_sq
};

ConvergenceResult convergence_experiment(const MarketConfig& cfg);

// Two-population counterexample showing the plain mixture is a bad price
// summary: both groups believe +/-1 with equal mass, so the mixture stays at
// distance sqrt(2) from the realized price no matter which sign it takes.
// Returns the pooled belief and its distance to the point mass at +1.
std::pair<DiscreteMeasure1D, double> rademacher_counterexample();

}  // namespace beliefsim
