#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "beliefsim/kalman.hpp"
#include "beliefsim/tilt.hpp"
#include "beliefsim/time_grid.hpp"

namespace beliefsim {

// Filtered market with a tilt-shifted synthetic price, run across a ladder of
// divergence budgets.
struct AggregateConfig {
    double s0 = 1.0;
    double sigma_star = 0.3;  // price volatility scale
    double beta = 0.5;        // blend weight toward the aggregated proposal
    double gamma = 1.0;       // inverse temperature scale in the penalty
    ExpertFamily family = ExpertFamily::uniform(0.0, 0.3);
    FilterModel filter;
    std::vector<double> budgets = {0.01, 0.5, 5.0, 20.0};
    std::size_t n_paths = 30;
    TimeGrid grid{1.0, 252};
    std::uint64_t seed = 20250801;
    int threads = 1;
};

void validate_aggregate(const AggregateConfig& cfg);

// One simulated path: latent drift, noisy observation, filter, true price,
// filtered reference price, and the tilt-shifted synthetic price.
struct TripletPath {
    std::vector<double> true_price;
    std::vector<double> filtered_price;
    std::vector<double> synthetic_price;
    std::vector<double> a_true;
    std::vector<double> a_hat;
    double sup_gap = 0.0;       // sup_t |synthetic - filtered|
    double gap_bound = 0.0;     // beta * integral |psi - a_hat| dt
    double drift_corr = 0.0;    // correlation between latent and filtered drift
};

TripletPath simulate_aggregation_triplet(const AggregateConfig& cfg, double delta_shift,
                                         std::uint64_t path_index);

struct CollapseRow {
    double K = 0.0;
    TiltSolution tilt;
    std::vector<double> sup_gaps;   // per path
    std::vector<double> gap_bounds; // per path
    double mean_corr = 0.0;
};

// Calibrates the tilt for each budget and simulates the path ensemble.
std::vector<CollapseRow> collapse_experiment(const AggregateConfig& cfg);

}  // namespace beliefsim
