#pragma once

#include <cstdint>
#include <vector>

namespace beliefsim {

// Monte Carlo summary for one information level.
struct LevelStat {
    double level = 0.0;
    double mean_sup_sq = 0.0;  // estimate of E[sup_t |synthetic - true|^2]
    double se_sup_sq = 0.0;
    double mean_aux = 0.0;     // model-specific companion quantity
    double se_aux = 0.0;
};

// One per-path record, written to CSV by the harness.
struct PathStat {
    double level = 0.0;
    std::uint64_t path_index = 0;
    double sup_sq_error = 0.0;
    double aux = 0.0;
};

LevelStat summarize_level(double level, const std::vector<double>& sup_sq,
                          const std::vector<double>& aux);

}  // namespace beliefsim
