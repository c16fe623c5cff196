#include "beliefsim/summary.hpp"

#include <stdexcept>

#include "beliefsim/numerics.hpp"

namespace beliefsim {

LevelStat summarize_level(double level, const std::vector<double>& sup_sq,
                          const std::vector<double>& aux) {
    if (sup_sq.empty() || sup_sq.size() != aux.size())
        throw std::invalid_argument("summarize_level: size mismatch");
    LevelStat stat;
    stat.level = level;
    stat.mean_sup_sq = mean_of(sup_sq);
    stat.mean_aux = mean_of(aux);
    if (sup_sq.size() > 1) {
        stat.se_sup_sq = standard_error(sup_sq);
        stat.se_aux = standard_error(aux);
    }
    return stat;
}

}  // namespace beliefsim
