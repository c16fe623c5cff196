#include "beliefsim/sde.hpp"

#include <algorithm>

namespace beliefsim {

std::vector<double> simulate_gbm(double mu, double sigma, double s0,
                                 const BrownianPath& w, const TimeGrid& grid) {
    if (!(s0 > 0.0)) throw std::invalid_argument("simulate_gbm: s0 must be positive");
    if (sigma < 0.0) throw std::invalid_argument("simulate_gbm: sigma must be nonnegative");
    if (w.increments.size() != grid.n_steps)
        throw std::invalid_argument("simulate_gbm: path/grid size mismatch");
    const double dt = grid.dt();
    const double floor = kPositivityFloorRel * s0;
    std::vector<double> s(grid.n_steps + 1);
    s[0] = s0;
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        double next = s[k] + mu * s[k] * dt + sigma * s[k] * w.increments[k];
        if (!std::isfinite(next))
            throw NumericalError("simulate_gbm: non-finite state at step " +
                                 std::to_string(k + 1));
        s[k + 1] = std::max(next, floor);
    }
    return s;
}

}  // namespace beliefsim
