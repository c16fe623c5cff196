#include "beliefsim/brownian.hpp"

#include <cmath>

#include "beliefsim/rng.hpp"

namespace beliefsim {

BrownianPath generate_brownian(std::uint64_t seed, std::uint64_t path_index,
                               const TimeGrid& grid) {
    GaussianStream gs(seed, path_index, kStreamBrownian);
    const double scale = std::sqrt(grid.dt());
    BrownianPath path;
    path.seed = seed;
    path.path_index = path_index;
    path.increments.resize(grid.n_steps);
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        path.increments[k] = scale * gs.next();
    }
    return path;
}

}  // namespace beliefsim
