#pragma once

#include <cstdint>
#include <vector>

#include "beliefsim/time_grid.hpp"

namespace beliefsim {

// Increments of one Brownian path on a grid; increment k is N(0, dt).
struct BrownianPath {
    std::vector<double> increments;
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
};

BrownianPath generate_brownian(std::uint64_t seed, std::uint64_t path_index,
                               const TimeGrid& grid);

}  // namespace beliefsim
