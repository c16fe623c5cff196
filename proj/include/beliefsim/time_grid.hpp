#pragma once

#include <cstddef>
#include <stdexcept>

namespace beliefsim {

// Uniform grid on [0, horizon] with n_steps intervals.
struct TimeGrid {
    TimeGrid(double horizon, std::size_t n_steps) : horizon(horizon), n_steps(n_steps) {
        if (!(horizon > 0.0)) throw std::invalid_argument("TimeGrid: horizon must be positive");
        if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be at least 1");
    }

    double dt() const { return horizon / static_cast<double>(n_steps); }
    double time_at(std::size_t k) const { return static_cast<double>(k) * dt(); }

    double horizon;
    std::size_t n_steps;
};

}  // namespace beliefsim
