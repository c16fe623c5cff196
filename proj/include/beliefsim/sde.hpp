#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "beliefsim/brownian.hpp"
#include "beliefsim/errors.hpp"
#include "beliefsim/time_grid.hpp"

namespace beliefsim {

// Relative positivity floor for price simulations: paths are clamped at
// 1e-8 * s0 instead of being allowed to cross zero.
inline constexpr double kPositivityFloorRel = 1e-8;

// A coupled pair (or triple) of paths driven by shared noise.
struct PathBundle {
    PathBundle(const TimeGrid& grid) : grid(grid) {}

    TimeGrid grid;
    std::vector<double> true_path;
    std::vector<double> synthetic_path;
    std::vector<double> filtered_path;  // empty unless the model produces one
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
};

// Explicit Euler scheme for dX = b(t, x) dt + s(t, x) dW. Returns the state
// at every grid node, so the result has n_steps + 1 entries.
template <class Drift, class Diffusion>
std::vector<double> euler_maruyama(Drift&& drift, Diffusion&& diffusion, double x0,
                                   const BrownianPath& w, const TimeGrid& grid) {
    if (w.increments.size() != grid.n_steps)
        throw std::invalid_argument("euler_maruyama: path/grid size mismatch");
    const double dt = grid.dt();
    std::vector<double> x(grid.n_steps + 1);
    x[0] = x0;
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        const double t = grid.time_at(k);
        const double next =
            x[k] + drift(t, x[k]) * dt + diffusion(t, x[k]) * w.increments[k];
        if (!std::isfinite(next))
            throw NumericalError("euler_maruyama: non-finite state at step " +
                                 std::to_string(k + 1));
        x[k + 1] = next;
    }
    return x;
}

// Euler scheme for dS = mu S dt + sigma S dW with the positivity floor.
std::vector<double> simulate_gbm(double mu, double sigma, double s0,
                                 const BrownianPath& w, const TimeGrid& grid);

}  // namespace beliefsim
