#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "beliefsim/time_grid.hpp"

namespace beliefsim {

// Linear filter for a mean-reverting latent drift observed through a noisy
// integrated signal dY = a dt + sqrt(R) dV.
struct FilterModel {
    double kappa_a = 2.0;   // mean-reversion speed of the latent drift
    double a_bar = 0.08;    // long-run drift level
    double sigma_a = 0.5;   // volatility of the latent drift
    double R = 0.004;       // observation noise intensity
    double a0_hat = 0.08;   // filter initial mean
    double P0 = -1.0;       // filter initial variance; negative -> steady state

    // Stationary variance of the latent drift itself.
    double stationary_variance() const;
    // Fixed point of the error-variance recursion.
    double steady_state_variance() const;
};

void validate_filter(const FilterModel& model);

struct FilterPath {
    std::vector<double> a_hat;  // n_steps + 1 estimates
    std::vector<double> P;      // n_steps + 1 error variances
};

// Runs the discretized mean/variance recursion on the observation increments.
FilterPath kalman_bucy(std::span<const double> dY, const FilterModel& model,
                       const TimeGrid& grid);

}  // namespace beliefsim
