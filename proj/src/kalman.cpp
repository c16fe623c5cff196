#include "beliefsim/kalman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "beliefsim/errors.hpp"

namespace beliefsim {

double FilterModel::stationary_variance() const {
    return sigma_a * sigma_a / (2.0 * kappa_a);
}

double FilterModel::steady_state_variance() const {
    // Root of P^2/R + 2 kappa P - sigma^2 = 0.
    const double kR = kappa_a * R;
    return -kR + std::sqrt(kR * kR + sigma_a * sigma_a * R);
}

void validate_filter(const FilterModel& model) {
    if (!(model.kappa_a > 0.0)) throw std::invalid_argument("FilterModel: kappa_a must be positive");
    if (!(model.sigma_a > 0.0)) throw std::invalid_argument("FilterModel: sigma_a must be positive");
    if (!(model.R > 0.0)) throw std::invalid_argument("FilterModel: R must be positive");
    if (!std::isfinite(model.a_bar) || !std::isfinite(model.a0_hat))
        throw std::invalid_argument("FilterModel: non-finite level parameter");
}

FilterPath kalman_bucy(std::span<const double> dY, const FilterModel& model,
                       const TimeGrid& grid) {
    validate_filter(model);
    if (dY.size() != grid.n_steps)
        throw std::invalid_argument("kalman_bucy: observation increments do not match the grid");
    const double dt = grid.dt();
    FilterPath out;
    out.a_hat.resize(grid.n_steps + 1);
    out.P.resize(grid.n_steps + 1);
    out.a_hat[0] = model.a0_hat;
    out.P[0] = model.P0 < 0.0 ? model.steady_state_variance() : model.P0;
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        const double a = out.a_hat[k];
        const double P = out.P[k];
        const double gain = P / model.R;
        const double a_next =
            a + model.kappa_a * (model.a_bar - a) * dt + gain * (dY[k] - a * dt);
        const double P_next =
            P + (model.sigma_a * model.sigma_a - 2.0 * model.kappa_a * P - P * P / model.R) * dt;
        if (!std::isfinite(a_next) || !std::isfinite(P_next))
            throw NumericalError("kalman_bucy: non-finite filter state at step " +
                                 std::to_string(k + 1));
        out.a_hat[k + 1] = a_next;
        out.P[k + 1] = P_next < 0.0 ? 0.0 : P_next;
    }
    return out;
}

}  // namespace beliefsim
