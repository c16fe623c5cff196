#include "beliefsim/aggregation.hpp"

#include <cmath>
#include <stdexcept>

#include "beliefsim/numerics.hpp"
#include "beliefsim/parallel.hpp"
#include "beliefsim/rng.hpp"

namespace beliefsim {

void validate_aggregate(const AggregateConfig& cfg) {
    if (!(cfg.s0 > 0.0)) throw std::invalid_argument("AggregateConfig: s0 must be positive");
    if (!(cfg.sigma_star > 0.0))
        throw std::invalid_argument("AggregateConfig: sigma_star must be positive");
    if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0))
        throw std::invalid_argument("AggregateConfig: beta must lie in [0, 1]");
    if (!(cfg.gamma > 0.0)) throw std::invalid_argument("AggregateConfig: gamma must be positive");
    if (cfg.budgets.empty())
        throw std::invalid_argument("AggregateConfig: budget ladder is empty");
    for (double k : cfg.budgets)
        if (!(k > 0.0)) throw std::invalid_argument("AggregateConfig: budgets must be positive");
    if (cfg.n_paths == 0) throw std::invalid_argument("AggregateConfig: n_paths must be positive");
    if (cfg.threads < 1) throw std::invalid_argument("AggregateConfig: threads must be positive");
    validate_family(cfg.family);
    validate_filter(cfg.filter);
}

TripletPath simulate_aggregation_triplet(const AggregateConfig& cfg, double delta_shift,
                                         std::uint64_t path_index) {
    const TimeGrid& grid = cfg.grid;
    const std::size_t n = grid.n_steps;
    const double dt = grid.dt();
    const double sqrt_dt = std::sqrt(dt);
    const FilterModel& fm = cfg.filter;

    GaussianStream gs_drift(cfg.seed, path_index, kStreamDrift);
    GaussianStream gs_obs(cfg.seed, path_index, kStreamObservation);
    GaussianStream gs_price(cfg.seed, path_index, kStreamBrownian);
    GaussianStream gs_init(cfg.seed, path_index, kStreamInitial);

    TripletPath out;
    out.a_true.resize(n + 1);
    out.a_true[0] = fm.a_bar + std::sqrt(fm.stationary_variance()) * gs_init.next();
    std::vector<double> dY(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = out.a_true[k];
        dY[k] = a * dt + std::sqrt(fm.R * dt) * gs_obs.next();
        out.a_true[k + 1] = a + fm.kappa_a * (fm.a_bar - a) * dt + fm.sigma_a * sqrt_dt * gs_drift.next();
    }
    const FilterPath filt = kalman_bucy(dY, fm, grid);
    out.a_hat = filt.a_hat;

    const double sig = cfg.sigma_star;
    const double sig_hat = sig * cfg.s0;
    out.true_price.resize(n + 1);
    out.filtered_price.resize(n + 1);
    out.synthetic_price.resize(n + 1);
    double x = std::log(cfg.s0);
    out.true_price[0] = cfg.s0;
    out.filtered_price[0] = cfg.s0;
    out.synthetic_price[0] = cfg.s0;
    const double sqrt_r = std::sqrt(fm.R);
    for (std::size_t k = 0; k < n; ++k) {
        x += (out.a_true[k] - 0.5 * sig * sig) * dt + sig * sqrt_dt * gs_price.next();
        out.true_price[k + 1] = std::exp(x);
        const double a_hat = filt.a_hat[k];
        const double innovation = (dY[k] - a_hat * dt) / sqrt_r;
        const double psi = a_hat + delta_shift;
        out.filtered_price[k + 1] =
            out.filtered_price[k] + cfg.s0 * a_hat * dt + sig_hat * innovation;
        out.synthetic_price[k + 1] =
            out.synthetic_price[k] +
            cfg.s0 * ((1.0 - cfg.beta) * a_hat + cfg.beta * psi) * dt + sig_hat * innovation;
        const double gap = std::abs(out.synthetic_price[k + 1] - out.filtered_price[k + 1]);
        out.sup_gap = std::max(out.sup_gap, gap);
        out.gap_bound += cfg.beta * cfg.s0 * std::abs(psi - a_hat) * dt;
    }
    out.drift_corr = pearson_correlation(out.a_true, out.a_hat);
    return out;
}

std::vector<CollapseRow> collapse_experiment(const AggregateConfig& cfg) {
    validate_aggregate(cfg);
    std::vector<CollapseRow> rows;
    rows.reserve(cfg.budgets.size());
    for (double K : cfg.budgets) {
        CollapseRow row;
        row.K = K;
        row.tilt = calibrate_budget(K, cfg.grid.horizon, cfg.family,
                                    BudgetMode::constant_theta, cfg.gamma);
        row.sup_gaps.resize(cfg.n_paths);
        row.gap_bounds.resize(cfg.n_paths);
        std::vector<double> corr(cfg.n_paths);
        parallel_for(cfg.n_paths, cfg.threads, [&](std::size_t p) {
            const TripletPath tp = simulate_aggregation_triplet(cfg, row.tilt.delta_shift, p);
            row.sup_gaps[p] = tp.sup_gap;
            row.gap_bounds[p] = tp.gap_bound;
            corr[p] = tp.drift_corr;
        });
        row.mean_corr = mean_of(corr);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace beliefsim
