#include "beliefsim/belief_market.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "beliefsim/parallel.hpp"

namespace beliefsim {

void validate_market(const MarketConfig& cfg) {
    if (!(cfg.s0 > 0.0)) throw std::invalid_argument("MarketConfig: s0 must be positive");
    if (!(cfg.sigma_star >= 0.0))
        throw std::invalid_argument("MarketConfig: sigma_star must be nonnegative");
    if (cfg.traders.empty()) throw std::invalid_argument("MarketConfig: no traders");
    double total = 0.0;
    for (const auto& tr : cfg.traders) {
        if (!(tr.tau > 0.0)) throw std::invalid_argument("MarketConfig: tau must be positive");
        if (!(tr.weight > 0.0))
            throw std::invalid_argument("MarketConfig: trader weights must be positive");
        total += tr.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("MarketConfig: trader weights must sum to 1");
    if (cfg.info_levels.empty())
        throw std::invalid_argument("MarketConfig: info_levels is empty");
    for (std::size_t k = 0; k < cfg.info_levels.size(); ++k) {
        if (!(cfg.info_levels[k] >= 1.0))
            throw std::invalid_argument("MarketConfig: info levels must be >= 1");
        if (k > 0 && !(cfg.info_levels[k] > cfg.info_levels[k - 1]))
            throw std::invalid_argument("MarketConfig: info levels must be strictly increasing");
    }
    if (cfg.n_paths == 0) throw std::invalid_argument("MarketConfig: n_paths must be positive");
    validate_family(cfg.family);
}

LognormalLaw trader_posterior(double log_price_true, double n, const TraderConfig& trader,
                              double prior_mean, double prior_var, GaussianStream& rng) {
    if (!(n >= 1.0)) throw std::invalid_argument("trader_posterior: n must be >= 1");
    if (!(trader.tau > 0.0)) throw std::invalid_argument("trader_posterior: tau must be positive");
    const double obs_var = trader.tau * trader.tau / n;
    // Draw the standard normal first so that runs at different n reuse the
    // same underlying noise, which couples information levels pathwise.
    const double z = rng.next();
    const double y = log_price_true + std::sqrt(obs_var) * z;
    const auto [post_mean, post_var] =
        gaussian_conjugate_posterior(prior_mean, prior_var, y, obs_var);
    return {post_mean, std::sqrt(post_var)};
}

QuantileMixture market_beliefs(const std::vector<LognormalLaw>& posteriors,
                               const std::vector<double>& weights) {
    QuantileMixture mix{posteriors, weights};
    validate_mixture(mix);
    return mix;
}

MarketPairResult simulate_market_pair_stats(const MarketConfig& cfg, double n,
                                            std::uint64_t path_index) {
    validate_market(cfg);
    if (!(n >= 1.0)) throw std::invalid_argument("simulate_market_pair: n must be >= 1");

    const TimeGrid& grid = cfg.grid;
    const double dt = grid.dt();
    const BrownianPath w = generate_brownian(cfg.seed, path_index, grid);
    GaussianStream obs(cfg.seed, path_index, kStreamObservation);

    const double log_s0 = std::log(cfg.s0);
    const double drift_log = cfg.mu_star - 0.5 * cfg.sigma_star * cfg.sigma_star;
    const double floor = kPositivityFloorRel * cfg.s0;

    std::vector<double> trader_weights;
    trader_weights.reserve(cfg.traders.size());
    for (const auto& tr : cfg.traders) trader_weights.push_back(tr.weight);

    MarketPairResult out{PathBundle(grid)};
    out.bundle.seed = cfg.seed;
    out.bundle.path_index = path_index;
    auto& s_true = out.bundle.true_path;
    auto& s_syn = out.bundle.synthetic_path;
    s_true.assign(grid.n_steps + 1, cfg.s0);
    s_syn.assign(grid.n_steps + 1, cfg.s0);

    std::vector<LognormalLaw> posteriors(cfg.traders.size());
    double w2_acc = 0.0;
    double sup_sq = 0.0;
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        const double t = grid.time_at(k);
        const double x_true = std::log(s_true[k]);
        const double prior_mean = log_s0 + drift_log * t;
        const double prior_var = cfg.sigma_star * cfg.sigma_star * t;
        for (std::size_t i = 0; i < cfg.traders.size(); ++i)
            posteriors[i] =
                trader_posterior(x_true, n, cfg.traders[i], prior_mean, prior_var, obs);
        const QuantileMixture mix = market_beliefs(posteriors, trader_weights);
        const auto [m1, sd] = barycenter_lognormal_moments(mix);
        const double dev = m1 - s_true[k];
        w2_acc += sd * sd + dev * dev;

        const DriftVol syn = coefficients(t, s_syn[k], m1, sd, cfg.family);
        // The true price runs the same family at the collapsed belief
        // (m1, s) = (x, 0), which is exactly (mu* x, sigma* x).
        const DriftVol tru = coefficients(t, s_true[k], s_true[k], 0.0, cfg.family);

        const double next_syn = s_syn[k] + syn.drift * dt + syn.vol * w.increments[k];
        const double next_tru = s_true[k] + tru.drift * dt + tru.vol * w.increments[k];
        if (!std::isfinite(next_syn) || !std::isfinite(next_tru))
            throw NumericalError("simulate_market_pair: non-finite state at step " +
                                 std::to_string(k + 1));
        s_syn[k + 1] = std::max(next_syn, floor);
        s_true[k + 1] = std::max(next_tru, floor);
        const double gap = s_syn[k + 1] - s_true[k + 1];
        sup_sq = std::max(sup_sq, gap * gap);
    }
    out.sup_sq_error = sup_sq;
    out.mean_w2_sq = w2_acc / static_cast<double>(grid.n_steps);
    return out;
}

PathBundle simulate_market_pair(const MarketConfig& cfg, double n,
                                std::uint64_t path_index) {
    return simulate_market_pair_stats(cfg, n, path_index).bundle;
}

ConvergenceResult convergence_experiment(const MarketConfig& cfg) {
    validate_market(cfg);
    ConvergenceResult result;
    result.paths.reserve(cfg.info_levels.size() * cfg.n_paths);
    for (double n : cfg.info_levels) {
        std::vector<double> sup_sq(cfg.n_paths), w2(cfg.n_paths);
        parallel_for(cfg.n_paths, cfg.threads, [&](std::size_t p) {
            const MarketPairResult r = simulate_market_pair_stats(cfg, n, p);
            sup_sq[p] = r.sup_sq_error;
            w2[p] = r.mean_w2_sq;
        });
        for (std::size_t p = 0; p < cfg.n_paths; ++p)
            result.paths.push_back({n, p, sup_sq[p], w2[p]});
        result.summary.push_back(summarize_level(n, sup_sq, w2));
    }
    return result;
}

std::pair<DiscreteMeasure1D, double> rademacher_counterexample() {
    const DiscreteMeasure1D group({-1.0, 1.0}, {0.5, 0.5});
    const DiscreteMeasure1D pooled =
        w2_barycenter_1d({group, group}, {0.5, 0.5});
    const double dist = w2_discrete(pooled, DiscreteMeasure1D::dirac(1.0));
    return {pooled, dist};
}

}  // namespace beliefsim
