#include "beliefsim/bias_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "beliefsim/belief_market.hpp"
#include "beliefsim/errors.hpp"
#include "beliefsim/numerics.hpp"
#include "beliefsim/parallel.hpp"
#include "beliefsim/rng.hpp"

namespace beliefsim {

void validate_bias(const BiasConfig& cfg) {
    if (!(cfg.kappa_b >= 0.0)) throw std::invalid_argument("BiasConfig: kappa_b < 0");
    if (!(cfg.p_b > 0.0)) throw std::invalid_argument("BiasConfig: p_b must be positive");
    if (cfg.p_b < 1.0)
        std::fputs("warning: p_b < 1 makes the bias weight non-Lipschitz at zero ambiguity\n",
                   stderr);
    if (!(cfg.eps > 0.0)) throw std::invalid_argument("BiasConfig: eps must be positive");
    if (!(cfg.tau > 0.0)) throw std::invalid_argument("BiasConfig: tau must be positive");
    if (!(cfg.s0 > 0.0)) throw std::invalid_argument("BiasConfig: s0 must be positive");
    // The ambiguity channel is driven by price noise; a zero volatility makes
    // every level identical and the rate fit degenerate.
    if (!(cfg.sigma_star > 0.0))
        throw std::invalid_argument("BiasConfig: sigma_star must be positive");
    if (cfg.info_levels.empty()) throw std::invalid_argument("BiasConfig: info_levels empty");
    for (std::size_t k = 0; k < cfg.info_levels.size(); ++k) {
        if (!(cfg.info_levels[k] >= 1.0))
            throw std::invalid_argument("BiasConfig: info levels must be >= 1");
        if (k > 0 && !(cfg.info_levels[k] > cfg.info_levels[k - 1]))
            throw std::invalid_argument("BiasConfig: info levels must be strictly increasing");
    }
    if (cfg.n_paths == 0) throw std::invalid_argument("BiasConfig: n_paths must be positive");
}

double ambiguity(const LognormalLaw& posterior) { return lognormal_std(posterior); }

double bias_weight(double gamma, double kappa_b, double p_b) {
    if (!(gamma >= 0.0)) throw std::invalid_argument("bias_weight: gamma must be nonnegative");
    if (!(kappa_b >= 0.0) || !(p_b > 0.0))
        throw std::invalid_argument("bias_weight: kappa_b >= 0 and p_b > 0 required");
    return -std::expm1(-kappa_b * std::pow(gamma, p_b));
}

double opinion_drift(double s_hat, double gamma, const BiasConfig& cfg) {
    if (!(s_hat > 0.0)) throw std::invalid_argument("opinion_drift: s_hat must be positive");
    if (!(gamma >= 0.0)) throw std::invalid_argument("opinion_drift: gamma must be nonnegative");
    return cfg.mu_op * s_hat * (1.0 + cfg.c_rel * gamma / (s_hat + cfg.eps));
}

double mixed_drift(double t, double x, double beta, double rho,
                   const std::function<double(double, double)>& base_drift) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("mixed_drift: beta must lie in [0, 1]");
    return (1.0 - beta) * base_drift(t, x) + beta * rho;
}

AmbiguityState ambiguity_state(const LognormalLaw& posterior, const BiasConfig& cfg) {
    AmbiguityState st;
    st.s_hat = lognormal_mean(posterior);
    st.gamma = ambiguity(posterior);
    st.beta = bias_weight(st.gamma, cfg.kappa_b, cfg.p_b);
    return st;
}

BiasPairResult simulate_bias_pair_stats(const BiasConfig& cfg, double n,
                                        std::uint64_t path_index) {
    validate_bias(cfg);
    if (!(n >= 1.0)) throw std::invalid_argument("simulate_bias_pair: n must be >= 1");

    const TimeGrid& grid = cfg.grid;
    const double dt = grid.dt();
    const BrownianPath w = generate_brownian(cfg.seed, path_index, grid);
    GaussianStream obs(cfg.seed, path_index, kStreamObservation);
    const TraderConfig filter{cfg.tau, 1.0};

    const double log_s0 = std::log(cfg.s0);
    const double drift_log = cfg.mu_star - 0.5 * cfg.sigma_star * cfg.sigma_star;
    const double floor = kPositivityFloorRel * cfg.s0;
    const auto base_drift = [&](double, double x) { return cfg.mu_star * x; };

    BiasPairResult out{PathBundle(grid)};
    out.bundle.seed = cfg.seed;
    out.bundle.path_index = path_index;
    auto& s_true = out.bundle.true_path;
    auto& s_syn = out.bundle.synthetic_path;
    s_true.assign(grid.n_steps + 1, cfg.s0);
    s_syn.assign(grid.n_steps + 1, cfg.s0);

    double sup_sq = 0.0;
    double beta_acc = 0.0;
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        const double t = grid.time_at(k);
        const double x_true = std::log(s_true[k]);
        const double prior_mean = log_s0 + drift_log * t;
        const double prior_var = cfg.sigma_star * cfg.sigma_star * t;
        const LognormalLaw post =
            trader_posterior(x_true, n, filter, prior_mean, prior_var, obs);
        const AmbiguityState st = ambiguity_state(post, cfg);
        const double rho = opinion_drift(st.s_hat, st.gamma, cfg);
        beta_acc += st.beta * st.beta;

        const double drift_syn = mixed_drift(t, s_syn[k], st.beta, rho, base_drift);
        const double drift_tru = base_drift(t, s_true[k]);
        const double next_syn =
            s_syn[k] + drift_syn * dt + cfg.sigma_star * s_syn[k] * w.increments[k];
        const double next_tru =
            s_true[k] + drift_tru * dt + cfg.sigma_star * s_true[k] * w.increments[k];
        if (!std::isfinite(next_syn) || !std::isfinite(next_tru))
            throw NumericalError("simulate_bias_pair: non-finite state at step " +
                                 std::to_string(k + 1));
        s_syn[k + 1] = std::max(next_syn, floor);
        s_true[k + 1] = std::max(next_tru, floor);
        const double gap = s_syn[k + 1] - s_true[k + 1];
        sup_sq = std::max(sup_sq, gap * gap);
    }
    out.sup_sq_error = sup_sq;
    out.int_beta_sq = beta_acc * dt;
    return out;
}

PathBundle simulate_bias_pair(const BiasConfig& cfg, double n, std::uint64_t path_index) {
    return simulate_bias_pair_stats(cfg, n, path_index).bundle;
}

RateResult rate_experiment(const BiasConfig& cfg, double eta_target) {
    validate_bias(cfg);
    RateResult result;
    result.eta_target = eta_target;
    result.paths.reserve(cfg.info_levels.size() * cfg.n_paths);
    for (double n : cfg.info_levels) {
        std::vector<double> sup_sq(cfg.n_paths), beta_sq(cfg.n_paths);
        parallel_for(cfg.n_paths, cfg.threads, [&](std::size_t p) {
            const BiasPairResult r = simulate_bias_pair_stats(cfg, n, p);
            sup_sq[p] = r.sup_sq_error;
            beta_sq[p] = r.int_beta_sq;
        });
        for (std::size_t p = 0; p < cfg.n_paths; ++p)
            result.paths.push_back({n, p, sup_sq[p], beta_sq[p]});
        result.summary.push_back(summarize_level(n, sup_sq, beta_sq));
    }

    std::vector<double> log_n, log_err;
    for (const auto& stat : result.summary) {
        if (stat.mean_sup_sq > 0.0) {
            log_n.push_back(std::log(stat.level));
            log_err.push_back(std::log(stat.mean_sup_sq));
        }
    }
    if (log_n.size() < 2)
        throw NumericalError("rate_experiment: fewer than two levels with positive error");
    try {
        result.slope = ols_fit(log_n, log_err).slope;
    } catch (const std::invalid_argument& e) {
        throw NumericalError(std::string("rate_experiment: degenerate fit: ") + e.what());
    }
    return result;
}

}  // namespace beliefsim
