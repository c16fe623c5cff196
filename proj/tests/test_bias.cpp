#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "beliefsim/bias_model.hpp"

using namespace beliefsim;

namespace {

BiasConfig small_config() {
    BiasConfig cfg;
    cfg.info_levels = {1.0, 100.0, 10000.0};
    cfg.n_paths = 4;
    cfg.grid = TimeGrid(0.5, 50);
    cfg.seed = 424242;
    return cfg;
}

}  // namespace

TEST_CASE("ambiguity is the conditional price standard deviation") {
    CHECK(ambiguity({0.0, 0.0}) == 0.0);
    // sqrt(expm1(s^2)) * exp(m + s^2/2), written the other way round
    CHECK(ambiguity({0.0, 0.5}) == doctest::Approx(0.603900533211).epsilon(1e-10));
    CHECK(ambiguity({1.0, 0.3}) ==
          doctest::Approx(std::sqrt(std::expm1(0.09)) * std::exp(1.0 + 0.045)).epsilon(1e-13));
}

TEST_CASE("bias weight endpoints and monotonicity") {
    CHECK(bias_weight(0.0, 1e-3, 2.4) == 0.0);
    CHECK(bias_weight(5.0, 0.0, 2.4) == 0.0);
    CHECK(bias_weight(10.0, 1e-3, 2.4) == doctest::Approx(0.222124383190).epsilon(1e-10));
    double prev = -1.0;
    for (double g = 0.0; g < 40.0; g += 0.5) {
        const double b = bias_weight(g, 1e-3, 2.4);
        CHECK(b >= prev);
        CHECK(b >= 0.0);
        CHECK(b < 1.0);
        prev = b;
    }
}

TEST_CASE("opinionated drift scales with ambiguity") {
    BiasConfig cfg;
    const double base = opinion_drift(100.0, 0.0, cfg);
    CHECK(base == doctest::Approx(0.2 * 100.0).epsilon(1e-15));
    const double loaded = opinion_drift(100.0, 50.0, cfg);
    CHECK(loaded > base);
    CHECK(loaded == doctest::Approx(0.2 * 100.0 * (1.0 + 50.0 / (100.0 + 1e-6))).epsilon(1e-12));
}

TEST_CASE("mixed drift interpolates") {
    const auto base = [](double, double x) { return 0.08 * x; };
    CHECK(mixed_drift(0.0, 50.0, 0.0, 999.0, base) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(mixed_drift(0.0, 50.0, 1.0, 999.0, base) == doctest::Approx(999.0).epsilon(1e-15));
    CHECK(mixed_drift(0.0, 50.0, 0.25, 8.0, base) ==
          doctest::Approx(0.75 * 4.0 + 0.25 * 8.0).epsilon(1e-15));
    CHECK_THROWS_AS(mixed_drift(0.0, 1.0, 1.5, 0.0, base), std::invalid_argument);
}

TEST_CASE("ambiguity state ties the pieces together") {
    BiasConfig cfg;
    const LognormalLaw post{std::log(100.0), 0.2};
    const AmbiguityState st = ambiguity_state(post, cfg);
    CHECK(st.s_hat == doctest::Approx(lognormal_mean(post)).epsilon(1e-15));
    CHECK(st.gamma == doctest::Approx(ambiguity(post)).epsilon(1e-15));
    CHECK(st.beta == doctest::Approx(bias_weight(st.gamma, cfg.kappa_b, cfg.p_b)).epsilon(1e-15));
}

TEST_CASE("validation flags bad parameters") {
    BiasConfig cfg;
    validate_bias(cfg);
    cfg.p_b = -1.0;
    CHECK_THROWS_AS(validate_bias(cfg), std::invalid_argument);
    cfg = BiasConfig{};
    cfg.kappa_b = -0.5;
    CHECK_THROWS_AS(validate_bias(cfg), std::invalid_argument);
    cfg = BiasConfig{};
    cfg.sigma_star = 0.0;
    CHECK_THROWS_AS(validate_bias(cfg), std::invalid_argument);
}

TEST_CASE("paths coincide bitwise when the bias channel is off") {
    BiasConfig cfg = small_config();
    cfg.kappa_b = 0.0;
    const BiasPairResult res = simulate_bias_pair_stats(cfg, 1.0, 1);
    CHECK(res.sup_sq_error == 0.0);
    CHECK(res.int_beta_sq == 0.0);
    for (std::size_t k = 0; k < res.bundle.true_path.size(); ++k)
        CHECK(res.bundle.true_path[k] == res.bundle.synthetic_path[k]);
}

TEST_CASE("more information shrinks the bias integral") {
    BiasConfig cfg = small_config();
    const BiasPairResult low = simulate_bias_pair_stats(cfg, 1.0, 0);
    const BiasPairResult high = simulate_bias_pair_stats(cfg, 1e6, 0);
    CHECK(low.int_beta_sq > high.int_beta_sq);
    CHECK(high.int_beta_sq < 1e-4);
    CHECK(low.sup_sq_error > high.sup_sq_error);
}

TEST_CASE("rate experiment fits a negative slope on decaying errors") {
    BiasConfig cfg = small_config();
    const RateResult res = rate_experiment(cfg, 0.5);
    REQUIRE(res.summary.size() == cfg.info_levels.size());
    CHECK(res.slope < 0.0);
    CHECK(res.eta_target == 0.5);
    double prev = 1e300;
    for (const LevelStat& s : res.summary) {
        CHECK(s.mean_aux < prev);
        prev = s.mean_aux;
    }
}

TEST_CASE("rate experiment is thread-count invariant") {
    BiasConfig cfg = small_config();
    cfg.threads = 1;
    const RateResult a = rate_experiment(cfg, 0.5);
    cfg.threads = 3;
    const RateResult b = rate_experiment(cfg, 0.5);
    CHECK(a.slope == b.slope);
    for (std::size_t i = 0; i < a.paths.size(); ++i)
        CHECK(a.paths[i].sup_sq_error == b.paths[i].sup_sq_error);
}
