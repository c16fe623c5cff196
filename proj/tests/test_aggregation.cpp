#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "beliefsim/aggregation.hpp"

using namespace beliefsim;

namespace {

AggregateConfig small_config() {
    AggregateConfig cfg;
    cfg.budgets = {0.5, 5.0};
    cfg.n_paths = 3;
    cfg.grid = TimeGrid(1.0, 60);
    cfg.seed = 31337;
    return cfg;
}

}  // namespace

TEST_CASE("validation") {
    AggregateConfig cfg;
    validate_aggregate(cfg);
    cfg.beta = 1.5;
    CHECK_THROWS_AS(validate_aggregate(cfg), std::invalid_argument);
    cfg = AggregateConfig{};
    cfg.budgets.clear();
    CHECK_THROWS_AS(validate_aggregate(cfg), std::invalid_argument);
    cfg = AggregateConfig{};
    cfg.budgets = {0.5, -1.0};
    CHECK_THROWS_AS(validate_aggregate(cfg), std::invalid_argument);
    cfg = AggregateConfig{};
    cfg.sigma_star = 0.0;
    CHECK_THROWS_AS(validate_aggregate(cfg), std::invalid_argument);
}

TEST_CASE("zero shift keeps synthetic and filtered prices bitwise equal") {
    const AggregateConfig cfg = small_config();  // beta = 0.5 exactly
    const TripletPath tp = simulate_aggregation_triplet(cfg, 0.0, 0);
    CHECK(tp.sup_gap == 0.0);
    CHECK(tp.gap_bound == 0.0);
    for (std::size_t k = 0; k < tp.filtered_price.size(); ++k)
        CHECK(tp.filtered_price[k] == tp.synthetic_price[k]);
}

TEST_CASE("constant shift makes the gap identity exact") {
    const AggregateConfig cfg = small_config();
    const double delta = 0.15;
    const TripletPath tp = simulate_aggregation_triplet(cfg, delta, 1);
    const double expected = cfg.beta * delta * cfg.grid.horizon * cfg.s0;
    CHECK(tp.gap_bound == doctest::Approx(expected).epsilon(1e-12));
    CHECK(tp.sup_gap <= tp.gap_bound * (1.0 + 1e-9) + 1e-12);
    CHECK(tp.sup_gap == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("paths are seed and index deterministic") {
    const AggregateConfig cfg = small_config();
    const TripletPath a = simulate_aggregation_triplet(cfg, 0.1, 2);
    const TripletPath b = simulate_aggregation_triplet(cfg, 0.1, 2);
    CHECK(a.true_price == b.true_price);
    CHECK(a.synthetic_price == b.synthetic_price);
    const TripletPath c = simulate_aggregation_triplet(cfg, 0.1, 3);
    CHECK(a.true_price != c.true_price);
}

TEST_CASE("larger budgets tighten the collapse") {
    AggregateConfig cfg = small_config();
    const std::vector<CollapseRow> rows = collapse_experiment(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].tilt.delta_shift > rows[1].tilt.delta_shift);
    for (std::size_t p = 0; p < cfg.n_paths; ++p) {
        CHECK(rows[1].sup_gaps[p] < rows[0].sup_gaps[p]);
        CHECK(rows[0].sup_gaps[p] <= rows[0].gap_bounds[p] * (1.0 + 1e-9) + 1e-12);
        CHECK(rows[1].sup_gaps[p] <= rows[1].gap_bounds[p] * (1.0 + 1e-9) + 1e-12);
    }
    CHECK(rows[0].tilt.kl == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(rows[1].tilt.kl == doctest::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("filter correlation is positive on the default configuration") {
    AggregateConfig cfg;
    cfg.budgets = {0.5};
    cfg.n_paths = 10;
    const std::vector<CollapseRow> rows = collapse_experiment(cfg);
    CHECK(rows[0].mean_corr > 0.2);
    CHECK(rows[0].mean_corr <= 1.0);
}

TEST_CASE("collapse experiment is thread invariant") {
    AggregateConfig cfg = small_config();
    cfg.threads = 1;
    const std::vector<CollapseRow> a = collapse_experiment(cfg);
    cfg.threads = 4;
    const std::vector<CollapseRow> b = collapse_experiment(cfg);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t p = 0; p < cfg.n_paths; ++p)
            CHECK(a[r].sup_gaps[p] == b[r].sup_gaps[p]);
}
