#include "beliefsim/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "beliefsim/aggregation.hpp"
#include "beliefsim/belief_market.hpp"
#include "beliefsim/bias_model.hpp"
#include "beliefsim/result_table.hpp"
#include "beliefsim/svg.hpp"

namespace beliefsim {

namespace {

constexpr const char* kBlue = "#1f77b4";
constexpr const char* kRed = "#d62728";
constexpr const char* kBlack = "#222222";

std::vector<double> time_axis(const TimeGrid& grid) {
    std::vector<double> x(grid.n_steps + 1);
    for (std::size_t k = 0; k <= grid.n_steps; ++k) x[k] = grid.time_at(k);
    return x;
}

std::string level_label(double n) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", n);
    return buf;
}

ResultTable path_stat_table(const std::vector<PathStat>& paths, const std::string& aux_name) {
    ResultTable table;
    table.columns = {"level", "path_index", "sup_sq_error", aux_name};
    for (const PathStat& p : paths)
        table.rows.push_back({p.level, static_cast<double>(p.path_index), p.sup_sq_error, p.aux});
    return table;
}

ExperimentOutput run_market(const ConfigMap& resolved, const std::filesystem::path& out_dir) {
    const MarketConfig cfg = make_market_config(resolved);
    const ConvergenceResult res = convergence_experiment(cfg);

    ExperimentOutput out;
    out.digest = config_digest(resolved);
    out.csv_path = out_dir / "market_stats.csv";
    out.svg_path = out_dir / "market_figure.svg";
    write_csv(path_stat_table(res.paths, "mean_w2_sq"), out.csv_path);

    SvgFigure fig;
    fig.n_cols = 2;
    fig.x = time_axis(cfg.grid);
    fig.metadata = out.digest;
    for (double level : cfg.info_levels) {
        const PathBundle bundle = simulate_market_pair(cfg, level, 0);
        SvgPanel left;
        left.title = "true price, n = " + level_label(level);
        left.series.push_back({bundle.true_path, kBlue});
        SvgPanel right;
        right.title = "synthetic price, n = " + level_label(level);
        right.series.push_back({bundle.synthetic_path, kRed});
        fig.panels.push_back(std::move(left));
        fig.panels.push_back(std::move(right));
    }
    write_svg(fig, out.svg_path);

    double worst = 0.0;
    for (const LevelStat& s : res.summary) worst = std::max(worst, s.mean_sup_sq);
    out.note = "levels=" + std::to_string(res.summary.size()) +
               " max_mean_sup_sq=" + format_double(worst);
    return out;
}

ExperimentOutput run_bias(const ConfigMap& resolved, const std::filesystem::path& out_dir) {
    const BiasConfig cfg = make_bias_config(resolved);
    const RateResult res = rate_experiment(cfg, 0.5);

    ExperimentOutput out;
    out.digest = config_digest(resolved);
    out.csv_path = out_dir / "bias_stats.csv";
    out.svg_path = out_dir / "bias_figure.svg";
    write_csv(path_stat_table(res.paths, "int_beta_sq"), out.csv_path);

    SvgFigure fig;
    fig.n_cols = 2;
    fig.x = time_axis(cfg.grid);
    fig.metadata = out.digest;
    for (double level : cfg.info_levels) {
        const PathBundle bundle = simulate_bias_pair(cfg, level, 0);
        SvgPanel left;
        left.title = "true price, n = " + level_label(level);
        left.series.push_back({bundle.true_path, kBlue});
        SvgPanel right;
        right.title = "synthetic price, n = " + level_label(level);
        right.series.push_back({bundle.synthetic_path, kRed});
        fig.panels.push_back(std::move(left));
        fig.panels.push_back(std::move(right));
    }
    write_svg(fig, out.svg_path);
    out.note = "slope=" + format_double(res.slope);
    return out;
}

ExperimentOutput run_aggregate(const ConfigMap& resolved, const std::filesystem::path& out_dir) {
    const AggregateConfig cfg = make_aggregate_config(resolved);
    const std::vector<CollapseRow> rows = collapse_experiment(cfg);

    ExperimentOutput out;
    out.digest = config_digest(resolved);
    out.csv_path = out_dir / "aggregate_stats.csv";
    out.svg_path = out_dir / "aggregate_figure.svg";

    ResultTable table;
    table.columns = {"budget", "theta", "alpha", "kl_rate", "delta_shift", "gap_bound",
                     "mean_corr"};
    for (std::size_t p = 0; p < cfg.n_paths; ++p)
        table.columns.push_back("sup_gap_" + std::to_string(p));
    for (const CollapseRow& row : rows) {
        std::vector<double> r = {row.K,
                                 row.tilt.theta,
                                 row.tilt.alpha,
                                 row.tilt.kl,
                                 row.tilt.delta_shift,
                                 row.gap_bounds.front(),
                                 row.mean_corr};
        for (double g : row.sup_gaps) r.push_back(g);
        table.rows.push_back(std::move(r));
    }
    write_csv(table, out.csv_path);

    SvgFigure fig;
    fig.n_cols = 2;
    fig.common_y = true;
    fig.x = time_axis(cfg.grid);
    fig.metadata = out.digest;
    for (const CollapseRow& row : rows) {
        const TripletPath tp = simulate_aggregation_triplet(cfg, row.tilt.delta_shift, 0);
        SvgPanel left;
        left.title = "true and filtered price, K = " + level_label(row.K);
        left.series.push_back({tp.true_price, kBlue});
        left.series.push_back({tp.filtered_price, kBlack});
        SvgPanel right;
        right.title = "filtered and synthetic price, K = " + level_label(row.K);
        right.series.push_back({tp.filtered_price, kBlack});
        right.series.push_back({tp.synthetic_price, kRed});
        fig.panels.push_back(std::move(left));
        fig.panels.push_back(std::move(right));
    }
    write_svg(fig, out.svg_path);
    out.note = "budgets=" + std::to_string(rows.size());
    return out;
}

}  // namespace

ExperimentOutput run_experiment(ExperimentKind kind, const ConfigMap& resolved,
                                const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    switch (kind) {
        case ExperimentKind::market: return run_market(resolved, out_dir);
        case ExperimentKind::bias: return run_bias(resolved, out_dir);
        case ExperimentKind::aggregate: return run_aggregate(resolved, out_dir);
    }
    throw std::invalid_argument("run_experiment: unknown kind");
}

}  // namespace beliefsim
