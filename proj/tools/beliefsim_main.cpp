#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "beliefsim/config.hpp"
#include "beliefsim/errors.hpp"
#include "beliefsim/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"belief-market simulation and calibration experiments"};
    std::string kind_name;
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
    bool threads_set = false;

    app.add_option("kind", kind_name, "experiment kind: market, bias, or aggregate")
        ->required();
    app.add_option("--config", config_path, "flat key = value config file");
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--seed", seed, "override the config seed")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--threads", threads, "override the config thread count")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { threads_set = true; });

    CLI11_PARSE(app, argc, argv);

    try {
        const beliefsim::ExperimentKind kind = beliefsim::kind_from_string(kind_name);
        beliefsim::ConfigMap overrides;
        if (!config_path.empty()) overrides = beliefsim::parse_config_file(config_path);
        if (seed_set) overrides["seed"] = std::to_string(seed);
        if (threads_set) overrides["threads"] = std::to_string(threads);
        const beliefsim::ConfigMap resolved = beliefsim::resolve_config(kind, overrides);
        const beliefsim::ExperimentOutput out =
            beliefsim::run_experiment(kind, resolved, out_dir);
        std::cout << "config_digest=" << out.digest << "\n";
        std::cout << "csv=" << out.csv_path.string() << "\n";
        std::cout << "svg=" << out.svg_path.string() << "\n";
        if (!out.note.empty()) std::cout << out.note << "\n";
        return 0;
    } catch (const beliefsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
