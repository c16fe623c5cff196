#pragma once

#include <filesystem>
#include <string>

#include "beliefsim/config.hpp"

namespace beliefsim {

struct ExperimentOutput {
    std::filesystem::path csv_path;
    std::filesystem::path svg_path;
    std::string digest;
    std::string note;  // one-line kind-specific summary for the console
};

// Runs one experiment kind on a resolved config and writes the stats table
// plus the sample-path figure into out_dir.
ExperimentOutput run_experiment(ExperimentKind kind, const ConfigMap& resolved,
                                const std::filesystem::path& out_dir);

}  // namespace beliefsim
