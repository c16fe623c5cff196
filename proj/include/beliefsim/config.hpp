#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "beliefsim/aggregation.hpp"
#include "beliefsim/belief_market.hpp"
#include "beliefsim/bias_model.hpp"

namespace beliefsim {

enum class ExperimentKind { market, bias, aggregate };

ExperimentKind kind_from_string(const std::string& name);
std::string kind_to_string(ExperimentKind kind);

using ConfigMap = std::map<std::string, std::string>;

// Flat "key = value" lines; '#' starts a comment; keys are dotted lowercase.
ConfigMap parse_config_text(const std::string& text, const std::string& origin);
ConfigMap parse_config_file(const std::filesystem::path& path);

ConfigMap default_config(ExperimentKind kind);

// Defaults overlaid with overrides; unknown keys are rejected by name, values
// normalized so the digest depends on the meaning rather than the spelling.
ConfigMap resolve_config(ExperimentKind kind, const ConfigMap& overrides);

std::string canonical_config(const ConfigMap& resolved);
std::string config_digest(const ConfigMap& resolved);

double get_double(const ConfigMap& cfg, const std::string& key);
std::uint64_t get_u64(const ConfigMap& cfg, const std::string& key);
std::vector<double> get_list(const ConfigMap& cfg, const std::string& key);
const std::string& get_string(const ConfigMap& cfg, const std::string& key);

MarketConfig make_market_config(const ConfigMap& resolved);
BiasConfig make_bias_config(const ConfigMap& resolved);
AggregateConfig make_aggregate_config(const ConfigMap& resolved);

}  // namespace beliefsim
