#include "beliefsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "beliefsim/errors.hpp"
#include "beliefsim/result_table.hpp"

namespace beliefsim {

namespace {

enum class ValueType { num, integer, list, word, pairs };

struct KeySpec {
    const char* key;
    ValueType type;
    const char* default_value;
};

const std::vector<KeySpec>& common_schema() {
    static const std::vector<KeySpec> schema = {
        {"seed", ValueType::integer, "20250801"},
        {"threads", ValueType::integer, "1"},
        {"n_paths", ValueType::integer, "30"},
        {"grid.horizon", ValueType::num, "1"},
        {"grid.n_steps", ValueType::integer, "252"},
    };
    return schema;
}

const std::vector<KeySpec>& kind_schema(ExperimentKind kind) {
    static const std::vector<KeySpec> market = {
        {"market.s0", ValueType::num, "100"},
        {"market.mu_star", ValueType::num, "0.08"},
        {"market.sigma_star", ValueType::num, "0.6"},
        {"market.variant", ValueType::word, "baseline"},
        {"market.kappa", ValueType::num, "0"},
        {"market.kappa_d", ValueType::num, "0.35"},
        {"market.kappa_v", ValueType::num, "2.75"},
        {"market.lambda", ValueType::num, "0"},
        {"market.eps", ValueType::num, "0"},
        {"market.info_levels", ValueType::list, "1,10,100,1000"},
        {"market.traders", ValueType::pairs, "2:0.4,1.2:0.3,2.5:0.2,1.5:0.1"},
    };
    static const std::vector<KeySpec> bias = {
        {"bias.kappa_b", ValueType::num, "0.001"},
        {"bias.p_b", ValueType::num, "2.4"},
        {"bias.mu_op", ValueType::num, "0.2"},
        {"bias.c_rel", ValueType::num, "1"},
        {"bias.eps", ValueType::num, "1e-6"},
        {"bias.tau", ValueType::num, "14"},
        {"bias.s0", ValueType::num, "100"},
        {"bias.mu_star", ValueType::num, "0.08"},
        {"bias.sigma_star", ValueType::num, "0.6"},
        {"bias.info_levels", ValueType::list, "1,10,100,1000"},
    };
    static const std::vector<KeySpec> aggregate = {
        {"agg.s0", ValueType::num, "1"},
        {"agg.sigma_star", ValueType::num, "0.3"},
        {"agg.beta", ValueType::num, "0.5"},
        {"agg.gamma", ValueType::num, "1"},
        {"agg.prior", ValueType::word, "uniform"},
        {"agg.a_hat", ValueType::num, "0"},
        {"agg.c1", ValueType::num, "0.3"},
        {"agg.a_pi", ValueType::num, "2"},
        {"agg.b_pi", ValueType::num, "3"},
        {"agg.budgets", ValueType::list, "0.01,0.5,5,20"},
        {"filter.kappa_a", ValueType::num, "2"},
        {"filter.a_bar", ValueType::num, "0.08"},
        {"filter.sigma_a", ValueType::num, "0.5"},
        {"filter.r", ValueType::num, "0.004"},
        {"filter.a0_hat", ValueType::num, "0.08"},
        {"filter.p0", ValueType::num, "-1"},
    };
    switch (kind) {
        case ExperimentKind::market: return market;
        case ExperimentKind::bias: return bias;
        case ExperimentKind::aggregate: return aggregate;
    }
    throw std::invalid_argument("kind_schema: unknown kind");
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

double parse_num(const std::string& raw, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a number: '" + raw + "'");
    }
}

std::uint64_t parse_int(const std::string& raw, const std::string& key) {
    try {
        std::size_t used = 0;
        if (!raw.empty() && raw[0] == '-') throw std::invalid_argument(raw);
        const unsigned long long v = std::stoull(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a non-negative integer: '" + raw + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string normalize(const std::string& raw, ValueType type, const std::string& key) {
    switch (type) {
        case ValueType::num:
            return format_double(parse_num(raw, key));
        case ValueType::integer:
            return std::to_string(parse_int(raw, key));
        case ValueType::word: {
            const std::string w = lower(trim(raw));
            if (w.empty()) throw ConfigError("config key '" + key + "': empty value");
            return w;
        }
        case ValueType::list: {
            std::string out;
            const auto parts = split(raw, ',');
            if (parts.empty()) throw ConfigError("config key '" + key + "': empty list");
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out += ',';
                out += format_double(parse_num(trim(parts[i]), key));
            }
            return out;
        }
        case ValueType::pairs: {
            std::string out;
            for (const std::string& part : split(raw, ',')) {
                const auto halves = split(trim(part), ':');
                if (halves.size() != 2)
                    throw ConfigError("config key '" + key + "': expected value:value pairs");
                if (!out.empty()) out += ',';
                out += format_double(parse_num(trim(halves[0]), key));
                out += ':';
                out += format_double(parse_num(trim(halves[1]), key));
            }
            return out;
        }
    }
    throw std::invalid_argument("normalize: unknown value type");
}

}  // namespace

ExperimentKind kind_from_string(const std::string& name) {
    const std::string w = lower(trim(name));
    if (w == "market") return ExperimentKind::market;
    if (w == "bias") return ExperimentKind::bias;
    if (w == "aggregate") return ExperimentKind::aggregate;
    throw ConfigError("unknown experiment kind '" + name +
                      "' (expected market, bias, or aggregate)");
}

std::string kind_to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::market: return "market";
        case ExperimentKind::bias: return "bias";
        case ExperimentKind::aggregate: return "aggregate";
    }
    throw std::invalid_argument("kind_to_string: unknown kind");
}

ConfigMap parse_config_text(const std::string& text, const std::string& origin) {
    ConfigMap out;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + " line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + " line " + std::to_string(line_no) + ": empty key");
        if (value.empty())
            throw ConfigError(origin + " line " + std::to_string(line_no) + ": empty value");
        for (char ch : key) {
            const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
                            ch == '_' || ch == '.';
            if (!ok)
                throw ConfigError(origin + " line " + std::to_string(line_no) +
                                  ": bad character in key '" + key + "'");
        }
        if (out.count(key))
            throw ConfigError(origin + " line " + std::to_string(line_no) +
                              ": duplicate key '" + key + "'");
        out[key] = value;
    }
    return out;
}

ConfigMap parse_config_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

ConfigMap default_config(ExperimentKind kind) {
    ConfigMap out;
    out["kind"] = kind_to_string(kind);
    for (const KeySpec& spec : common_schema())
        out[spec.key] = normalize(spec.default_value, spec.type, spec.key);
    for (const KeySpec& spec : kind_schema(kind))
        out[spec.key] = normalize(spec.default_value, spec.type, spec.key);
    return out;
}

ConfigMap resolve_config(ExperimentKind kind, const ConfigMap& overrides) {
    ConfigMap resolved = default_config(kind);
    for (const auto& [key, raw] : overrides) {
        if (key == "kind") {
            if (kind_from_string(raw) != kind)
                throw ConfigError("config kind '" + raw + "' does not match requested '" +
                                  kind_to_string(kind) + "'");
            continue;
        }
        const ValueType* type = nullptr;
        for (const KeySpec& spec : common_schema())
            if (key == spec.key) type = &spec.type;
        for (const KeySpec& spec : kind_schema(kind))
            if (key == spec.key) type = &spec.type;
        if (!type) throw ConfigError("unknown config key '" + key + "'");
        resolved[key] = normalize(raw, *type, key);
    }
    // Enumerated words are checked here so typos fail at resolve time with
    // the key named, not deep inside model construction.
    if (const auto it = resolved.find("market.variant"); it != resolved.end()) {
        try {
            variant_from_string(it->second);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("market.variant: ") + e.what());
        }
    }
    if (const auto it = resolved.find("agg.prior"); it != resolved.end()) {
        if (it->second != "uniform" && it->second != "beta")
            throw ConfigError("agg.prior must be 'uniform' or 'beta', got '" + it->second +
                              "'");
    }
    return resolved;
}

std::string canonical_config(const ConfigMap& resolved) {
    std::string out;
    for (const auto& [key, value] : resolved) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    }
    return out;
}

std::string config_digest(const ConfigMap& resolved) {
    return hash_hex(fnv1a_hash(canonical_config(resolved)));
}

double get_double(const ConfigMap& cfg, const std::string& key) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) throw ConfigError("missing config key '" + key + "'");
    return parse_num(it->second, key);
}

std::uint64_t get_u64(const ConfigMap& cfg, const std::string& key) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) throw ConfigError("missing config key '" + key + "'");
    return parse_int(it->second, key);
}

std::vector<double> get_list(const ConfigMap& cfg, const std::string& key) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) throw ConfigError("missing config key '" + key + "'");
    std::vector<double> out;
    for (const std::string& part : split(it->second, ','))
        out.push_back(parse_num(trim(part), key));
    return out;
}

const std::string& get_string(const ConfigMap& cfg, const std::string& key) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) throw ConfigError("missing config key '" + key + "'");
    return it->second;
}

MarketConfig make_market_config(const ConfigMap& resolved) {
    MarketConfig cfg;
    cfg.s0 = get_double(resolved, "market.s0");
    cfg.mu_star = get_double(resolved, "market.mu_star");
    cfg.sigma_star = get_double(resolved, "market.sigma_star");
    try {
        cfg.family.variant = variant_from_string(get_string(resolved, "market.variant"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config key 'market.variant': ") + e.what());
    }
    cfg.family.mu_star = cfg.mu_star;
    cfg.family.sigma_star = cfg.sigma_star;
    cfg.family.kappa = get_double(resolved, "market.kappa");
    cfg.family.kappa_d = get_double(resolved, "market.kappa_d");
    cfg.family.kappa_v = get_double(resolved, "market.kappa_v");
    cfg.family.lambda = get_double(resolved, "market.lambda");
    cfg.family.eps = get_double(resolved, "market.eps");
    cfg.info_levels = get_list(resolved, "market.info_levels");
    cfg.traders.clear();
    for (const std::string& part : split(get_string(resolved, "market.traders"), ',')) {
        const auto halves = split(part, ':');
        if (halves.size() != 2)
            throw ConfigError("config key 'market.traders': expected tau:weight pairs");
        TraderConfig tr;
        tr.tau = parse_num(halves[0], "market.traders");
        tr.weight = parse_num(halves[1], "market.traders");
        cfg.traders.push_back(tr);
    }
    cfg.n_paths = static_cast<std::size_t>(get_u64(resolved, "n_paths"));
    cfg.grid = TimeGrid(get_double(resolved, "grid.horizon"),
                        static_cast<std::size_t>(get_u64(resolved, "grid.n_steps")));
    cfg.seed = get_u64(resolved, "seed");
    cfg.threads = static_cast<std::size_t>(get_u64(resolved, "threads"));
    // A value that fails the model's own checks came from the config here, so
    // surface it as a config error rather than a library-misuse exception.
    try {
        validate_market(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

BiasConfig make_bias_config(const ConfigMap& resolved) {
    BiasConfig cfg;
    cfg.kappa_b = get_double(resolved, "bias.kappa_b");
    cfg.p_b = get_double(resolved, "bias.p_b");
    cfg.mu_op = get_double(resolved, "bias.mu_op");
    cfg.c_rel = get_double(resolved, "bias.c_rel");
    cfg.eps = get_double(resolved, "bias.eps");
    cfg.tau = get_double(resolved, "bias.tau");
    cfg.s0 = get_double(resolved, "bias.s0");
    cfg.mu_star = get_double(resolved, "bias.mu_star");
    cfg.sigma_star = get_double(resolved, "bias.sigma_star");
    cfg.info_levels = get_list(resolved, "bias.info_levels");
    cfg.n_paths = static_cast<std::size_t>(get_u64(resolved, "n_paths"));
    cfg.grid = TimeGrid(get_double(resolved, "grid.horizon"),
                        static_cast<std::size_t>(get_u64(resolved, "grid.n_steps")));
    cfg.seed = get_u64(resolved, "seed");
    cfg.threads = static_cast<std::size_t>(get_u64(resolved, "threads"));
    try {
        validate_bias(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

AggregateConfig make_aggregate_config(const ConfigMap& resolved) {
    AggregateConfig cfg;
    cfg.s0 = get_double(resolved, "agg.s0");
    cfg.sigma_star = get_double(resolved, "agg.sigma_star");
    cfg.beta = get_double(resolved, "agg.beta");
    cfg.gamma = get_double(resolved, "agg.gamma");
    const std::string& prior = get_string(resolved, "agg.prior");
    if (prior == "uniform") {
        cfg.family = ExpertFamily::uniform(get_double(resolved, "agg.a_hat"),
                                           get_double(resolved, "agg.c1"));
    } else if (prior == "beta") {
        cfg.family = ExpertFamily::beta(get_double(resolved, "agg.a_hat"),
                                        get_double(resolved, "agg.c1"),
                                        get_double(resolved, "agg.a_pi"),
                                        get_double(resolved, "agg.b_pi"));
    } else {
        throw ConfigError("config key 'agg.prior': expected uniform or beta, got '" + prior +
                          "'");
    }
    cfg.budgets = get_list(resolved, "agg.budgets");
    cfg.filter.kappa_a = get_double(resolved, "filter.kappa_a");
    cfg.filter.a_bar = get_double(resolved, "filter.a_bar");
    cfg.filter.sigma_a = get_double(resolved, "filter.sigma_a");
    cfg.filter.R = get_double(resolved, "filter.r");
    cfg.filter.a0_hat = get_double(resolved, "filter.a0_hat");
    cfg.filter.P0 = get_double(resolved, "filter.p0");
    cfg.n_paths = static_cast<std::size_t>(get_u64(resolved, "n_paths"));
    cfg.grid = TimeGrid(get_double(resolved, "grid.horizon"),
                        static_cast<std::size_t>(get_u64(resolved, "grid.n_steps")));
    cfg.seed = get_u64(resolved, "seed");
    cfg.threads = static_cast<int>(get_u64(resolved, "threads"));
    try {
        validate_aggregate(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

}  // namespace beliefsim
