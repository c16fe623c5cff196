#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace beliefsim {

// Numeric result table serialized as CSV: one header line, then data rows.
// Values round-trip through %.17g so reruns are byte-identical.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string format_double(double value);

std::string to_csv(const ResultTable& table);
void write_csv(const ResultTable& table, const std::filesystem::path& path);
ResultTable read_csv(const std::filesystem::path& path);

std::uint64_t fnv1a_hash(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace beliefsim
