#include "beliefsim/result_table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "beliefsim/errors.hpp"

namespace beliefsim {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string to_csv(const ResultTable& table) {
    if (table.columns.empty()) throw std::invalid_argument("to_csv: table has no columns");
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("to_csv: row width does not match header");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_double(row[c]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const ResultTable& table, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path.string());
    f << to_csv(table);
    if (!f) throw ConfigError("failed writing output file: " + path.string());
}

namespace {

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

ResultTable read_csv(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open csv file: " + path.string());
    ResultTable table;
    std::string line;
    if (!std::getline(f, line)) throw ConfigError("empty csv file: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    table.columns = split_commas(line);
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_commas(line);
        if (cells.size() != table.columns.size())
            throw ConfigError("csv row width mismatch in " + path.string());
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& cell : cells) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw ConfigError("csv cell is not numeric: '" + cell + "'");
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::uint64_t fnv1a_hash(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace beliefsim
