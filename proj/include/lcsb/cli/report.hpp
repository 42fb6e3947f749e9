#pragma once

#include "lcsb/cli/config.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcsb {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kPlumbingAnchor = "plumbing";

// One output record. Columns: name, value, std_error, n, p, seed, anchor.
struct ResultRow {
    std::string name;
    double value = 0.0;
    std::optional<double> std_error;
    std::optional<std::int64_t> n;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::string anchor = kPlumbingAnchor;
};

struct RunOutput {
    std::vector<ResultRow> rows;
    std::vector<std::string> flags;   // non-fatal findings; exit code 3 when present
    nlohmann::json counters = nlohmann::json::object();  // rejection counts and similar
    std::string console;              // human-readable text for stdout
};

// Shortest text that parses back to the same double; "inf", "-inf", "nan" otherwise.
std::string format_number(double v);

std::string render_csv(const std::vector<ResultRow>& rows);
std::string render_json(const std::vector<ResultRow>& rows);
std::string render(const std::vector<ResultRow>& rows, const std::string& format);

nlohmann::json make_manifest(const RunConfig& config, const RunOutput& output, double wall_seconds,
                             int workers_used);

}  // namespace lcsb
