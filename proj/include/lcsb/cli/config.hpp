#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcsb {

inline const std::vector<std::string> kCommands = {
    "score", "simulate-moments", "ell-profile", "transform", "bounds", "rate", "verify-all"};

struct RunConfig {
    std::string command;
    std::int64_t n = 100;
    double p = 0.5;
    std::optional<std::size_t> reps;          // per-command default when absent
    std::optional<std::uint64_t> seed;        // drawn and recorded when absent
    std::vector<double> r_list{2.0};
    std::vector<double> s_list;
    std::vector<double> t_list;
    std::vector<double> eps_grid;
    double beta = 0.6;
    double eps_target = 0.01;
    std::optional<double> eps0;
    std::optional<std::int64_t> u_lo;
    std::optional<std::int64_t> u_hi;
    int workers = 0;
    std::string output;                       // empty: results go to stdout
    std::string format = "csv";
    std::string x;
    std::string y;
    std::string scheme_path;
};

// Throws ValidationError naming the first offending field.
void validate(const RunConfig& config);

// Replicate count for the command when none was given.
std::size_t default_reps(const std::string& command);

nlohmann::json to_json(const RunConfig& config);

// Overlays keys present in `j` onto `config`. Accepts a bare config object or
// a manifest, whose "config" member is used.
void apply_json(const nlohmann::json& j, RunConfig& config);

RunConfig load_config_file(const std::string& path);

}  // namespace lcsb
