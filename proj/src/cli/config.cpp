#include "lcsb/cli/config.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace lcsb {
namespace {

template <class T>
void read_key(const nlohmann::json& j, const char* key, T& out) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config key '") + key + "': " + e.what());
    }
}

template <class T>
void read_key(const nlohmann::json& j, const char* key, std::optional<T>& out) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    T v{};
    read_key(j, key, v);
    out = v;
}

}  // namespace

std::size_t default_reps(const std::string& command) {
    if (command == "ell-profile") return 1000;
    return 10000;
}

void validate(const RunConfig& c) {
    require(std::find(kCommands.begin(), kCommands.end(), c.command) != kCommands.end(),
            "unknown command '" + c.command + "'");
    require(c.n >= 1, "n must be at least 1");
    require(std::isfinite(c.p) && c.p > 0.0 && c.p < 1.0, "p must lie strictly between 0 and 1");
    if (c.reps) require(*c.reps >= 2, "reps must be at least 2");
    for (double r : c.r_list) require(std::isfinite(r) && r >= 1.0, "every r must be at least 1");
    for (double s : c.s_list) require(std::isfinite(s) && s > 0.0, "every s must be positive");
    for (double t : c.t_list) require(std::isfinite(t) && t >= 0.0, "every t must be non-negative");
    for (double e : c.eps_grid) require(std::isfinite(e), "eps grid values must be finite");
    require(c.beta > 0.5 && c.beta < 2.0 / 3.0, "beta must lie in (1/2, 2/3)");
    require(c.eps_target > 0.0 && c.eps_target <= 1.0, "eps-target must lie in (0, 1]");
    if (c.eps0) require(std::isfinite(*c.eps0) && *c.eps0 > 0.0, "eps0 must be positive");
    require(c.workers >= 0, "workers must be non-negative");
    require(c.format == "csv" || c.format == "json", "format must be csv or json");
    if (c.command == "score") {
        require(!c.x.empty() && !c.y.empty(), "score needs --x and --y");
    }
    if (c.command == "ell-profile") {
        const std::int64_t lo = c.u_lo.value_or(0);
        const std::int64_t hi = c.u_hi.value_or(2 * c.n);
        require(lo >= 0 && lo < hi && hi <= 2 * c.n, "need 0 <= u-lo < u-hi <= 2n");
    }
    if (c.command == "rate") {
        for (double s : c.s_list) require(s <= 1.0, "tail thresholds s must lie in (0, 1]");
        for (double t : c.t_list) {
            require(t * static_cast<double>(c.n) <= 700.0, "t * n must not exceed 700");
        }
    }
}

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j;
    j["command"] = c.command;
    j["n"] = c.n;
    j["p"] = c.p;
    j["reps"] = c.reps ? nlohmann::json(*c.reps) : nlohmann::json(nullptr);
    j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
    j["r-list"] = c.r_list;
    j["s-list"] = c.s_list;
    j["t-list"] = c.t_list;
    j["eps-grid"] = c.eps_grid;
    j["beta"] = c.beta;
    j["eps-target"] = c.eps_target;
    j["eps0"] = c.eps0 ? nlohmann::json(*c.eps0) : nlohmann::json(nullptr);
    j["u-lo"] = c.u_lo ? nlohmann::json(*c.u_lo) : nlohmann::json(nullptr);
    j["u-hi"] = c.u_hi ? nlohmann::json(*c.u_hi) : nlohmann::json(nullptr);
    j["workers"] = c.workers;
    j["output"] = c.output;
    j["format"] = c.format;
    j["x"] = c.x;
    j["y"] = c.y;
    j["scheme"] = c.scheme_path;
    return j;
}

void apply_json(const nlohmann::json& raw, RunConfig& c) {
    require(raw.is_object(), "config must be a JSON object");
    const nlohmann::json& j = raw.contains("config") && raw.at("config").is_object() ? raw.at("config") : raw;
    read_key(j, "command", c.command);
    read_key(j, "n", c.n);
    read_key(j, "p", c.p);
    read_key(j, "reps", c.reps);
    read_key(j, "seed", c.seed);
    read_key(j, "r-list", c.r_list);
    read_key(j, "s-list", c.s_list);
    read_key(j, "t-list", c.t_list);
    read_key(j, "eps-grid", c.eps_grid);
    read_key(j, "beta", c.beta);
    read_key(j, "eps-target", c.eps_target);
    read_key(j, "eps0", c.eps0);
    read_key(j, "u-lo", c.u_lo);
    read_key(j, "u-hi", c.u_hi);
    read_key(j, "workers", c.workers);
    read_key(j, "output", c.output);
    read_key(j, "format", c.format);
    read_key(j, "x", c.x);
    read_key(j, "y", c.y);
    read_key(j, "scheme", c.scheme_path);
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    RunConfig c;
    apply_json(j, c);
    return c;
}

}  // namespace lcsb
