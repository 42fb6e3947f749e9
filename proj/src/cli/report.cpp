#include "lcsb/cli/report.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace lcsb {
namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::json number_json(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string render_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << "name,value,std_error,n,p,seed,anchor\n";
    for (const ResultRow& r : rows) {
        os << csv_field(r.name) << ',' << format_number(r.value) << ','
           << (r.std_error ? format_number(*r.std_error) : "") << ','
           << (r.n ? std::to_string(*r.n) : "") << ',' << (r.p ? format_number(*r.p) : "") << ','
           << (r.seed ? std::to_string(*r.seed) : "") << ',' << csv_field(r.anchor) << '\n';
    }
    return os.str();
}

std::string render_json(const std::vector<ResultRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ResultRow& r : rows) {
        nlohmann::json j;
        j["name"] = r.name;
        j["value"] = number_json(r.value);
        j["std_error"] = r.std_error ? number_json(*r.std_error) : nlohmann::json(nullptr);
        j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
        j["p"] = r.p ? number_json(*r.p) : nlohmann::json(nullptr);
        j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
        j["anchor"] = r.anchor;
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"rows", arr}}.dump(2) + "\n";
}

std::string render(const std::vector<ResultRow>& rows, const std::string& format) {
    return format == "json" ? render_json(rows) : render_csv(rows);
}

nlohmann::json make_manifest(const RunConfig& config, const RunOutput& output, double wall_seconds,
                             int workers_used) {
    nlohmann::json m;
    m["tool"] = "lcsb";
    m["version"] = kToolVersion;
    m["config"] = to_json(config);
    m["wall_seconds"] = wall_seconds;
    m["workers"] = workers_used;
    std::map<std::string, std::string> anchors;
    for (const ResultRow& r : output.rows) anchors.emplace(r.name, r.anchor);
    m["anchors"] = anchors;
    m["counters"] = output.counters;
    m["flags"] = output.flags;
    return m;
}

}  // namespace lcsb
