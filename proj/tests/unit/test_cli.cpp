#include <doctest.h>

#include "lcsb/cli/commands.hpp"
#include "lcsb/cli/config.hpp"
#include "lcsb/cli/report.hpp"
#include "lcsb/cli/scheme_file.hpp"
#include "lcsb/error.hpp"
#include "lcsb/model/rng.hpp"
#include "support/exact.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

using namespace lcsb;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// name -> value from a CSV table
std::map<std::string, double> values_of(const std::string& csv) {
    std::map<std::string, double> v;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const auto next = line.find(',', comma + 1);
        v[line.substr(0, comma)] = std::stod(line.substr(comma + 1, next - comma - 1));
    }
    return v;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "lcsb_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
    CounterRng rng(3, Stream::bootstrap, 9);
    for (int i = 0; i < 2000; ++i) {
        const double v = std::ldexp(rng.uniform01() - 0.5, static_cast<int>(rng.below(200)) - 100);
        CHECK(std::stod(format_number(v)) == v);
    }
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(-INFINITY) == "-inf");
    CHECK(format_number(NAN) == "nan");
}

TEST_CASE("rational and sequence parsing") {
    CHECK(parse_rational("7/2") == Rational(7, 2));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(to_string(Rational(7, 2)) == "7/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK_THROWS_AS(parse_rational("a/b"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK(parse_sequence("1101") == Sequence{1, 1, 0, 1});
    CHECK(parse_sequence("1,10,3") == Sequence{1, 10, 3});
    CHECK_THROWS_AS(parse_sequence("1x"), ValidationError);

    const auto s = scheme_from_json(nlohmann::json::parse(R"({"alphabet_size": 2, "score": [[1, 0], [0, "3/2"]], "gap_price": "-1/2"})"));
    CHECK(s.score(1, 1) == Rational(3, 2));
    CHECK(s.gap_price() == Rational(-1, 2));
    CHECK_THROWS_AS(scheme_from_json(nlohmann::json::parse(R"({"alphabet_size": 2, "score": [[1, 2], [0, 1]], "gap_price": 0})")),
                    ValidationError);
}

TEST_CASE("tables") {
    std::vector<ResultRow> rows{{"a,b", 1.25, std::nullopt, 10, 0.5, 7, "x"}, {"c", 2, 0.1, std::nullopt, std::nullopt, std::nullopt, "y"}};
    const std::string csv = render_csv(rows);
    CHECK(csv.rfind("name,value,std_error,n,p,seed,anchor\n", 0) == 0);
    CHECK(csv.find("\"a,b\",1.25,,10,0.5,7,x\n") != std::string::npos);
    CHECK(csv.find("c,2,0.1,,,,y\n") != std::string::npos);
    const auto j = nlohmann::json::parse(render_json(rows));
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["std_error"].is_null());
    CHECK(j["rows"][1]["std_error"] == 0.1);
}

TEST_CASE("score command") {
    auto r = cli({"score", "--x", "1101", "--y", "1011"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "3\n");

    const fs::path scheme = scratch("scheme.json");
    std::ofstream(scheme) << R"({"alphabet_size": 2, "score": [[1, 0], [0, 1]], "gap_price": "1/4"})";
    r = cli({"score", "--x", "01", "--y", "10", "--scheme", scheme.string()});
    CHECK(r.code == kExitOk);
    // One match leaves one unmatched position in each sequence, priced once: 1 + 1/4.
    CHECK(r.out == "5/4\n");

    CHECK(cli({"score", "--x", "101"}).code == kExitValidation);
    CHECK(cli({"score", "--x", "101", "--y", "10"}).code == kExitValidation);
    CHECK(cli({"score", "--x", "12", "--y", "10", "--scheme", scheme.string()}).code == kExitValidation);
}

TEST_CASE("bounds command") {
    const auto r = cli({"bounds", "--r", "2,4", "--p", "0.5", "--eps0", "0.2", "--s", "1", "--seed", "1"});
    CHECK(r.code == kExitOk);
    const auto v = values_of(r.out);
    CHECK(v.at("C[r=2;K=1]") == doctest::Approx(1 + std::log(2.0)).epsilon(1e-14));
    CHECK(v.at("D[r=4;K=1]") == doctest::Approx(4.0));
    CHECK(v.at("b[p=0.5]") == doctest::Approx(std::sqrt(M_PI) * std::exp(2.0)));
    CHECK(v.count("lambda[eps0=0.2;p=0.5]") == 1);
    CHECK(v.count("mgf_upper_loose[t=1]") == 1);

    const auto j = cli({"bounds", "--p", "0.3", "--format", "json", "--seed", "1"});
    CHECK(j.code == kExitOk);
    CHECK(nlohmann::json::parse(j.out)["rows"].size() > 3);
}

TEST_CASE("simulate-moments matches the exact law at n = 2") {
    const auto r = cli({"simulate-moments", "--n", "2", "--p", "0.5", "--reps", "40000", "--seed", "3", "--r", "2"});
    CHECK(r.code == kExitOk);
    const auto v = values_of(r.out);
    const auto law = exact::score_law(2, 0.5);
    const double mu = exact::mean_of(law);
    const double var = exact::expect(law, [&](double x) { return (x - mu) * (x - mu); });
    CHECK(v.at("mean") == doctest::Approx(mu).epsilon(0.02));
    CHECK(v.at("central_abs_moment[r=2]") == doctest::Approx(var).epsilon(0.03));
}

TEST_CASE("validation errors exit with code 2") {
    CHECK(cli({"simulate-moments", "--p", "1.5", "--seed", "1"}).code == kExitValidation);
    CHECK(cli({"simulate-moments", "--p", "0", "--seed", "1"}).code == kExitValidation);
    CHECK(cli({"simulate-moments", "--n", "0", "--seed", "1"}).code == kExitValidation);
    CHECK(cli({"simulate-moments", "--reps", "1", "--seed", "1"}).code == kExitValidation);
    CHECK(cli({"simulate-moments", "--bogus", "1"}).code == kExitValidation);
    CHECK(cli({"nonsense"}).code == kExitValidation);
    CHECK(cli({"bounds", "--beta", "0.7"}).code == kExitValidation);
    CHECK(cli({"rate", "--s", "1.2"}).code == kExitValidation);
    CHECK(cli({"rate", "--n", "100", "--t", "8"}).code == kExitValidation);
    CHECK(cli({"ell-profile", "--n", "5", "--u-lo", "4", "--u-hi", "3"}).code == kExitValidation);
    CHECK(cli({"transform", "--eps-target", "0"}).code == kExitValidation);
    CHECK(cli({"bounds", "--format", "xml"}).code == kExitValidation);
    const auto r = cli({"simulate-moments", "--config", scratch("missing.json").string()});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("non-fatal findings exit with code 3") {
    // At n = 40 the full-match tail is never hit in 200 replicates.
    const auto r = cli({"rate", "--n", "40", "--reps", "200", "--seed", "4", "--s", "1", "--t", "0,0.1"});
    CHECK(r.code == kExitFlagged);
    CHECK(r.err.find("zero hits") != std::string::npos);
    const auto g = cli({"simulate-moments", "--n", "10000", "--reps", "2", "--seed", "1", "--s", "8"});
    CHECK(g.code == kExitFlagged);
}

TEST_CASE("config files and flag overrides") {
    const fs::path cfg = scratch("cfg.json");
    std::ofstream(cfg) << R"({"n": 5, "p": 0.3, "reps": 50, "seed": 9, "r-list": [1, 2]})";
    const fs::path out = scratch("override.csv");
    const auto r = cli({"simulate-moments", "--config", cfg.string(), "--n", "7", "--output", out.string()});
    REQUIRE(r.code == kExitOk);
    const auto m = nlohmann::json::parse(slurp(out.string() + ".manifest.json"));
    CHECK(m["config"]["n"] == 7);
    CHECK(m["config"]["p"] == 0.3);
    CHECK(m["config"]["reps"] == 50);
    CHECK(m["config"]["seed"] == 9);
    CHECK(m["tool"] == "lcsb");
    CHECK(m["anchors"].contains("mean"));
    CHECK(values_of(slurp(out)).count("central_abs_moment[r=1]") == 1);

    std::ofstream(cfg) << "{not json";
    CHECK(cli({"simulate-moments", "--config", cfg.string()}).code == kExitValidation);
}

TEST_CASE("a manifest replays to identical bytes") {
    const fs::path first = scratch("first.csv");
    const fs::path second = scratch("second.csv");
    REQUIRE(cli({"transform", "--n", "40", "--p", "0.2", "--reps", "100", "--output", first.string(), "--eps-target", "0.5"}).code == kExitOk);
    const std::string manifest = first.string() + ".manifest.json";
    CHECK(nlohmann::json::parse(slurp(manifest))["config"]["seed"].is_number_unsigned());
    REQUIRE(cli({"transform", "--config", manifest, "--output", second.string()}).code == kExitOk);
    CHECK(slurp(first) == slurp(second));
    CHECK_FALSE(slurp(first).empty());
}

TEST_CASE("output does not depend on the worker count") {
    std::string ref;
    for (const char* w : {"1", "2", "5"}) {
        const auto r = cli({"rate", "--n", "30", "--reps", "300", "--seed", "8", "--s", "0.8", "--t", "0,0.5,1", "--workers", w});
        CHECK(r.code != kExitValidation);
        if (ref.empty()) ref = r.out;
        CHECK(r.out == ref);
    }
}

TEST_CASE("other commands run end to end") {
    auto r = cli({"ell-profile", "--n", "8", "--u-lo", "6", "--u-hi", "10", "--reps", "50", "--seed", "2"});
    CHECK(r.code == kExitOk);
    CHECK(values_of(r.out).count("slope[u=9]") == 1);
    r = cli({"transform", "--n", "30", "--p", "0.3", "--reps", "50", "--seed", "2", "--eps-target", "0.5"});
    CHECK(r.code == kExitOk);
    CHECK(values_of(r.out).count("eps0[target=0.5]") == 1);
    r = cli({"verify-all", "--n", "30", "--p", "0.3", "--reps", "40", "--seed", "2", "--eps-target", "0.5"});
    CHECK((r.code == kExitOk || r.code == kExitFlagged));
    for (const char* id : {"flip-increments", "eps0", "hoeffding", "variance-sandwich", "center-gap", "mgf-sandwich", "rate-tail"}) {
        CHECK(r.out.find(std::string(" ") + id + ":") != std::string::npos);
    }
    r = cli({"--help"});
    CHECK(r.code == kExitOk);
}

TEST_CASE("installed binary reports exit codes") {
    const std::string bin = LCSB_CLI_PATH;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status("score --x 1101 --y 1011") == 0);
    CHECK(status("simulate-moments --p 1.5 --seed 1") == 2);
    CHECK(status("rate --n 40 --reps 200 --seed 4 --s 1 --t 0,0.1") == 3);
}
