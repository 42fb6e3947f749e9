#include "lcsb/cli/scheme_file.hpp"

#include "lcsb/error.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace lcsb {
namespace {

std::int64_t parse_int(const std::string& s) {
    require(!s.empty(), "empty number");
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ValidationError("cannot parse number '" + s + "'");
    }
    require(used == s.size(), "cannot parse number '" + s + "'");
    return v;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    require(!text.empty(), "empty rational");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const std::int64_t den = parse_int(text.substr(slash + 1));
        require(den != 0, "zero denominator in '" + raw + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    auto dot = text.find('.');
    require(text.find_first_of("eE") == std::string::npos,
            "exponent notation is not accepted for exact values: '" + raw + "'");
    if (dot == std::string::npos) return Rational(parse_int(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    require(frac.size() <= 15, "too many decimal places in '" + raw + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    require(f >= 0, "malformed decimal '" + raw + "'");
    const std::int64_t mag = (w < 0 ? -w : w) * scale + f;
    return Rational(negative ? -mag : mag, scale);
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float()) return parse_rational(j.dump());
    throw ValidationError("expected a number or a fraction string, got " + j.dump());
}

ScoringScheme scheme_from_json(const nlohmann::json& j) {
    require(j.is_object(), "scheme must be a JSON object");
    require(j.contains("alphabet_size") && j.contains("score"),
            "scheme needs alphabet_size and score");
    const int m = j.at("alphabet_size").get<int>();
    const auto& rows = j.at("score");
    require(rows.is_array(), "score must be an array of rows");
    std::vector<std::vector<Rational>> s;
    for (const auto& row : rows) {
        require(row.is_array(), "score rows must be arrays");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        s.push_back(std::move(r));
    }
    const Rational gap = j.contains("gap_price") ? rational_from_json(j.at("gap_price")) : Rational(0);
    return ScoringScheme(m, std::move(s), gap);
}

ScoringScheme load_scheme_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open scheme file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("scheme file '" + path + "' is not valid JSON: " + e.what());
    }
    return scheme_from_json(j);
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

Sequence parse_sequence(const std::string& text) {
    Sequence out;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::int64_t v = parse_int(item);
            require(v >= 0 && v < 256, "letter out of range in '" + text + "'");
            out.push_back(static_cast<Letter>(v));
        }
        return out;
    }
    for (char ch : text) {
        require(std::isdigit(static_cast<unsigned char>(ch)), "letters must be digits: '" + text + "'");
        out.push_back(static_cast<Letter>(ch - '0'));
    }
    return out;
}

}  // namespace lcsb
