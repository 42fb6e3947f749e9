#pragma once

#include "lcsb/align/scoring.hpp"

#include <json.hpp>

#include <string>

namespace lcsb {

// Integers, decimal literals ("-0.5") and fractions ("7/2") are read exactly.
Rational parse_rational(const std::string& text);
Rational rational_from_json(const nlohmann::json& j);

// {"alphabet_size": 2, "score": [[1, 0], [0, 1]], "gap_price": "-1/2"}
ScoringScheme scheme_from_json(const nlohmann::json& j);
ScoringScheme load_scheme_file(const std::string& path);

std::string to_string(const Rational& r);

// "1101" (one digit per letter) or "1,10,3" for larger alphabets.
Sequence parse_sequence(const std::string& text);

}  // namespace lcsb
