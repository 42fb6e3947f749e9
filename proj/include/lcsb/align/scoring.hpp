#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lcsb {

using Rational = boost::rational<std::int64_t>;
using Letter = std::uint8_t;
using Sequence = std::vector<Letter>;

struct SequencePair {
    Sequence x;
    Sequence y;

    std::size_t n() const { return x.size(); }
    bool operator==(const SequencePair&) const = default;
};

/**
 * Symmetric, non-negative pairwise score matrix plus a constant gap price
 * credited for every unmatched index pair.
 */
class ScoringScheme {
public:
    ScoringScheme(int alphabet_size, std::vector<std::vector<Rational>> score, Rational gap_price);

    // match = 1, mismatch = 0, gap price 0
    static ScoringScheme lcs(int alphabet_size = 2);

    int alphabet_size() const { return alphabet_size_; }
    const Rational& score(Letter a, Letter b) const { return score_[a][b]; }
    const Rational& gap_price() const { return gap_price_; }
    const std::vector<std::vector<Rational>>& matrix() const { return score_; }
    bool is_lcs() const { return is_lcs_; }

private:
    int alphabet_size_;
    std::vector<std::vector<Rational>> score_;
    Rational gap_price_;
    bool is_lcs_;
};

// Throws ValidationError on length mismatch or a letter outside the alphabet.
void validate_pair(const SequencePair& pair, const ScoringScheme& scheme);

// Largest change of the score from altering a single letter.
Rational max_change_K(const ScoringScheme& scheme);

// Ordered pair (a, b) with sum_c P(c) * (S(b,c) - S(a,c)) > 0, if one exists.
std::optional<std::pair<Letter, Letter>> asymmetry_check(const ScoringScheme& scheme,
                                                         const std::vector<double>& letter_dist);

double to_double(const Rational& r);

}  // namespace lcsb
