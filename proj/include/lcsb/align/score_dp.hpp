#pragma once

#include "lcsb/align/scoring.hpp"

namespace lcsb {

// Optimal alignment score via the O(n^2) three-way recurrence on S - gap_price.
Rational score_dp(const SequencePair& pair, const ScoringScheme& scheme);

// Explicit enumeration of every monotone matching. Limited to n <= 10.
Rational brute_force_score(const SequencePair& pair, const ScoringScheme& scheme);

inline constexpr std::size_t kBruteForceMaxLength = 10;

}  // namespace lcsb
