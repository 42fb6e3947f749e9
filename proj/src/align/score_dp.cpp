#include "lcsb/align/score_dp.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <numeric>

namespace lcsb {
namespace {

std::int64_t lcs_table(const Sequence& x, const Sequence& y) {
    const std::size_t n = x.size();
    std::vector<std::int64_t> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            cur[j] = std::max({prev[j], cur[j - 1], prev[j - 1] + (x[i - 1] == y[j - 1] ? 1 : 0)});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

// General schemes: scale every weight to a common denominator and run the
// recurrence in integers, which is exact and avoids rational normalisation
// inside the inner loop.
Rational general_table(const SequencePair& pair, const ScoringScheme& scheme) {
    const int m = scheme.alphabet_size();
    std::int64_t denom = scheme.gap_price().denominator();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) denom = std::lcm(denom, scheme.score(a, b).denominator());

    std::vector<std::int64_t> w(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Rational scaled = (scheme.score(a, b) - scheme.gap_price()) * denom;
            w[a * m + b] = scaled.numerator();
        }

    const std::size_t n = pair.n();
    std::vector<std::int64_t> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::int64_t* row = &w[pair.x[i - 1] * m];
        for (std::size_t j = 1; j <= n; ++j) {
            cur[j] = std::max({prev[j], cur[j - 1], prev[j - 1] + row[pair.y[j - 1]]});
        }
        std::swap(prev, cur);
    }
    return scheme.gap_price() * static_cast<std::int64_t>(n) + Rational(prev[n], denom);
}

struct Enumerator {
    const SequencePair& pair;
    const ScoringScheme& scheme;
    std::size_t n;
    Rational best;
    bool seen = false;

    void walk(std::size_t i, std::size_t j, const Rational& acc, std::size_t matched) {
        if (i == n) {
            Rational total = acc + scheme.gap_price() * static_cast<std::int64_t>(n - matched);
            if (!seen || total > best) {
                best = total;
                seen = true;
            }
            return;
        }
        walk(i + 1, j, acc, matched);
        for (std::size_t k = j; k < n; ++k) {
            walk(i + 1, k + 1, acc + scheme.score(pair.x[i], pair.y[k]), matched + 1);
        }
    }
};

}  // namespace

Rational score_dp(const SequencePair& pair, const ScoringScheme& scheme) {
    validate_pair(pair, scheme);
    if (scheme.is_lcs()) return Rational(lcs_table(pair.x, pair.y));
    return general_table(pair, scheme);
}

Rational brute_force_score(const SequencePair& pair, const ScoringScheme& scheme) {
    validate_pair(pair, scheme);
    require(pair.n() <= kBruteForceMaxLength, "brute_force_score is limited to n <= 10");
    Enumerator e{pair, scheme, pair.n(), Rational(0)};
    e.walk(0, 0, Rational(0), 0);
    return e.best;
}

}  // namespace lcsb
