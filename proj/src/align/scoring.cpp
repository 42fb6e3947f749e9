#include "lcsb/align/scoring.hpp"

#include "lcsb/error.hpp"

#include <cmath>
#include <string>

namespace lcsb {

ScoringScheme::ScoringScheme(int alphabet_size, std::vector<std::vector<Rational>> score,
                             Rational gap_price)
    : alphabet_size_(alphabet_size), score_(std::move(score)), gap_price_(gap_price) {
    require(alphabet_size_ >= 2, "alphabet_size must be at least 2");
    require(alphabet_size_ <= 256, "alphabet_size must be at most 256");
    require(score_.size() == static_cast<std::size_t>(alphabet_size_),
            "score matrix must have alphabet_size rows");
    for (const auto& row : score_) {
        require(row.size() == static_cast<std::size_t>(alphabet_size_),
                "score matrix must be square");
    }
    bool lcs = gap_price_ == Rational(0);
    for (int a = 0; a < alphabet_size_; ++a) {
        for (int b = 0; b < alphabet_size_; ++b) {
            require(score_[a][b] >= 0, "scores must be non-negative");
            require(score_[a][b] == score_[b][a], "score matrix must be symmetric");
            lcs = lcs && score_[a][b] == Rational(a == b ? 1 : 0);
        }
    }
    is_lcs_ = lcs;
}

ScoringScheme ScoringScheme::lcs(int alphabet_size) {
    std::vector<std::vector<Rational>> s(alphabet_size, std::vector<Rational>(alphabet_size));
    for (int a = 0; a < alphabet_size; ++a) s[a][a] = 1;
    return ScoringScheme(alphabet_size, std::move(s), 0);
}

void validate_pair(const SequencePair& pair, const ScoringScheme& scheme) {
    require(pair.x.size() == pair.y.size(), "sequences must have equal length");
    for (const auto* seq : {&pair.x, &pair.y}) {
        for (Letter c : *seq) {
            require(c < scheme.alphabet_size(),
                    "letter " + std::to_string(c) + " outside alphabet");
        }
    }
}

Rational max_change_K(const ScoringScheme& scheme) {
    Rational best = 0;
    const int m = scheme.alphabet_size();
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            for (int w = 0; w < m; ++w) {
                Rational d = scheme.score(u, v) - scheme.score(u, w);
                if (d < 0) d = -d;
                if (d > best) best = d;
            }
    return best;
}

std::optional<std::pair<Letter, Letter>> asymmetry_check(const ScoringScheme& scheme,
                                                         const std::vector<double>& letter_dist) {
    const int m = scheme.alphabet_size();
    require(letter_dist.size() == static_cast<std::size_t>(m),
            "letter distribution must have alphabet_size entries");
    double total = 0.0;
    for (double w : letter_dist) {
        require(w > 0.0 && std::isfinite(w), "letter probabilities must be positive");
        total += w;
    }
    require(std::abs(total - 1.0) <= 1e-9, "letter probabilities must sum to 1");

    // Sums that are zero in exact arithmetic can come out as a few ulps.
    constexpr double kTolerance = 1e-12;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            long double sum = 0.0L;
            for (int c = 0; c < m; ++c) {
                sum += static_cast<long double>(letter_dist[c]) *
                       to_double(scheme.score(b, c) - scheme.score(a, c));
            }
            if (sum > kTolerance) return std::make_pair(Letter(a), Letter(b));
        }
    return std::nullopt;
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace lcsb
