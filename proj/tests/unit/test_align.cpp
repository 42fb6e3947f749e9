#include <doctest.h>

#include "lcsb/align/lcs_bitparallel.hpp"
#include "lcsb/align/score_dp.hpp"
#include "lcsb/error.hpp"
#include "lcsb/model/rng.hpp"

#include <algorithm>

using namespace lcsb;

namespace {

Sequence bits(std::uint32_t code, std::size_t n) {
    Sequence s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (code >> i) & 1u;
    return s;
}

Sequence random_letters(CounterRng& rng, std::size_t n, int alphabet) {
    Sequence s(n);
    for (auto& c : s) c = static_cast<Letter>(rng.below(alphabet));
    return s;
}

ScoringScheme swap_scheme() {
    return ScoringScheme(2, {{0, 1}, {1, 0}}, Rational(-1, 2));
}

// Reference LCS via the textbook table, independent of both kernels under test.
int table_lcs(const Sequence& x, const Sequence& y) {
    std::vector<std::vector<int>> d(x.size() + 1, std::vector<int>(y.size() + 1, 0));
    for (std::size_t i = 1; i <= x.size(); ++i)
        for (std::size_t j = 1; j <= y.size(); ++j)
            d[i][j] = x[i - 1] == y[j - 1] ? d[i - 1][j - 1] + 1 : std::max(d[i - 1][j], d[i][j - 1]);
    return d[x.size()][y.size()];
}

}  // namespace

TEST_CASE("scheme validation") {
    CHECK_THROWS_AS(ScoringScheme(1, {{1}}, 0), ValidationError);
    CHECK_THROWS_AS(ScoringScheme(2, {{1, 0}, {2, 1}}, 0), ValidationError);
    CHECK_THROWS_AS(ScoringScheme(2, {{1, -1}, {-1, 1}}, 0), ValidationError);
    CHECK(ScoringScheme::lcs().is_lcs());
    CHECK_FALSE(swap_scheme().is_lcs());
}

TEST_CASE("score_dp examples") {
    const auto lcs = ScoringScheme::lcs();
    CHECK(score_dp({{1, 1, 0, 1}, {1, 0, 1, 1}}, lcs) == Rational(3));
    CHECK(score_dp({{0, 1, 1, 0, 1}, {0, 1, 1, 0, 1}}, lcs) == Rational(5));

    ScoringScheme zero_match(2, {{0, 0}, {0, 0}}, -2);
    CHECK(score_dp({{0}, {1}}, zero_match) == Rational(0));

    CHECK_THROWS_AS(score_dp({{0, 1}, {1}}, lcs), ValidationError);
    CHECK_THROWS_AS(score_dp({{0, 2}, {1, 1}}, lcs), ValidationError);
}

TEST_CASE("identity alignment dominates when the gap price is small") {
    ScoringScheme s(3, {{2, 1, 0}, {1, 3, 1}, {0, 1, 5}}, Rational(1, 3));
    CounterRng rng(11, Stream::pairs, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const Sequence x = random_letters(rng, 7, 3);
        Rational diag = 0;
        for (Letter c : x) diag += s.score(c, c);
        // Off-diagonal pairs can beat the diagonal here, so only the lower bound is exact.
        CHECK(score_dp({x, x}, s) >= diag);
    }
    const Sequence twos(6, 2);
    CHECK(score_dp({twos, twos}, s) == Rational(30));
}

TEST_CASE("brute force examples") {
    const auto lcs = ScoringScheme::lcs();
    CHECK(brute_force_score({{}, {}}, lcs) == Rational(0));
    CHECK(brute_force_score({{0, 1}, {1, 0}}, lcs) == Rational(1));
    CHECK(brute_force_score({{0}, {1}}, ScoringScheme(2, {{0, 1}, {1, 0}}, 0)) == Rational(1));
    CHECK_THROWS_AS(brute_force_score({Sequence(11), Sequence(11)}, lcs), ValidationError);
}

TEST_CASE("max_change_K") {
    CHECK(max_change_K(ScoringScheme::lcs()) == Rational(1));
    CHECK(max_change_K(ScoringScheme(2, {{4, 4}, {4, 4}}, 0)) == Rational(0));
    CHECK(max_change_K(ScoringScheme(2, {{0, 3}, {3, 1}}, 0)) == Rational(3));
}

TEST_CASE("asymmetry_check") {
    const auto lcs = ScoringScheme::lcs();
    CHECK_FALSE(asymmetry_check(lcs, {0.5, 0.5}).has_value());
    const auto w = asymmetry_check(lcs, {0.9, 0.1});
    REQUIRE(w.has_value());
    // Moving from the rare letter to the common one raises the expected score.
    CHECK(w->first == 1);
    CHECK(w->second == 0);
    CHECK_FALSE(asymmetry_check(ScoringScheme(2, {{2, 2}, {2, 2}}, 0), {0.3, 0.7}).has_value());
    CHECK_THROWS_AS(asymmetry_check(lcs, {0.5, 0.6}), ValidationError);
    CHECK_THROWS_AS(asymmetry_check(lcs, {1.0, 0.0}), ValidationError);
}

TEST_CASE("all three scorers agree on binary pairs up to n = 8") {
    const auto lcs = ScoringScheme::lcs();
    for (std::size_t n = 0; n <= 8; ++n) {
        const std::uint32_t count = 1u << n;
        for (std::uint32_t a = 0; a < count; ++a)
            for (std::uint32_t b = 0; b < count; ++b) {
                const SequencePair pair{bits(a, n), bits(b, n)};
                const Rational dp = score_dp(pair, lcs);
                const int fast = lcs_bitparallel(pair);
                REQUIRE(dp == Rational(fast));
                if (n <= 6) REQUIRE(brute_force_score(pair, lcs) == dp);
            }
    }
    CounterRng rng(77, Stream::pairs, 0);
    for (std::size_t n : {6u, 7u}) {
        for (int rep = 0; rep < 30; ++rep) {
            const SequencePair pair{random_letters(rng, n, 2), random_letters(rng, n, 2)};
            REQUIRE(brute_force_score(pair, lcs) == Rational(lcs_bitparallel(pair)));
        }
    }
}

TEST_CASE("bit-parallel kernel on random pairs up to n = 64 and across word boundaries") {
    CounterRng rng(2024, Stream::pairs, 1);
    const auto lcs = ScoringScheme::lcs();
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 1 + rng.below(64);
        const SequencePair pair{random_letters(rng, n, 2), random_letters(rng, n, 2)};
        REQUIRE(score_dp(pair, lcs) == Rational(lcs_bitparallel(pair)));
    }
    for (std::size_t n : {63u, 64u, 65u, 127u, 128u, 129u, 300u}) {
        for (int rep = 0; rep < 20; ++rep) {
            const SequencePair pair{random_letters(rng, n, 2), random_letters(rng, n, 2)};
            REQUIRE(table_lcs(pair.x, pair.y) == lcs_bitparallel(pair));
        }
    }
}

TEST_CASE("bit-parallel trivial cases") {
    for (std::size_t n : {1u, 64u, 100u, 4096u}) {
        Sequence x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = (i * 7 + i / 3) % 2;
        CHECK(lcs_bitparallel({x, x}) == static_cast<int>(n));
        CHECK(lcs_bitparallel({Sequence(n, 0), Sequence(n, 1)}) == 0);
    }
    CHECK(lcs_bitparallel({{}, {}}) == 0);
    CHECK_THROWS_AS(lcs_bitparallel({{0, 2}, {1, 1}}), ValidationError);
}

TEST_CASE("single-edit kernel matches recomputation") {
    CounterRng rng(5, Stream::pairs, 2);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng.below(150);
        const SequencePair pair{random_letters(rng, n, 2), random_letters(rng, n, 2)};
        const SingleEditLcs kernel(pair);
        REQUIRE(kernel.base() == lcs_bitparallel(pair));
        for (std::size_t pos = 0; pos < n; ++pos) {
            for (Letter c : {Letter{0}, Letter{1}}) {
                SequencePair ex = pair;
                ex.x[pos] = c;
                REQUIRE(kernel.with_letter(true, pos, c) == lcs_bitparallel(ex));
                SequencePair ey = pair;
                ey.y[pos] = c;
                REQUIRE(kernel.with_letter(false, pos, c) == lcs_bitparallel(ey));
            }
        }
    }
}

TEST_CASE("general scheme agrees with enumeration on random pairs") {
    CounterRng rng(77, Stream::pairs, 3);
    ScoringScheme s(3, {{3, 1, 0}, {1, 2, Rational(1, 2)}, {0, Rational(1, 2), 4}}, Rational(-3, 4));
    ScoringScheme positive_gap(2, {{1, 0}, {0, 2}}, Rational(5, 4));
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = rng.below(8);
        const SequencePair tri{random_letters(rng, n, 3), random_letters(rng, n, 3)};
        REQUIRE(score_dp(tri, s) == brute_force_score(tri, s));
        const SequencePair bin{random_letters(rng, n, 2), random_letters(rng, n, 2)};
        REQUIRE(score_dp(bin, positive_gap) == brute_force_score(bin, positive_gap));
    }
}

TEST_CASE("single-letter change moves the score by at most K") {
    CounterRng rng(99, Stream::pairs, 4);
    const std::vector<ScoringScheme> schemes = {
        ScoringScheme::lcs(), swap_scheme(), ScoringScheme(2, {{0, 3}, {3, 1}}, 0),
        ScoringScheme(3, {{3, 1, 0}, {1, 2, 2}, {0, 2, 4}}, Rational(1, 2))};
    for (const auto& s : schemes) {
        const Rational K = max_change_K(s);
        for (int rep = 0; rep < 100; ++rep) {
            const std::size_t n = 1 + rng.below(9);
            const SequencePair pair{random_letters(rng, n, s.alphabet_size()),
                                    random_letters(rng, n, s.alphabet_size())};
            const Rational base = score_dp(pair, s);
            for (std::size_t pos = 0; pos < n; ++pos)
                for (int c = 0; c < s.alphabet_size(); ++c) {
                    SequencePair e = pair;
                    e.x[pos] = static_cast<Letter>(c);
                    Rational d = score_dp(e, s) - base;
                    if (d < 0) d = -d;
                    REQUIRE(d <= K);
                }
        }
    }
}

TEST_CASE("empty alignment is always feasible") {
    CounterRng rng(3, Stream::pairs, 5);
    ScoringScheme s(2, {{0, 1}, {1, 0}}, Rational(7, 3));
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = rng.below(20);
        const SequencePair pair{random_letters(rng, n, 2), random_letters(rng, n, 2)};
        CHECK(score_dp(pair, s) >= s.gap_price() * static_cast<std::int64_t>(n));
        CHECK(score_dp(pair, swap_scheme()) >= swap_scheme().gap_price() * static_cast<std::int64_t>(n));
    }
}

TEST_CASE("LCS is superadditive under concatenation") {
    CounterRng rng(8, Stream::pairs, 6);
    for (int rep = 0; rep < 500; ++rep) {
        const std::size_t n1 = 1 + rng.below(40), n2 = 1 + rng.below(40);
        const SequencePair a{random_letters(rng, n1, 2), random_letters(rng, n1, 2)};
        const SequencePair b{random_letters(rng, n2, 2), random_letters(rng, n2, 2)};
        SequencePair joined = a;
        joined.x.insert(joined.x.end(), b.x.begin(), b.x.end());
        joined.y.insert(joined.y.end(), b.y.begin(), b.y.end());
        CHECK(lcs_bitparallel(joined) >= lcs_bitparallel(a) + lcs_bitparallel(b));
    }
}
