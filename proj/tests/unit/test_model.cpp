#include <doctest.h>

#include "lcsb/error.hpp"
#include "lcsb/model/binary_model.hpp"
#include "lcsb/model/binomial.hpp"
#include "lcsb/model/rng.hpp"
#include "lcsb/model/zero_count_set.hpp"
#include "support/exact.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <map>
#include <set>

using namespace lcsb;

namespace {

// Chi-square goodness of fit; bins with expected count below 5 are pooled.
bool fits(const std::vector<double>& observed, const std::vector<double>& expected, double alpha) {
    std::vector<double> o, e;
    double po = 0.0, pe = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        po += observed[i];
        pe += expected[i];
        if (pe >= 5.0) {
            o.push_back(po);
            e.push_back(pe);
            po = pe = 0.0;
        }
    }
    if (pe > 0.0) {
        o.back() += po;
        e.back() += pe;
    }
    double stat = 0.0;
    for (std::size_t i = 0; i < o.size(); ++i) stat += (o[i] - e[i]) * (o[i] - e[i]) / e[i];
    boost::math::chi_squared dist(static_cast<double>(o.size() - 1));
    return stat <= boost::math::quantile(boost::math::complement(dist, alpha));
}

using Big = boost::multiprecision::cpp_bin_float_50;

Big big_log_pmf(std::int64_t n2, double q, std::int64_t k) {
    const Big n(n2), kk(k), qq(q);
    return boost::math::lgamma(n + 1) - boost::math::lgamma(kk + 1) - boost::math::lgamma(n - kk + 1) +
           kk * log(qq) + (n - kk) * log(1 - qq);
}

}  // namespace

TEST_CASE("philox known-answer vectors") {
    using A4 = std::array<std::uint32_t, 4>;
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter streams are deterministic and distinct") {
    CounterRng a(42, Stream::pairs, 7), b(42, Stream::pairs, 7), c(42, Stream::pairs, 8),
        d(42, Stream::flip, 7), e(43, Stream::pairs, 7);
    std::vector<std::uint32_t> va, vb, vc, vd, ve;
    for (int i = 0; i < 16; ++i) {
        va.push_back(a.next_u32());
        vb.push_back(b.next_u32());
        vc.push_back(c.next_u32());
        vd.push_back(d.next_u32());
        ve.push_back(e.next_u32());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);
    CHECK(va != ve);
}

TEST_CASE("bounded integers and unit uniforms") {
    CounterRng rng(1, Stream::bootstrap, 0);
    std::vector<double> counts(7, 0.0);
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) counts[rng.below(7)] += 1.0;
    CHECK(fits(counts, std::vector<double>(7, draws / 7.0), 1e-4));
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform01();
        CHECK((u >= 0.0 && u < 1.0));
        CHECK(rng.below(1) == 0);
    }
}

TEST_CASE("sample_pair") {
    const BinaryModel m(0.5);
    const SequencePair a = sample_pair(50, m, RngPlan{9, 3});
    CHECK(a == sample_pair(50, m, RngPlan{9, 3}));
    CHECK_FALSE(a == sample_pair(50, m, RngPlan{9, 4}));
    CHECK(a.x.size() == 50);
    CHECK(a.y.size() == 50);

    const BinaryModel nearly_one(0.999999);
    int all_ones = 0;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        all_ones += count_zeros(sample_pair(10, nearly_one, RngPlan{5, i})) == 0;
    }
    CHECK(all_ones >= 1990);

    CHECK_THROWS_AS(BinaryModel(0.0), ValidationError);
    CHECK_THROWS_AS(BinaryModel(1.0), ValidationError);
}

TEST_CASE("zero count of sampled pairs: mean and binomial fit") {
    const BinaryModel half(0.5);
    const int reps = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < reps; ++i) {
        const double z = static_cast<double>(count_zeros(sample_pair(100, half, RngPlan{17, std::uint64_t(i)})));
        sum += z;
        sq += z * z;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sq / reps - mean * mean) / reps);
    CHECK(std::abs(mean - 100.0) <= 3.0 * se);

    const BinaryModel m(0.3);
    const int n = 10;
    std::vector<double> obs(2 * n + 1, 0.0), expct(2 * n + 1, 0.0);
    for (int i = 0; i < reps; ++i) obs[count_zeros(sample_pair(n, m, RngPlan{23, std::uint64_t(i)}))] += 1.0;
    for (int k = 0; k <= 2 * n; ++k) expct[k] = reps * std::exp(binomial_pmf_log(2 * n, m.q(), k));
    CHECK(fits(obs, expct, 1e-3));
}

TEST_CASE("count_zeros") {
    CHECK(count_zeros({{1, 1}, {1, 1}}) == 0);
    CHECK(count_zeros({{0, 1}, {1, 0}}) == 2);
    CHECK(count_zeros({Sequence(5, 0), Sequence(5, 0)}) == 10);
    CHECK_THROWS_AS(count_zeros({{2}, {0}}), ValidationError);
}

TEST_CASE("sample_conditional") {
    CHECK(sample_conditional(4, 0, RngPlan{1, 0}) == SequencePair{Sequence(4, 1), Sequence(4, 1)});
    CHECK(sample_conditional(4, 8, RngPlan{1, 0}) == SequencePair{Sequence(4, 0), Sequence(4, 0)});
    CHECK_THROWS_AS(sample_conditional(4, 9, RngPlan{1, 0}), ValidationError);
    for (std::uint64_t i = 0; i < 200; ++i) CHECK(count_zeros(sample_conditional(7, 5, RngPlan{2, i})) == 5);

    std::map<std::uint32_t, double> hist;
    const int reps = 60000;
    for (int i = 0; i < reps; ++i) hist[exact::encode(sample_conditional(2, 2, RngPlan{3, std::uint64_t(i)}))] += 1.0;
    REQUIRE(hist.size() == 6);
    std::vector<double> obs;
    for (auto& [code, c] : hist) obs.push_back(c);
    CHECK(fits(obs, std::vector<double>(6, reps / 6.0), 1e-3));
}

TEST_CASE("transform_R and enumerate_R") {
    CHECK(transform_R({{1}, {0}}, RngPlan{1, 1}) == SequencePair{{0}, {0}});
    CHECK_THROWS_AS(transform_R({{0, 0}, {0, 0}}, RngPlan{1, 1}), ValidationError);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const SequencePair z = sample_pair(9, BinaryModel(0.6), RngPlan{4, i});
        if (count_zeros(z) == 18) continue;
        CHECK(count_zeros(transform_R(z, RngPlan{4, i})) == count_zeros(z) + 1);
    }

    CHECK(enumerate_R({{1}, {1}}).size() == 2);
    CHECK(enumerate_R({{0, 0}, {0, 0}}).empty());
    const auto one = enumerate_R({{1, 0}, {0, 0}});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == SequencePair{{0, 0}, {0, 0}});

    // transform_R draws each flip with equal frequency.
    const SequencePair z{{1, 0, 1}, {1, 1, 0}};
    std::map<std::uint32_t, double> hist;
    for (std::uint64_t i = 0; i < 40000; ++i) hist[exact::encode(transform_R(z, RngPlan{6, i}))] += 1.0;
    REQUIRE(hist.size() == 4);
    std::vector<double> obs;
    for (auto& [k, c] : hist) obs.push_back(c);
    CHECK(fits(obs, std::vector<double>(4, 10000.0), 1e-3));
}

TEST_CASE("flip maps uniform-on-u to uniform-on-u+1 exactly") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (int u = 0; u < static_cast<int>(2 * n); ++u) CHECK(exact::flip_law_distance(n, u) == Rational(0));
}

TEST_CASE("zero-count sets") {
    const BinaryModel half(0.5);
    auto s = make_zero_count_set(50, half, SetKind::standard);
    CHECK(s.lo == 40);
    CHECK(s.hi == 60);
    // floor(100^0.6) = 15
    s = make_zero_count_set(50, half, SetKind::extended, 0.6);
    CHECK(s.lo == 35);
    CHECK(s.hi == 65);
    s = make_zero_count_set(50, half, SetKind::linear, 0.2);
    CHECK(s.lo == 40);
    CHECK(s.hi == 60);

    // Non-integral 2nq rounds up.
    s = make_zero_count_set(10, BinaryModel(0.33), SetKind::standard);
    CHECK(zero_count_center(10, 0.67) == 14);
    CHECK(s.lo == 14 - 4);
    CHECK(s.hi == 14 + 4);
    // Clipped at the ends of [0, 2n].
    s = make_zero_count_set(8, BinaryModel(0.05), SetKind::standard);
    CHECK(s.hi == 16);

    CHECK_THROWS_AS(make_zero_count_set(50, half, SetKind::extended, 0.5), ValidationError);
    CHECK_THROWS_AS(make_zero_count_set(50, half, SetKind::extended, 0.7), ValidationError);
    CHECK_THROWS_AS(make_zero_count_set(50, half, SetKind::linear, 1.0), ValidationError);
    CHECK(set_kind_from_string("extended") == SetKind::extended);
    CHECK_THROWS_AS(set_kind_from_string("wide"), ValidationError);

    for (std::int64_t n : {1, 7, 50, 1000}) {
        for (auto kind : {SetKind::standard, SetKind::extended, SetKind::linear}) {
            const double param = kind == SetKind::extended ? 0.6 : 0.5;
            const auto z = make_zero_count_set(n, BinaryModel(0.4), kind, param);
            CHECK(z.lo <= z.hi);
            CHECK(z.lo >= 0);
            CHECK(z.hi <= 2 * n);
            CHECK(z.contains(zero_count_center(n, 0.6)));
        }
    }
}

TEST_CASE("binomial log pmf") {
    CHECK(binomial_pmf_log(2, 0.5, 1) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(binomial_pmf_log(4, 0.5, 2) == doctest::Approx(std::log(6.0 / 16.0)).epsilon(1e-15));
    CHECK_THROWS_AS(binomial_pmf_log(4, 0.5, 5), ValidationError);
    CHECK_THROWS_AS(binomial_pmf_log(4, 0.5, -1), ValidationError);

    for (std::int64_t n2 : {1, 10, 37, 1000, 123457, 1000000}) {
        for (double q : {0.05, 0.5, 0.93}) {
            double total = 0.0;
            for (std::int64_t k = 0; k <= n2; ++k) total += std::exp(binomial_pmf_log(n2, q, k));
            CHECK(std::abs(total - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("binomial log pmf against a 50-digit oracle") {
    double worst = 0.0;
    for (std::int64_t n2 : {3, 16, 40, 200, 2001, 65536, 1000000}) {
        for (double q : {0.01, 0.3, 0.5, 0.95}) {
            const std::int64_t step = std::max<std::int64_t>(1, n2 / 300);
            for (std::int64_t k = 0; k <= n2; k += step) {
                const Big ref = big_log_pmf(n2, q, k);
                if (ref < -700) continue;  // pmf not representable as a double
                const double got = binomial_pmf_log(n2, q, k);
                const double rel = std::abs(std::expm1(static_cast<double>(Big(got) - ref)));
                worst = std::max(worst, rel);
            }
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("local normal approximation") {
    const BinaryModel m(0.3);
    const double pq = 0.21;
    CHECK(gaussian_local_pmf(40, m, 2 * 40 * 0.7) ==
          doctest::Approx(1.0 / (2.0 * std::sqrt(M_PI * pq * 40))).epsilon(1e-14));
    for (int j = 0; j < 20; ++j) {
        CHECK(gaussian_local_pmf(40, m, 56 + j) == doctest::Approx(gaussian_local_pmf(40, m, 56 - j)).epsilon(1e-14));
    }

    const std::int64_t n = 10000;
    const BinaryModel half(0.5);
    const double w = std::pow(2.0 * n, 0.6);
    double worst = 0.0;
    for (std::int64_t k = n - static_cast<std::int64_t>(w); k <= n + static_cast<std::int64_t>(w); ++k) {
        const double ratio = std::exp(binomial_pmf_log(2 * n, 0.5, k)) / gaussian_local_pmf(n, half, static_cast<double>(k));
        worst = std::max(worst, std::abs(ratio - 1.0));
    }
    CHECK(worst <= 0.05);
}
