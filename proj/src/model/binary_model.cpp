#include "lcsb/model/binary_model.hpp"

#include "lcsb/error.hpp"

#include <cmath>
#include <numeric>

namespace lcsb {
namespace {

void require_binary(const SequencePair& pair) {
    require(pair.x.size() == pair.y.size(), "sequences must have equal length");
    for (const auto* s : {&pair.x, &pair.y})
        for (Letter c : *s) require(c <= 1, "binary letters expected");
}

Letter& at(SequencePair& pair, std::size_t pos) {
    const std::size_t n = pair.n();
    return pos < n ? pair.x[pos] : pair.y[pos - n];
}

}  // namespace

BinaryModel::BinaryModel(double p_one) : p(p_one) {
    require(std::isfinite(p) && p > 0.0 && p < 1.0, "p must lie strictly between 0 and 1");
}

SequencePair sample_pair(std::size_t n, const BinaryModel& model, CounterRng& rng) {
    const auto threshold = static_cast<std::uint64_t>(std::llround(std::ldexp(model.p, 32)));
    SequencePair pair{Sequence(n), Sequence(n)};
    for (Letter& c : pair.x) c = rng.next_u32() < threshold ? 1 : 0;
    for (Letter& c : pair.y) c = rng.next_u32() < threshold ? 1 : 0;
    return pair;
}

SequencePair sample_pair(std::size_t n, const BinaryModel& model, const RngPlan& plan) {
    require(n >= 1, "n must be positive");
    CounterRng rng(plan, Stream::pairs);
    return sample_pair(n, model, rng);
}

std::size_t count_zeros(const SequencePair& pair) {
    require_binary(pair);
    std::size_t zeros = 0;
    for (Letter c : pair.x) zeros += c == 0;
    for (Letter c : pair.y) zeros += c == 0;
    return zeros;
}

SequencePair sample_conditional(std::size_t n, std::size_t u, const RngPlan& plan) {
    require(u <= 2 * n, "zero count must lie in [0, 2n]");
    CounterRng rng(plan, Stream::conditional);
    std::vector<std::size_t> slots(2 * n);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    SequencePair pair{Sequence(n, 1), Sequence(n, 1)};
    // Partial Fisher-Yates: the first u slots form a uniform u-subset.
    for (std::size_t i = 0; i < u; ++i) {
        const std::size_t j = i + rng.below(2 * n - i);
        std::swap(slots[i], slots[j]);
        at(pair, slots[i]) = 0;
    }
    return pair;
}

SequencePair transform_R(const SequencePair& pair, const RngPlan& plan) {
    const std::size_t ones = 2 * pair.n() - count_zeros(pair);
    require(ones > 0, "transform_R is undefined on an all-zero pair");
    CounterRng rng(plan, Stream::flip);
    std::size_t target = rng.below(ones);
    SequencePair out = pair;
    for (std::size_t pos = 0; pos < 2 * pair.n(); ++pos) {
        Letter& c = at(out, pos);
        if (c == 1 && target-- == 0) {
            c = 0;
            break;
        }
    }
    return out;
}

std::vector<SequencePair> enumerate_R(const SequencePair& pair) {
    require_binary(pair);
    std::vector<SequencePair> out;
    for (std::size_t pos = 0; pos < 2 * pair.n(); ++pos) {
        SequencePair copy = pair;
        Letter& c = at(copy, pos);
        if (c == 1) {
            c = 0;
            out.push_back(std::move(copy));
        }
    }
    return out;
}

}  // namespace lcsb
