#pragma once

#include "lcsb/align/scoring.hpp"
#include "lcsb/model/rng.hpp"

#include <vector>

namespace lcsb {

// i.i.d. letters, P(1) = p and P(0) = q = 1 - p.
struct BinaryModel {
    double p = 0.5;

    explicit BinaryModel(double p_one);
    double q() const { return 1.0 - p; }
};

// 2n Bernoulli(p) letters; x takes the first n. Letters are decided by a
// 32-bit threshold compare, which biases p by at most 2^-32.
SequencePair sample_pair(std::size_t n, const BinaryModel& model, const RngPlan& plan);
SequencePair sample_pair(std::size_t n, const BinaryModel& model, CounterRng& rng);

// Number of zeros across x and y together.
std::size_t count_zeros(const SequencePair& pair);

// Uniform over binary 2n-strings with exactly u zeros.
SequencePair sample_conditional(std::size_t n, std::size_t u, const RngPlan& plan);

// Turns one uniformly chosen 1 into a 0.
SequencePair transform_R(const SequencePair& pair, const RngPlan& plan);

// Every outcome of transform_R, one per 1-position, x positions first.
std::vector<SequencePair> enumerate_R(const SequencePair& pair);

}  // namespace lcsb
