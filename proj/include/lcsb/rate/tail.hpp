#pragma once

#include "lcsb/mc/moments.hpp"

#include <cstdint>

namespace lcsb {

struct TailEstimate {
    double s = 0.0;
    std::int64_t n = 0;
    std::size_t hits = 0;
    std::size_t reps = 0;
    double p_hat = 0.0;
    double rate_hat = 0.0;       // -log(p_hat) / n; the Clopper-Pearson rate when hits == 0
    double p_upper = 1.0;        // one-sided 97.5% Clopper-Pearson upper limit
    double ci_lower_rate = 0.0;  // -log(p_upper) / n
    bool zero_hits = false;
};

inline constexpr double kTailConfidence = 0.975;

// P(L_n >= s n) from a stored sample.
TailEstimate tail_of(const ScoreSample& sample, double s);

TailEstimate estimate_tail(std::int64_t n, const BinaryModel& model, double s, std::size_t reps,
                           std::uint64_t seed, int workers = 0);

// Exact one-sided upper confidence limit for a binomial proportion.
double clopper_pearson_upper(std::size_t hits, std::size_t trials, double confidence);

}  // namespace lcsb
