#pragma once

#include "lcsb/mc/estimate.hpp"
#include "lcsb/model/binary_model.hpp"

#include <cstdint>
#include <vector>

namespace lcsb {

// LCS scores and zero counts of independent pairs; replicate i uses RngPlan{seed, i}.
struct ScoreSample {
    std::int64_t n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::vector<int> scores;
    std::vector<int> zero_counts;
};

ScoreSample simulate_scores(std::int64_t n, const BinaryModel& model, std::size_t reps,
                            std::uint64_t seed, int workers = 0);

inline constexpr int kBootstrapResamples = 200;

// Functionals of a stored sample.
Estimate mean_of(const ScoreSample& sample);
// Population-form mean of |L - mean|^r; SE from 200 bootstrap resamples.
Estimate central_abs_moment_of(const ScoreSample& sample, double r);
// Mean of exp(s |L - mean| / sqrt n), accumulated relative to the largest term.
Estimate mgf_abs_of(const ScoreSample& sample, double s);
// Fraction of replicates with |L - mean| >= t.
Estimate deviation_frequency_of(const ScoreSample& sample, double t);

Estimate estimate_mean(std::int64_t n, const BinaryModel& model, std::size_t reps,
                       std::uint64_t seed, int workers = 0);
Estimate estimate_central_abs_moment(std::int64_t n, const BinaryModel& model, double r,
                                     std::size_t reps, std::uint64_t seed, int workers = 0);
Estimate estimate_mgf_abs(std::int64_t n, const BinaryModel& model, double s, std::size_t reps,
                          std::uint64_t seed, int workers = 0);

// Mean LCS over pairs drawn uniformly with exactly u zeros. Replicate i at
// zero count u uses replicate index (u << 32) | i, so different u never share draws.
Estimate estimate_ell(std::int64_t n, std::int64_t u, std::size_t reps, std::uint64_t seed,
                      int workers = 0);

struct SlopeProfile {
    std::vector<std::int64_t> u_values;
    std::vector<Estimate> ell_estimates;
    std::vector<Estimate> slope_estimates;  // ell(u+1) - ell(u), SEs combined in quadrature
};

SlopeProfile slope_profile(std::int64_t n, std::int64_t u_lo, std::int64_t u_hi, std::size_t reps,
                           std::uint64_t seed, int workers = 0);

}  // namespace lcsb
