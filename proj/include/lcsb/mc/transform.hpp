#pragma once

#include "lcsb/mc/estimate.hpp"
#include "lcsb/model/binary_model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lcsb {

struct FractionSummary {
    double min = 0.0;
    double p05 = 0.0;
    double p95 = 0.0;
    double max = 0.0;
};

/**
 * Outcome of flipping a 1 to a 0 in random pairs. For each sampled pair
 * every possible flip is scored, so the per-pair conditional mean increment
 * and up/down fractions are exact; only the outer average is Monte Carlo.
 */
struct TransformStats {
    std::int64_t n = 0;
    double p = 0.5;
    Estimate mean_increment;
    Estimate frac_up;
    Estimate frac_down;
    std::array<std::uint64_t, 3> increment_histogram{};  // -1, 0, +1
    std::uint64_t out_of_range = 0;                       // increments outside {-1, 0, +1}
    std::vector<double> per_sample_means;
    std::vector<double> per_sample_up;
    std::vector<double> per_sample_down;
    std::vector<int> base_scores;  // LCS of each accepted pair
    std::uint64_t rejected_all_zero = 0;
    FractionSummary up_summary;
    FractionSummary down_summary;
};

// Replicate i draws its pair from RngPlan{seed, i}; an all-zero pair is
// discarded and the next 2n letters of the same stream are used instead.
TransformStats transform_experiment(std::int64_t n, const BinaryModel& model, std::size_t reps,
                                    std::uint64_t seed, int workers = 0);

// Fraction of samples whose mean increment is below each eps.
std::vector<std::pair<double, double>> delta_curve(const TransformStats& stats,
                                                   const std::vector<double>& eps_grid);

// Largest eps with delta(eps) <= target: the floor(target * N)-th smallest
// per-sample mean, capped at the largest one. Empty if that is not positive.
std::optional<double> pick_epsilon0(const TransformStats& stats, double target);

}  // namespace lcsb
