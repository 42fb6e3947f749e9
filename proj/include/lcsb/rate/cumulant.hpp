#pragma once

#include "lcsb/mc/moments.hpp"
#include "lcsb/rate/grid_function.hpp"

#include <cstdint>
#include <vector>

namespace lcsb {

struct CumulantPoint {
    double t = 0.0;
    std::int64_t n = 0;
    double lambda_hat = 0.0;  // log mean exp(t L) / n
    double std_error = 0.0;   // delta method
};

inline constexpr double kCumulantGuard = 700.0;

CumulantPoint cumulant_of(const ScoreSample& sample, double t);

CumulantPoint estimate_cumulant(std::int64_t n, const BinaryModel& model, double t,
                                std::size_t reps, std::uint64_t seed, int workers = 0);

// The scaled cumulant over a t grid, evaluated on one stored sample.
GridFunction cumulant_grid(const ScoreSample& sample, const std::vector<double>& t_values);

}  // namespace lcsb
