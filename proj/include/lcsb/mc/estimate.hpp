#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lcsb {

// Point estimate with standard error = sample sd / sqrt(replicates).
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t replicates = 0;
    std::uint64_t master_seed = 0;
};

// Mean and standard error of the values, summed in index order.
Estimate mean_estimate(const std::vector<double>& values, std::uint64_t seed);

// Unbiased sample variance (n - 1 denominator). Zero for fewer than two values.
double sample_variance(const std::vector<double>& values);

// Lower order statistic at floor(level * (N - 1)). Values need not be sorted.
double lower_quantile(std::vector<double> values, double level);

// log(sum exp(v)), stable for large arguments.
double log_sum_exp(const std::vector<double>& values);

}  // namespace lcsb
