#include "lcsb/mc/estimate.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcsb {

Estimate mean_estimate(const std::vector<double>& values, std::uint64_t seed) {
    require(!values.empty(), "no replicates to average");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    const double var = sample_variance(values);
    return {mean, std::sqrt(var / static_cast<double>(values.size())), values.size(), seed};
}

double sample_variance(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return ss / static_cast<double>(n - 1);
}

double lower_quantile(std::vector<double> values, double level) {
    require(!values.empty(), "quantile of an empty list");
    require(level >= 0.0 && level <= 1.0, "quantile level must lie in [0, 1]");
    const auto k = static_cast<std::size_t>(std::floor(level * static_cast<double>(values.size() - 1)));
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
    return values[k];
}

double log_sum_exp(const std::vector<double>& values) {
    require(!values.empty(), "log-sum-exp of an empty list");
    const double top = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(top)) return top;
    double sum = 0.0;
    for (double v : values) sum += std::exp(v - top);
    return top + std::log(sum);
}

}  // namespace lcsb
