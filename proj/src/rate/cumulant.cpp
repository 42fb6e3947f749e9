#include "lcsb/rate/cumulant.hpp"

#include "lcsb/error.hpp"

#include <algorithm>
#include <cmath>

namespace lcsb {

CumulantPoint cumulant_of(const ScoreSample& sample, double t) {
    require(sample.scores.size() >= 2, "at least two replicates are needed");
    const double nd = static_cast<double>(sample.n);
    if (std::abs(t) * nd > kCumulantGuard) {
        throw NumericGuardError("|t| * n exceeds the exponent guard");
    }
    CumulantPoint out{t, sample.n, 0.0, 0.0};
    if (t == 0.0) return out;

    const double top = t * *std::max_element(sample.scores.begin(), sample.scores.end(),
                                             [t](int a, int b) { return t * a < t * b; });
    std::vector<double> w(sample.scores.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp(t * sample.scores[i] - top);
    const Estimate m = mean_estimate(w, sample.seed);
    out.lambda_hat = (top + std::log(m.value)) / nd;
    out.std_error = m.std_error / m.value / nd;
    return out;
}

CumulantPoint estimate_cumulant(std::int64_t n, const BinaryModel& model, double t,
                                std::size_t reps, std::uint64_t seed, int workers) {
    require(std::abs(t) * static_cast<double>(n) <= kCumulantGuard,
            "|t| * n exceeds the exponent guard");
    return cumulant_of(simulate_scores(n, model, reps, seed, workers), t);
}

GridFunction cumulant_grid(const ScoreSample& sample, const std::vector<double>& t_values) {
    std::vector<double> ts = t_values;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    GridFunction g;
    for (double t : ts) g.points.emplace_back(t, cumulant_of(sample, t).lambda_hat);
    return g;
}

}  // namespace lcsb
