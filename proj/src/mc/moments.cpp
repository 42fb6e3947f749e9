#include "lcsb/mc/moments.hpp"

#include "lcsb/align/lcs_bitparallel.hpp"
#include "lcsb/error.hpp"
#include "lcsb/mc/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace lcsb {
namespace {

constexpr double kExpGuard = 700.0;

std::vector<double> as_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

double plugin_moment(const std::vector<int>& scores, const std::vector<std::size_t>* pick,
                     double r) {
    const std::size_t m = pick ? pick->size() : scores.size();
    auto at = [&](std::size_t i) { return static_cast<double>(pick ? scores[(*pick)[i]] : scores[i]); };
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += at(i);
    const double mean = sum / static_cast<double>(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += std::pow(std::abs(at(i) - mean), r);
    return acc / static_cast<double>(m);
}

void require_reps(std::size_t reps) { require(reps >= 2, "at least two replicates are needed"); }

}  // namespace

ScoreSample simulate_scores(std::int64_t n, const BinaryModel& model, std::size_t reps,
                            std::uint64_t seed, int workers) {
    require(n >= 1, "n must be positive");
    ScoreSample out;
    out.n = n;
    out.p = model.p;
    out.seed = seed;
    out.scores.assign(reps, 0);
    out.zero_counts.assign(reps, 0);
    parallel_for(reps, workers, [&](std::size_t i) {
        const SequencePair pair = sample_pair(static_cast<std::size_t>(n), model, RngPlan{seed, i});
        out.scores[i] = lcs_bitparallel(pair);
        out.zero_counts[i] = static_cast<int>(count_zeros(pair));
    });
    return out;
}

Estimate mean_of(const ScoreSample& sample) {
    return mean_estimate(as_doubles(sample.scores), sample.seed);
}

Estimate central_abs_moment_of(const ScoreSample& sample, double r) {
    require(r >= 1.0, "moment order must be at least 1");
    require_reps(sample.scores.size());
    const std::size_t m = sample.scores.size();
    const double value = plugin_moment(sample.scores, nullptr, r);
    std::vector<double> boot(kBootstrapResamples);
    std::vector<std::size_t> pick(m);
    for (int b = 0; b < kBootstrapResamples; ++b) {
        CounterRng rng(sample.seed, Stream::bootstrap, static_cast<std::uint64_t>(b));
        for (auto& idx : pick) idx = static_cast<std::size_t>(rng.below(m));
        boot[b] = plugin_moment(sample.scores, &pick, r);
    }
    return {value, std::sqrt(sample_variance(boot)), m, sample.seed};
}

Estimate mgf_abs_of(const ScoreSample& sample, double s) {
    require(s > 0.0, "s must be positive");
    require_reps(sample.scores.size());
    const double root_n = std::sqrt(static_cast<double>(sample.n));
    if (s * root_n > kExpGuard) throw NumericGuardError("s * sqrt(n) exceeds the exponent guard");
    const double mean = mean_of(sample).value;
    std::vector<double> expo(sample.scores.size());
    for (std::size_t i = 0; i < expo.size(); ++i) {
        expo[i] = s * std::abs(sample.scores[i] - mean) / root_n;
    }
    const double top = *std::max_element(expo.begin(), expo.end());
    std::vector<double> scaled(expo.size());
    for (std::size_t i = 0; i < expo.size(); ++i) scaled[i] = std::exp(expo[i] - top);
    const Estimate e = mean_estimate(scaled, sample.seed);
    const double factor = std::exp(top);
    return {e.value * factor, e.std_error * factor, e.replicates, sample.seed};
}

Estimate deviation_frequency_of(const ScoreSample& sample, double t) {
    require_reps(sample.scores.size());
    const double mean = mean_of(sample).value;
    std::vector<double> hit(sample.scores.size());
    for (std::size_t i = 0; i < hit.size(); ++i) {
        hit[i] = std::abs(sample.scores[i] - mean) >= t ? 1.0 : 0.0;
    }
    return mean_estimate(hit, sample.seed);
}

Estimate estimate_mean(std::int64_t n, const BinaryModel& model, std::size_t reps,
                       std::uint64_t seed, int workers) {
    require_reps(reps);
    return mean_of(simulate_scores(n, model, reps, seed, workers));
}

Estimate estimate_central_abs_moment(std::int64_t n, const BinaryModel& model, double r,
                                     std::size_t reps, std::uint64_t seed, int workers) {
    require(r >= 1.0, "moment order must be at least 1");
    require_reps(reps);
    return central_abs_moment_of(simulate_scores(n, model, reps, seed, workers), r);
}

Estimate estimate_mgf_abs(std::int64_t n, const BinaryModel& model, double s, std::size_t reps,
                          std::uint64_t seed, int workers) {
    require(s > 0.0, "s must be positive");
    require(s * std::sqrt(static_cast<double>(n)) <= kExpGuard,
            "s * sqrt(n) exceeds the exponent guard");
    require_reps(reps);
    return mgf_abs_of(simulate_scores(n, model, reps, seed, workers), s);
}

Estimate estimate_ell(std::int64_t n, std::int64_t u, std::size_t reps, std::uint64_t seed,
                      int workers) {
    require(n >= 1, "n must be positive");
    require(u >= 0 && u <= 2 * n, "zero count must lie in [0, 2n]");
    require_reps(reps);
    require(reps < (std::size_t{1} << 32), "too many replicates");
    std::vector<double> scores(reps);
    parallel_for(reps, workers, [&](std::size_t i) {
        const RngPlan plan{seed, (static_cast<std::uint64_t>(u) << 32) | i};
        scores[i] = lcs_bitparallel(sample_conditional(static_cast<std::size_t>(n),
                                                       static_cast<std::size_t>(u), plan));
    });
    return mean_estimate(scores, seed);
}

SlopeProfile slope_profile(std::int64_t n, std::int64_t u_lo, std::int64_t u_hi, std::size_t reps,
                           std::uint64_t seed, int workers) {
    require(u_lo >= 0 && u_lo < u_hi && u_hi <= 2 * n, "need 0 <= u_lo < u_hi <= 2n");
    SlopeProfile out;
    for (std::int64_t u = u_lo; u <= u_hi; ++u) {
        out.u_values.push_back(u);
        out.ell_estimates.push_back(estimate_ell(n, u, reps, seed, workers));
    }
    for (std::size_t i = 0; i + 1 < out.ell_estimates.size(); ++i) {
        const Estimate& a = out.ell_estimates[i];
        const Estimate& b = out.ell_estimates[i + 1];
        out.slope_estimates.push_back({b.value - a.value, std::hypot(a.std_error, b.std_error),
                                       reps, seed});
    }
    return out;
}

}  // namespace lcsb
