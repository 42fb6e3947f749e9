#include "lcsb/mc/transform.hpp"

#include "lcsb/align/lcs_bitparallel.hpp"
#include "lcsb/error.hpp"
#include "lcsb/mc/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace lcsb {
namespace {

struct PairOutcome {
    double mean = 0.0;
    double up = 0.0;
    double down = 0.0;
    std::array<std::uint64_t, 3> hist{};
    std::uint64_t out_of_range = 0;
    std::uint64_t rejected = 0;
    int base = 0;
};

PairOutcome score_all_flips(std::size_t n, const BinaryModel& model, const RngPlan& plan) {
    PairOutcome out;
    CounterRng rng(plan, Stream::pairs);
    SequencePair pair = sample_pair(n, model, rng);
    while (count_zeros(pair) == 2 * n) {
        ++out.rejected;
        pair = sample_pair(n, model, rng);
    }
    const SingleEditLcs kernel(pair);
    out.base = kernel.base();
    std::int64_t total = 0;
    std::uint64_t flips = 0;
    auto record = [&](int changed) {
        const int inc = changed - out.base;
        total += inc;
        ++flips;
        if (inc >= -1 && inc <= 1) {
            ++out.hist[static_cast<std::size_t>(inc + 1)];
        } else {
            ++out.out_of_range;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (pair.x[i] == 1) record(kernel.with_letter(true, i, 0));
        if (pair.y[i] == 1) record(kernel.with_letter(false, i, 0));
    }
    const double f = static_cast<double>(flips);
    out.mean = static_cast<double>(total) / f;
    out.up = static_cast<double>(out.hist[2]) / f;
    out.down = static_cast<double>(out.hist[0]) / f;
    return out;
}

FractionSummary summarize(const std::vector<double>& v) {
    FractionSummary s;
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    s.p05 = lower_quantile(v, 0.05);
    s.p95 = lower_quantile(v, 0.95);
    return s;
}

}  // namespace

TransformStats transform_experiment(std::int64_t n, const BinaryModel& model, std::size_t reps,
                                    std::uint64_t seed, int workers) {
    require(n >= 2, "n must be at least 2");
    require(reps >= 2, "at least two replicates are needed");
    std::vector<PairOutcome> outcomes(reps);
    parallel_for(reps, workers, [&](std::size_t i) {
        outcomes[i] = score_all_flips(static_cast<std::size_t>(n), model, RngPlan{seed, i});
    });

    TransformStats st;
    st.n = n;
    st.p = model.p;
    st.per_sample_means.reserve(reps);
    for (const PairOutcome& o : outcomes) {
        st.per_sample_means.push_back(o.mean);
        st.per_sample_up.push_back(o.up);
        st.per_sample_down.push_back(o.down);
        st.base_scores.push_back(o.base);
        for (std::size_t k = 0; k < 3; ++k) st.increment_histogram[k] += o.hist[k];
        st.out_of_range += o.out_of_range;
        st.rejected_all_zero += o.rejected;
    }
    st.mean_increment = mean_estimate(st.per_sample_means, seed);
    st.frac_up = mean_estimate(st.per_sample_up, seed);
    st.frac_down = mean_estimate(st.per_sample_down, seed);
    st.up_summary = summarize(st.per_sample_up);
    st.down_summary = summarize(st.per_sample_down);
    return st;
}

std::vector<std::pair<double, double>> delta_curve(const TransformStats& stats,
                                                   const std::vector<double>& eps_grid) {
    require(!eps_grid.empty(), "eps grid is empty");
    require(!stats.per_sample_means.empty(), "no per-sample means");
    std::vector<double> sorted = stats.per_sample_means;
    std::sort(sorted.begin(), sorted.end());
    const double total = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        const auto below = std::lower_bound(sorted.begin(), sorted.end(), eps) - sorted.begin();
        out.emplace_back(eps, static_cast<double>(below) / total);
    }
    return out;
}

std::optional<double> pick_epsilon0(const TransformStats& stats, double target) {
    require(target > 0.0 && target <= 1.0, "target must lie in (0, 1]");
    require(!stats.per_sample_means.empty(), "no per-sample means");
    std::vector<double> sorted = stats.per_sample_means;
    std::sort(sorted.begin(), sorted.end());
    const auto k = static_cast<std::size_t>(std::floor(target * static_cast<double>(sorted.size())));
    const double eps = sorted[std::min(k, sorted.size() - 1)];
    if (!(eps > 0.0)) return std::nullopt;
    return eps;
}

}  // namespace lcsb
