#include "lcsb/rate/tail.hpp"

#include "lcsb/error.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>

namespace lcsb {

double clopper_pearson_upper(std::size_t hits, std::size_t trials, double confidence) {
    require(trials >= 1 && hits <= trials, "need 0 <= hits <= trials and trials >= 1");
    if (hits == trials) return 1.0;
    return boost::math::ibeta_inv(static_cast<double>(hits + 1), static_cast<double>(trials - hits),
                                  confidence);
}

TailEstimate tail_of(const ScoreSample& sample, double s) {
    require(s >= 0.0 && s <= 1.0, "s must lie in [0, 1]");
    require(!sample.scores.empty(), "empty sample");
    const double nd = static_cast<double>(sample.n);
    // Integer scores: L >= s n  <=>  L >= ceil(s n), with a guard for s n
    // landing a rounding error above an integer.
    const auto need = static_cast<long long>(std::ceil(s * nd - 1e-9));
    TailEstimate t;
    t.s = s;
    t.n = sample.n;
    t.reps = sample.scores.size();
    for (int score : sample.scores) t.hits += score >= need;
    t.p_hat = static_cast<double>(t.hits) / static_cast<double>(t.reps);
    t.zero_hits = t.hits == 0;
    t.p_upper = clopper_pearson_upper(t.hits, t.reps, kTailConfidence);
    t.ci_lower_rate = -std::log(t.p_upper) / nd;
    t.rate_hat = t.zero_hits ? t.ci_lower_rate : -std::log(t.p_hat) / nd;
    return t;
}

TailEstimate estimate_tail(std::int64_t n, const BinaryModel& model, double s, std::size_t reps,
                           std::uint64_t seed, int workers) {
    require(s >= 0.0 && s <= 1.0, "s must lie in [0, 1]");
    return tail_of(simulate_scores(n, model, reps, seed, workers), s);
}

}  // namespace lcsb
