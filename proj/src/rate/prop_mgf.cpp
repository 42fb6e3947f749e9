#include "lcsb/rate/prop_mgf.hpp"

#include "lcsb/bounds/lower.hpp"
#include "lcsb/error.hpp"
#include "lcsb/mc/moments.hpp"
#include "lcsb/model/zero_count_set.hpp"

#include <cmath>

namespace lcsb {

PropMgfCheck verify_prop_mgf_lower(std::int64_t n, const BinaryModel& model, double t, double eps0,
                                   std::size_t reps, std::uint64_t seed, int workers) {
    require(t > 0.0, "t must be positive");
    require(eps0 > 0.0, "eps0 must be positive");
    const double scale = t / std::sqrt(2.0 * static_cast<double>(n));
    require(scale * static_cast<double>(n) <= 700.0, "t * sqrt(n / 2) exceeds the exponent guard");

    PropMgfCheck out;
    out.ell_center = estimate_ell(n, zero_count_center(n, model.q()), reps, seed, workers);
    const ScoreSample sample = simulate_scores(n, model, reps, seed, workers);
    std::vector<double> w(sample.scores.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = std::exp(scale * (sample.scores[i] - out.ell_center.value));
    }
    out.lhs = mean_estimate(w, seed);
    const double pq = model.p * model.q();
    out.rhs = lambda_const(eps0, model.p) * std::exp(pq * eps0 * eps0 * t * t / 8.0);
    out.violated = out.lhs.value + 3.0 * out.lhs.std_error < out.rhs;
    return out;
}

}  // namespace lcsb
