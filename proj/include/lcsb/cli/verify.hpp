#pragma once

#include "lcsb/cli/report.hpp"
#include "lcsb/mc/moments.hpp"
#include "lcsb/mc/transform.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcsb {

// One inequality check. `pass` is the verdict; `flagged` marks a situation
// worth reporting that does not by itself fail the check.
struct CheckResult {
    std::string id;
    std::string title;
    bool pass = true;
    bool flagged = false;
    std::string detail;
    std::vector<ResultRow> rows;
};

// P(|L - mean| >= t) <= 2 exp(-t^2 / n) + 3 SE at t = sqrt(n), 2 sqrt(n), 3 sqrt(n).
CheckResult check_hoeffding(const ScoreSample& sample);

// Var/n <= 2p(1-p) + 3 SE/n and Var >= d2(2, eps0, p) n - 3 SE, both on the
// scores of the transform run. A missing eps0 flags the lower half.
CheckResult check_variance_sandwich(const TransformStats& stats, std::optional<double> eps0,
                                    std::uint64_t seed);

// |mean - ell(ceil(2nq))| / sqrt(2n) <= sqrt(2pq/pi) + 3 combined SE.
CheckResult check_center_gap(std::int64_t n, double p, std::size_t reps, std::size_t ell_reps,
                             std::uint64_t seed, int workers);

// mgf_lower_limit - 3 SE <= E exp(s|V_n|) <= 1 + 2 s sqrt(pi) e^{s^2/4} + 3 SE.
CheckResult check_mgf_sandwich(const TransformStats& stats, std::optional<double> eps0,
                               const std::vector<double>& s_values, std::uint64_t seed);

struct RateTailPlan {
    std::int64_t n = 200;
    double p = 0.5;
    std::size_t reps = 1000000;
    std::size_t gamma_reps = 2000;
    double offset = 0.05;  // tail threshold s = gamma_hat + offset
    std::uint64_t seed = 0;
    int workers = 0;
};

// Legendre transform of t^2/4 on a 1e-3 grid against s^2, then the per-n
// tail rate at s against the quadratic lower envelope (K = 1).
CheckResult check_rate_tail(const RateTailPlan& plan);

ScoreSample sample_from(const TransformStats& stats, std::uint64_t seed);

struct VerifyPlan {
    std::int64_t n = 1000;
    double p = 0.05;
    std::size_t reps = 10000;
    std::uint64_t seed = 0;
    double eps_target = 0.01;
    std::vector<double> s_values{0.5, 1.0, 2.0};
    int workers = 0;
};

// transform -> eps0 -> bounds -> moment, MGF and rate checks, all at (n, p).
std::vector<CheckResult> run_verification(const VerifyPlan& plan);

// One "PASS id: detail" or "FLAG id: detail" line per check.
std::string render_report(const std::vector<CheckResult>& checks);

}  // namespace lcsb
