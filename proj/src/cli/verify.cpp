#include "lcsb/cli/verify.hpp"

#include "lcsb/bounds/lower.hpp"
#include "lcsb/bounds/upper.hpp"
#include "lcsb/error.hpp"
#include "lcsb/model/zero_count_set.hpp"
#include "lcsb/rate/gamma_star.hpp"
#include "lcsb/rate/legendre.hpp"
#include "lcsb/rate/tail.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace lcsb {
namespace {

std::string tagged(const std::string& base, const std::string& key, double v) {
    return base + "[" + key + "=" + format_number(v) + "]";
}

ResultRow row(std::string name, double value, std::optional<double> se, std::optional<std::int64_t> n,
              std::optional<double> p, std::uint64_t seed, std::string anchor) {
    return {std::move(name), value, se, n, p, seed, std::move(anchor)};
}

void note(std::ostringstream& os, const std::string& what, double observed, const char* rel,
          double bound) {
    if (os.tellp() > 0) os << "; ";
    os << what << ' ' << format_number(observed) << ' ' << rel << ' ' << format_number(bound);
}

CheckResult start(std::string id, std::string title) {
    CheckResult c;
    c.id = std::move(id);
    c.title = std::move(title);
    return c;
}

}  // namespace

ScoreSample sample_from(const TransformStats& stats, std::uint64_t seed) {
    ScoreSample s;
    s.n = stats.n;
    s.p = stats.p;
    s.seed = seed;
    s.scores = stats.base_scores;
    return s;
}

CheckResult check_hoeffding(const ScoreSample& sample) {
    CheckResult c = start("hoeffding", "deviation frequency under the Hoeffding envelope");
    const double nd = static_cast<double>(sample.n);
    std::ostringstream os;
    for (int k = 1; k <= 3; ++k) {
        const double t = k * std::sqrt(nd);
        const Estimate f = deviation_frequency_of(sample, t);
        const double envelope = 2.0 * std::exp(-t * t / nd);
        const bool ok = f.value <= envelope + 3.0 * f.std_error;
        c.pass = c.pass && ok;
        c.rows.push_back(row(tagged("deviation_frequency", "t", t), f.value, f.std_error, sample.n,
                             sample.p, sample.seed, "bounded-differences concentration"));
        c.rows.push_back(row(tagged("hoeffding_envelope", "t", t), envelope, std::nullopt, sample.n,
                             sample.p, sample.seed, "bounded-differences concentration"));
        note(os, "P(|L-mean|>=" + std::to_string(k) + "sqrt(n))", f.value, "<=",
             envelope + 3.0 * f.std_error);
    }
    c.detail = os.str();
    return c;
}

CheckResult check_variance_sandwich(const TransformStats& stats, std::optional<double> eps0,
                                    std::uint64_t seed) {
    CheckResult c = start("variance-sandwich", "variance between the tensorisation and local-limit bounds");
    const ScoreSample sample = sample_from(stats, seed);
    const double nd = static_cast<double>(stats.n);
    const Estimate var = central_abs_moment_of(sample, 2.0);
    const double upper = upper_E(2.0, stats.p);
    std::ostringstream os;
    const bool upper_ok = var.value / nd <= upper + 3.0 * var.std_error / nd;
    note(os, "Var/n", var.value / nd, "<=", upper + 3.0 * var.std_error / nd);
    c.rows.push_back(row("variance", var.value, var.std_error, stats.n, stats.p, seed,
                         "plug-in central second moment"));
    c.rows.push_back(row("variance_upper_per_n", upper, std::nullopt, stats.n, stats.p, seed,
                         "central-moment upper bound via tensorisation"));
    c.pass = upper_ok;
    if (eps0) {
        const double lower = lower_d2(2.0, *eps0, stats.p) * nd;
        const bool lower_ok = var.value >= lower - 3.0 * var.std_error;
        note(os, "Var", var.value, ">=", lower - 3.0 * var.std_error);
        c.rows.push_back(row("eps0", *eps0, std::nullopt, stats.n, stats.p, seed,
                             "low quantile of exact conditional flip increments"));
        c.rows.push_back(row("variance_lower", lower, std::nullopt, stats.n, stats.p, seed,
                             "moment lower bound, Gaussian limit"));
        c.pass = c.pass && lower_ok;
    } else {
        c.flagged = true;
        if (os.tellp() > 0) os << "; ";
        os << "eps0 not found, lower bound not evaluated";
    }
    c.detail = os.str();
    return c;
}

CheckResult check_center_gap(std::int64_t n, double p, std::size_t reps, std::size_t ell_reps,
                             std::uint64_t seed, int workers) {
    CheckResult c = start("center-gap", "mean score against the conditional mean at the central zero count");
    const BinaryModel model(p);
    const Estimate mu = estimate_mean(n, model, reps, seed, workers);
    const std::int64_t center = zero_count_center(n, model.q());
    const Estimate ell = estimate_ell(n, center, ell_reps, seed, workers);
    const double scale = std::sqrt(2.0 * static_cast<double>(n));
    const double gap = std::abs(mu.value - ell.value) / scale;
    const double se = std::hypot(mu.std_error, ell.std_error) / scale;
    const double bound = std::sqrt(2.0 * p * (1.0 - p) / std::numbers::pi);
    c.pass = gap <= bound + 3.0 * se;
    c.rows.push_back(row("mean", mu.value, mu.std_error, n, p, seed, "mean score"));
    c.rows.push_back(row(tagged("ell", "u", static_cast<double>(center)), ell.value, ell.std_error,
                         n, p, seed, "conditional mean given the zero count"));
    c.rows.push_back(row("center_gap_scaled", gap, se, n, p, seed,
                         "gap between mean and central conditional mean"));
    c.rows.push_back(row("center_gap_bound", bound, std::nullopt, n, p, seed,
                         "gap between mean and central conditional mean"));
    std::ostringstream os;
    note(os, "|mean-ell|/sqrt(2n)", gap, "<=", bound + 3.0 * se);
    c.detail = os.str();
    return c;
}

CheckResult check_mgf_sandwich(const TransformStats& stats, std::optional<double> eps0,
                               const std::vector<double>& s_values, std::uint64_t seed) {
    CheckResult c = start("mgf-sandwich", "MGF of the scaled score between its limiting bounds");
    const ScoreSample sample = sample_from(stats, seed);
    std::ostringstream os;
    for (double s : s_values) {
        const Estimate m = mgf_abs_of(sample, s);
        const double upper = upper_mgf(s).loose_form;
        const bool upper_ok = m.value <= upper + 3.0 * m.std_error;
        c.pass = c.pass && upper_ok;
        c.rows.push_back(row(tagged("mgf_abs", "s", s), m.value, m.std_error, stats.n, stats.p,
                             seed, "MGF of the scaled centred score"));
        c.rows.push_back(row(tagged("mgf_upper_loose", "s", s), upper, std::nullopt, stats.n,
                             stats.p, seed, "MGF upper bound, simplified"));
        note(os, tagged("mgf", "s", s), m.value, "<=", upper + 3.0 * m.std_error);
        if (eps0) {
            const double lower = mgf_lower_limit(s, *eps0, stats.p);
            c.pass = c.pass && m.value >= lower - 3.0 * m.std_error;
            c.rows.push_back(row(tagged("mgf_lower_limit", "s", s), lower, std::nullopt, stats.n,
                                 stats.p, seed, "limiting MGF lower bound of the scaled score"));
            note(os, tagged("mgf", "s", s), m.value, ">=", lower - 3.0 * m.std_error);
        }
    }
    if (!eps0) {
        c.flagged = true;
        os << "; eps0 not found, lower bounds not evaluated";
    }
    c.detail = os.str();
    return c;
}

CheckResult check_rate_tail(const RateTailPlan& plan) {
    CheckResult c = start("rate-tail", "Legendre transform and per-n tail rate against the quadratic envelope");
    std::ostringstream os;

    // Conjugate of t^2/4 is s^2, attained at t = 2s.
    GridFunction quad;
    for (int i = 0; i <= 3000; ++i) {
        const double t = i * 1e-3;
        quad.points.emplace_back(t, t * t / 4.0);
    }
    std::vector<double> s_grid;
    for (int i = 0; i <= 100; ++i) s_grid.push_back(i * 0.01);
    const LegendreResult lt = legendre(quad, s_grid);
    double worst = 0.0;
    for (const auto& [s, v] : lt.values.points) worst = std::max(worst, std::abs(v - s * s));
    const bool legendre_ok = worst <= 1e-3;
    c.rows.push_back(row("legendre_quadratic_max_error", worst, std::nullopt, std::nullopt,
                         std::nullopt, plan.seed, "convex conjugate of the cumulant"));
    note(os, "legendre max error", worst, "<=", 1e-3);

    const BinaryModel model(plan.p);
    std::vector<std::int64_t> grid;
    for (std::int64_t f : {1, 2, 4, 8, 16}) grid.push_back(std::max<std::int64_t>(2, plan.n * f / 2));
    const GammaStarResult gs = estimate_gamma_star(grid, model, plan.gamma_reps, plan.seed + 1000, plan.workers);
    c.rows.push_back(row("gamma_star_extrapolated", gs.extrapolated, gs.extrapolated_se, std::nullopt,
                         plan.p, plan.seed + 1000, "limit of mean score per letter"));

    const double s = gs.extrapolated + plan.offset;
    c.pass = legendre_ok;
    if (s > 1.0) {
        c.flagged = true;
        os << "; threshold " << format_number(s) << " exceeds 1, tail not evaluated";
        c.detail = os.str();
        return c;
    }
    const ScoreSample sample = simulate_scores(plan.n, model, plan.reps, plan.seed, plan.workers);
    const TailEstimate tail = tail_of(sample, s);
    const double envelope = plan.offset * plan.offset;  // (s - gamma)^2 / K^2 with K = 1
    const double width = tail.zero_hits ? 0.0 : tail.rate_hat - tail.ci_lower_rate;
    const bool tail_ok = tail.rate_hat >= envelope - width;
    c.pass = c.pass && tail_ok;
    c.flagged = tail.zero_hits;
    c.rows.push_back(row(tagged("tail_p_hat", "s", s), tail.p_hat, std::nullopt, plan.n, plan.p,
                         plan.seed, "upper tail probability of the score"));
    c.rows.push_back(row(tagged("tail_rate_hat", "s", s), tail.rate_hat, std::nullopt, plan.n, plan.p,
                         plan.seed, "per-n rate of the upper tail"));
    c.rows.push_back(row(tagged("tail_ci_lower_rate", "s", s), tail.ci_lower_rate, std::nullopt, plan.n,
                         plan.p, plan.seed, "per-n rate of the upper tail"));
    c.rows.push_back(row(tagged("rate_lower_envelope", "s", s), envelope, std::nullopt, plan.n, plan.p,
                         plan.seed, "quadratic lower bound of the rate function"));
    note(os, "tail rate", tail.rate_hat, ">=", envelope - width);
    if (tail.zero_hits) os << " (no hits, CI-based rate " << format_number(tail.ci_lower_rate) << ")";
    c.detail = os.str();
    return c;
}

std::vector<CheckResult> run_verification(const VerifyPlan& plan) {
    const BinaryModel model(plan.p);
    std::vector<CheckResult> out;
    const TransformStats stats = transform_experiment(plan.n, model, plan.reps, plan.seed, plan.workers);
    const std::optional<double> eps0 = pick_epsilon0(stats, plan.eps_target);

    CheckResult flips = start("flip-increments", "every single-flip increment lies in {-1, 0, +1}");
    flips.pass = stats.out_of_range == 0;
    flips.detail = "out-of-range increments " + std::to_string(stats.out_of_range) + " == 0";
    flips.rows.push_back(row("out_of_range_increments", static_cast<double>(stats.out_of_range),
                             std::nullopt, plan.n, plan.p, plan.seed,
                             "single flip changes the score by at most one"));
    flips.rows.push_back(row("rejected_all_zero", static_cast<double>(stats.rejected_all_zero),
                             std::nullopt, plan.n, plan.p, plan.seed, kPlumbingAnchor));
    out.push_back(std::move(flips));

    CheckResult eps = start("eps0", "positive gap between up and down flip probabilities");
    eps.pass = true;
    eps.flagged = !eps0;
    eps.detail = eps0 ? "eps0 = " + format_number(*eps0) + " > 0" : "no positive eps0 at this target";
    if (eps0) {
        eps.rows.push_back(row("eps0", *eps0, std::nullopt, plan.n, plan.p, plan.seed,
                               "low quantile of exact conditional flip increments"));
        eps.rows.push_back(row("lambda", lambda_const(*eps0, plan.p), std::nullopt, plan.n, plan.p,
                               plan.seed, "constant of the conditional MGF lower bound"));
    }
    out.push_back(std::move(eps));

    out.push_back(check_hoeffding(sample_from(stats, plan.seed)));
    out.push_back(check_variance_sandwich(stats, eps0, plan.seed));
    out.push_back(check_center_gap(plan.n, plan.p, plan.reps, std::max<std::size_t>(2, plan.reps / 10),
                                   plan.seed + 1, plan.workers));
    out.push_back(check_mgf_sandwich(stats, eps0, plan.s_values, plan.seed));
    RateTailPlan rt;
    rt.n = plan.n;
    rt.p = plan.p;
    rt.reps = plan.reps;
    rt.gamma_reps = std::max<std::size_t>(2, std::min<std::size_t>(plan.reps, 2000));
    rt.seed = plan.seed + 2;
    rt.workers = plan.workers;
    out.push_back(check_rate_tail(rt));
    return out;
}

std::string render_report(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const CheckResult& c : checks) {
        os << (c.pass && !c.flagged ? "PASS " : "FLAG ") << c.id << ": " << c.detail << '\n';
    }
    return os.str();
}

}  // namespace lcsb
