#include "lcsb/cli/commands.hpp"

#include "lcsb/align/lcs_bitparallel.hpp"
#include "lcsb/align/score_dp.hpp"
#include "lcsb/bounds/bound_value.hpp"
#include "lcsb/cli/scheme_file.hpp"
#include "lcsb/cli/verify.hpp"
#include "lcsb/error.hpp"
#include "lcsb/mc/moments.hpp"
#include "lcsb/mc/parallel.hpp"
#include "lcsb/mc/transform.hpp"
#include "lcsb/rate/cumulant.hpp"
#include "lcsb/rate/legendre.hpp"
#include "lcsb/rate/tail.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>

namespace lcsb {
namespace {

std::string tagged(const std::string& base, const std::string& key, double v) {
    return base + "[" + key + "=" + format_number(v) + "]";
}

std::string bound_name(const BoundValue& b) {
    std::string s = b.name + "[";
    for (std::size_t i = 0; i < b.inputs.size(); ++i) {
        if (i) s += ';';
        s += b.inputs[i].first + "=" + format_number(b.inputs[i].second);
    }
    return s + "]";
}

struct Context {
    const RunConfig& cfg;
    std::uint64_t seed;
    std::size_t reps;
    RunOutput out;

    void add(std::string name, double value, std::optional<double> se, std::string anchor) {
        out.rows.push_back({std::move(name), value, se, cfg.n, cfg.p, seed, std::move(anchor)});
    }
    void add(std::string name, const Estimate& e, std::string anchor) {
        add(std::move(name), e.value, e.std_error, std::move(anchor));
    }
};

void cmd_score(Context& ctx) {
    const SequencePair pair{parse_sequence(ctx.cfg.x), parse_sequence(ctx.cfg.y)};
    std::optional<ScoringScheme> scheme;
    if (!ctx.cfg.scheme_path.empty()) {
        scheme = load_scheme_file(ctx.cfg.scheme_path);
    } else {
        int top = 1;
        for (Letter c : pair.x) top = std::max<int>(top, c);
        for (Letter c : pair.y) top = std::max<int>(top, c);
        scheme = ScoringScheme::lcs(top + 1);
    }
    const Rational value = score_dp(pair, *scheme);
    ctx.out.rows.push_back({"score", to_double(value), std::nullopt,
                            static_cast<std::int64_t>(pair.n()), std::nullopt, std::nullopt,
                            "optimal alignment score"});
    ctx.out.console = to_string(value) + "\n";
}

void cmd_moments(Context& ctx) {
    const BinaryModel model(ctx.cfg.p);
    const ScoreSample sample = simulate_scores(ctx.cfg.n, model, ctx.reps, ctx.seed, ctx.cfg.workers);
    ctx.add("mean", mean_of(sample), "mean score");
    for (double r : ctx.cfg.r_list) {
        ctx.add(tagged("central_abs_moment", "r", r), central_abs_moment_of(sample, r),
                "plug-in central absolute moment");
    }
    for (double s : ctx.cfg.s_list) {
        try {
            ctx.add(tagged("mgf_abs", "s", s), mgf_abs_of(sample, s), "MGF of the scaled centred score");
        } catch (const NumericGuardError& e) {
            ctx.out.flags.push_back(tagged("mgf_abs", "s", s) + ": " + e.what());
        }
    }
}

void cmd_ell_profile(Context& ctx) {
    const std::int64_t lo = ctx.cfg.u_lo.value_or(0);
    const std::int64_t hi = ctx.cfg.u_hi.value_or(2 * ctx.cfg.n);
    const SlopeProfile prof = slope_profile(ctx.cfg.n, lo, hi, ctx.reps, ctx.seed, ctx.cfg.workers);
    for (std::size_t i = 0; i < prof.u_values.size(); ++i) {
        ctx.add(tagged("ell", "u", static_cast<double>(prof.u_values[i])), prof.ell_estimates[i],
                "conditional mean given the zero count");
    }
    for (std::size_t i = 0; i < prof.slope_estimates.size(); ++i) {
        const Estimate& s = prof.slope_estimates[i];
        const std::string name = tagged("slope", "u", static_cast<double>(prof.u_values[i]));
        ctx.add(name, s, "single flip changes the score by at most one");
        if (std::abs(s.value) > 1.0 + 3.0 * s.std_error) {
            ctx.out.flags.push_back(name + " outside [-1, 1] beyond 3 SE");
        }
    }
}

void cmd_transform(Context& ctx) {
    const BinaryModel model(ctx.cfg.p);
    const TransformStats st = transform_experiment(ctx.cfg.n, model, ctx.reps, ctx.seed, ctx.cfg.workers);
    const std::string anchor = "exact conditional flip increments";
    ctx.add("mean_increment", st.mean_increment, anchor);
    ctx.add("frac_up", st.frac_up, anchor);
    ctx.add("frac_down", st.frac_down, anchor);
    const char* bins[3] = {"increments[-1]", "increments[0]", "increments[+1]"};
    for (int k = 0; k < 3; ++k) {
        ctx.add(bins[k], static_cast<double>(st.increment_histogram[k]), std::nullopt, anchor);
    }
    ctx.add("increments_out_of_range", static_cast<double>(st.out_of_range), std::nullopt,
            "single flip changes the score by at most one");
    if (st.out_of_range) ctx.out.flags.push_back("flip increments outside {-1, 0, +1}");
    for (const auto& [label, sum] : {std::pair{"frac_up", &st.up_summary}, std::pair{"frac_down", &st.down_summary}}) {
        ctx.add(std::string(label) + "_min", sum->min, std::nullopt, anchor);
        ctx.add(std::string(label) + "_p05", sum->p05, std::nullopt, anchor);
        ctx.add(std::string(label) + "_p95", sum->p95, std::nullopt, anchor);
        ctx.add(std::string(label) + "_max", sum->max, std::nullopt, anchor);
    }
    std::vector<double> grid = ctx.cfg.eps_grid;
    if (grid.empty()) {
        for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
    }
    for (const auto& [eps, d] : delta_curve(st, grid)) {
        ctx.add(tagged("delta", "eps", eps), d, std::nullopt, "probability of a small conditional increment");
    }
    if (const auto eps0 = pick_epsilon0(st, ctx.cfg.eps_target)) {
        ctx.add(tagged("eps0", "target", ctx.cfg.eps_target), *eps0, std::nullopt,
                "low quantile of exact conditional flip increments");
    } else {
        ctx.out.flags.push_back("no positive eps0 at target " + format_number(ctx.cfg.eps_target));
    }
    ctx.add("rejected_all_zero", static_cast<double>(st.rejected_all_zero), std::nullopt, kPlumbingAnchor);
    ctx.out.counters["rejected_all_zero"] = st.rejected_all_zero;
}

void cmd_bounds(Context& ctx) {
    BoundRequest req;
    req.r_values = ctx.cfg.r_list;
    req.p = ctx.cfg.p;
    req.eps0 = ctx.cfg.eps0;
    req.s_values = ctx.cfg.s_list;
    req.beta = ctx.cfg.beta;
    req.n = ctx.cfg.n;
    for (const BoundValue& b : evaluate_bounds(req)) {
        ctx.out.rows.push_back({bound_name(b), b.value, std::nullopt, std::nullopt, ctx.cfg.p,
                                std::nullopt, b.anchor});
    }
}

void cmd_rate(Context& ctx) {
    const BinaryModel model(ctx.cfg.p);
    const ScoreSample sample = simulate_scores(ctx.cfg.n, model, ctx.reps, ctx.seed, ctx.cfg.workers);
    std::vector<double> s_list = ctx.cfg.s_list;
    if (s_list.empty()) s_list = {0.85, 0.9};
    std::vector<double> t_list = ctx.cfg.t_list;
    if (t_list.empty()) {
        const double t_max = std::min(0.5, 700.0 / static_cast<double>(ctx.cfg.n));
        for (int i = 0; i <= 20; ++i) t_list.push_back(t_max * i / 20.0);
    }
    ctx.add("mean_per_letter", mean_of(sample).value / static_cast<double>(ctx.cfg.n),
            mean_of(sample).std_error / static_cast<double>(ctx.cfg.n), "limit of mean score per letter");
    for (double s : s_list) {
        const TailEstimate t = tail_of(sample, s);
        ctx.add(tagged("tail_p_hat", "s", s), t.p_hat, std::nullopt, "upper tail probability of the score");
        ctx.add(tagged("tail_rate_hat", "s", s), t.rate_hat, std::nullopt, "per-n rate of the upper tail");
        ctx.add(tagged("tail_ci_lower_rate", "s", s), t.ci_lower_rate, std::nullopt,
                "per-n rate of the upper tail");
        if (t.zero_hits) ctx.out.flags.push_back(tagged("tail", "s", s) + ": zero hits");
    }
    for (double t : t_list) {
        const CumulantPoint c = cumulant_of(sample, t);
        ctx.add(tagged("cumulant", "t", t), c.lambda_hat, c.std_error, "scaled cumulant generating function");
    }
    const LegendreResult lt = legendre(cumulant_grid(sample, t_list), s_list);
    for (std::size_t i = 0; i < lt.values.size(); ++i) {
        const auto& [s, v] = lt.values.points[i];
        ctx.add(tagged("legendre", "s", s), v, std::nullopt, "convex conjugate of the cumulant");
        if (lt.edge_saturated[i]) {
            ctx.out.flags.push_back(tagged("legendre", "s", s) + ": supremum at the grid edge");
        }
    }
}

void cmd_verify(Context& ctx) {
    VerifyPlan plan;
    plan.n = ctx.cfg.n;
    plan.p = ctx.cfg.p;
    plan.reps = ctx.reps;
    plan.seed = ctx.seed;
    plan.eps_target = ctx.cfg.eps_target;
    if (!ctx.cfg.s_list.empty()) plan.s_values = ctx.cfg.s_list;
    plan.workers = ctx.cfg.workers;
    const auto checks = run_verification(plan);
    for (const CheckResult& c : checks) {
        for (const ResultRow& r : c.rows) ctx.out.rows.push_back(r);
        if (!c.pass || c.flagged) ctx.out.flags.push_back(c.id + ": " + c.detail);
    }
    ctx.out.console = render_report(checks);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), "cannot write '" + path + "'");
    f << text;
    require(static_cast<bool>(f), "cannot write '" + path + "'");
}

}  // namespace

RunOutput execute(const RunConfig& cfg) {
    validate(cfg);
    require(cfg.seed.has_value(), "seed must be set before execution");
    Context ctx{cfg, *cfg.seed, cfg.reps.value_or(default_reps(cfg.command)), {}};
    if (cfg.command == "score") cmd_score(ctx);
    else if (cfg.command == "simulate-moments") cmd_moments(ctx);
    else if (cfg.command == "ell-profile") cmd_ell_profile(ctx);
    else if (cfg.command == "transform") cmd_transform(ctx);
    else if (cfg.command == "bounds") cmd_bounds(ctx);
    else if (cfg.command == "rate") cmd_rate(ctx);
    else if (cfg.command == "verify-all") cmd_verify(ctx);
    return std::move(ctx.out);
}

int run(RunConfig config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        if (!config.seed) {
            std::random_device rd;
            config.seed = (std::uint64_t{rd()} << 32) | rd();
        }
        const auto start = std::chrono::steady_clock::now();
        const RunOutput result = execute(config);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const std::string table = render(result.rows, config.format);
        if (config.output.empty()) {
            out << (result.console.empty() ? table : result.console);
        } else {
            write_file(config.output, table);
            const auto manifest = make_manifest(config, result, wall, resolve_workers(config.workers));
            write_file(config.output + ".manifest.json", manifest.dump(2) + "\n");
            if (!result.console.empty()) out << result.console;
        }
        for (const std::string& f : result.flags) err << "flag: " << f << '\n';
        return result.flags.empty() ? kExitOk : kExitFlagged;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericGuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Alignment-score Monte Carlo and bound calculator"};
    app.require_subcommand(1);

    std::string config_path;
    std::int64_t n = 0;
    double p = 0, beta = 0, eps_target = 0, eps0 = 0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::vector<double> r_list, s_list, t_list, eps_grid;
    std::int64_t u_lo = 0, u_hi = 0;
    int workers = 0;
    std::string output, format, x, y, scheme;

    std::vector<CLI::App*> subs;
    for (const std::string& name : kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
        sub->add_option("--n", n, "sequence length");
        sub->add_option("--p", p, "probability of letter 1");
        sub->add_option("--reps", reps, "Monte Carlo replicates");
        sub->add_option("--seed", seed, "master seed (random and recorded when omitted)");
        sub->add_option("--r", r_list, "moment orders")->delimiter(',');
        sub->add_option("--s", s_list, "MGF rates or tail thresholds")->delimiter(',');
        sub->add_option("--t", t_list, "cumulant arguments")->delimiter(',');
        sub->add_option("--eps-grid", eps_grid, "thresholds for the delta curve")->delimiter(',');
        sub->add_option("--beta", beta, "exponent of the extended zero-count window");
        sub->add_option("--eps-target", eps_target, "target probability for eps0");
        sub->add_option("--eps0", eps0, "increment gap used by the lower bounds");
        sub->add_option("--u-lo", u_lo, "first zero count of the profile");
        sub->add_option("--u-hi", u_hi, "last zero count of the profile");
        sub->add_option("--workers", workers, "worker threads (0: $LCSB_WORKERS or all cores)");
        sub->add_option("--output", output, "results file; the manifest goes next to it");
        sub->add_option("--format", format, "csv or json");
        sub->add_option("--x", x, "first sequence, e.g. 1101");
        sub->add_option("--y", y, "second sequence");
        sub->add_option("--scheme", scheme, "JSON scoring scheme file");
        subs.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        for (CLI::App* sub : subs)
            if (sub->parsed()) out << sub->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    CLI::App* sub = nullptr;
    for (CLI::App* s : subs)
        if (s->parsed()) sub = s;

    RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = load_config_file(config_path);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    cfg.command = sub->get_name();
    auto given = [&](const char* flag) { return sub->count(flag) > 0; };
    if (given("--n")) cfg.n = n;
    if (given("--p")) cfg.p = p;
    if (given("--reps")) cfg.reps = reps;
    if (given("--seed")) cfg.seed = seed;
    if (given("--r")) cfg.r_list = r_list;
    if (given("--s")) cfg.s_list = s_list;
    if (given("--t")) cfg.t_list = t_list;
    if (given("--eps-grid")) cfg.eps_grid = eps_grid;
    if (given("--beta")) cfg.beta = beta;
    if (given("--eps-target")) cfg.eps_target = eps_target;
    if (given("--eps0")) cfg.eps0 = eps0;
    if (given("--u-lo")) cfg.u_lo = u_lo;
    if (given("--u-hi")) cfg.u_hi = u_hi;
    if (given("--workers")) cfg.workers = workers;
    if (given("--output")) cfg.output = output;
    if (given("--format")) cfg.format = format;
    if (given("--x")) cfg.x = x;
    if (given("--y")) cfg.y = y;
    if (given("--scheme")) cfg.scheme_path = scheme;
    return run(std::move(cfg), out, err);
}

}  // namespace lcsb
