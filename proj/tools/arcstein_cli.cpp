#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "arcstein/chung_feller.hpp"
#include "arcstein/discrete_measure.hpp"
#include "arcstein/errors.hpp"
#include "arcstein/numeric.hpp"
#include "arcstein/rate.hpp"
#include "arcstein/rng.hpp"
#include "arcstein/stein.hpp"
#include "arcstein/walk.hpp"
#include "arcstein/wasserstein.hpp"

using namespace arcstein;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kOutputDirEnv = "ARCSTEIN_OUTPUT_DIR";
constexpr std::int64_t kExactLimit = 2000;

enum Exit { kPass = 0, kViolation = 1, kUsage = 2 };

struct Globals {
    std::uint64_t seed = 0x5EED5EEDULL;
    std::string out;
    std::string format;
    int threads = 0;
};

ReportFormat format_or(const Globals& g, ReportFormat fallback)
{
    return g.format.empty() ? fallback : parse_report_format(g.format);
}

/// --out if given, else $ARCSTEIN_OUTPUT_DIR/<name>.<ext>, else stdout.
class Sink {
public:
    Sink(const Globals& g, const std::string& name, ReportFormat format)
    {
        path_ = g.out;
        if (path_.empty()) {
            if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
                std::error_code ec;
                std::filesystem::create_directories(dir, ec);
                if (ec)
                    throw IoError(std::string("cannot create output directory ") + dir + ": " + ec.message());
                path_ = (std::filesystem::path(dir) / (name + (format == ReportFormat::csv ? ".csv" : ".json")))
                            .string();
            }
        }
        if (!path_.empty()) {
            file_.open(path_, std::ios::binary);
            if (!file_)
                throw IoError("cannot open " + path_ + " for writing");
        }
    }

    std::ostream& stream() { return path_.empty() ? std::cout : file_; }

    void close()
    {
        stream().flush();
        if (!stream())
            throw IoError("write failed: " + (path_.empty() ? std::string("<stdout>") : path_));
        if (!path_.empty())
            std::cerr << "wrote " << path_ << '\n';
    }

private:
    std::string path_;
    std::ofstream file_;
};

std::string g17(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void violation(int& status, const std::string& what)
{
    std::cerr << "violation: " << what << '\n';
    status = kViolation;
}

// ---------------------------------------------------------------------------

struct PmfArgs {
    std::int64_t m = 1;
    std::string mode = "auto";
};

int run_pmf(const Globals& g, const PmfArgs& a)
{
    if (a.m < 1)
        throw ArgumentError("--m must be >= 1");
    const PmfMode mode = parse_pmf_mode(a.mode);
    const bool exact = mode == PmfMode::exact || (mode == PmfMode::automatic && a.m <= kExactLimit);
    if (exact && a.m > kExactLimit)
        throw ArgumentError("exact pmf is limited to m <= " + std::to_string(kExactLimit) + "; use --mode float");

    const auto format = format_or(g, ReportFormat::csv);
    int status = kPass;
    std::vector<std::string> fractions;
    std::vector<double> probs;
    if (exact) {
        const auto pmf = build_pmf(a.m);
        Rational total(0);
        for (std::int64_t k = 0; k <= a.m; ++k) {
            total += pmf(k);
            if (pmf(k) != pmf(a.m - k))
                violation(status, "p(k) != p(m-k) at k=" + std::to_string(k));
            fractions.push_back(pmf(k).get_str());
        }
        if (total != 1)
            violation(status, "sum of p(k) is " + total.get_str());
        const auto view = pmf.float_view();
        probs.assign(view.begin(), view.end());
    } else {
        probs = pmf_float(a.m);
        const double total = compensated_sum(probs);
        if (std::abs(total - 1.0) > 1e-9)
            violation(status, "sum of p(k) is " + g17(total));
    }

    Sink sink(g, "pmf", format);
    auto& os = sink.stream();
    if (format == ReportFormat::csv) {
        os << "k,p_exact,p\n";
        for (std::int64_t k = 0; k <= a.m; ++k)
            os << k << ',' << (exact ? fractions[k] : "") << ',' << g17(probs[k]) << '\n';
    } else {
        json rows = json::array();
        for (std::int64_t k = 0; k <= a.m; ++k) {
            json row{{"k", k}};
            row["p_exact"] = exact ? json(fractions[k]) : json(nullptr);
            row["p"] = probs[k];
            rows.push_back(std::move(row));
        }
        os << json{{"version", version_string()}, {"m", a.m}, {"mode", exact ? "exact" : "float"}, {"rows", rows}}
                  .dump(2)
           << '\n';
    }
    sink.close();
    return status;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
    std::int64_t m = 8;
    std::int64_t paths = 1'000'000;
    std::string orientation = "nonnegative";
    double mean_sigmas = 5.0;
};

int run_simulate(const Globals& g, const SimulateArgs& a)
{
    if (a.m < 1 || a.paths < 1)
        throw ArgumentError("--m and --paths must be >= 1");
    WalkConfig config{.m = a.m, .n_paths = a.paths, .master_seed = g.seed};
    if (a.orientation == "nonpositive")
        config.orientation = Orientation::nonpositive;
    else if (a.orientation != "nonnegative")
        throw ArgumentError("--orientation must be nonnegative or nonpositive");

    const auto batch = simulate_batch(config);
    const auto empirical = batch.empirical_pmf();
    std::vector<double> exact;
    if (a.m <= kExactLimit) {
        const auto pmf = build_pmf(a.m);
        const auto view = pmf.float_view();
        exact.assign(view.begin(), view.end());
    } else {
        exact = pmf_float(a.m);
    }

    int status = kPass;
    if (batch.pair_violations)
        violation(status, std::to_string(batch.pair_violations) + " paths with X_{2j-1} != X_{2j}");
    if (batch.odd_t_paths)
        violation(status, std::to_string(batch.odd_t_paths) + " paths with odd T_m");
    if (batch.out_of_range)
        violation(status, std::to_string(batch.out_of_range) + " paths with R_m outside [0, m]");
    const double mean_tol = a.mean_sigmas / std::sqrt(static_cast<double>(a.paths));
    const double mean_gap = std::abs(batch.mean_w() - 0.5);
    if (mean_gap > mean_tol)
        violation(status, "|mean W - 1/2| = " + g17(mean_gap) + " > " + g17(mean_tol));

    const auto format = format_or(g, ReportFormat::csv);
    Sink sink(g, "simulate", format);
    auto& os = sink.stream();
    if (format == ReportFormat::csv) {
        os << "k,count,empirical_prob,exact_prob\n";
        for (std::int64_t k = 0; k <= a.m; ++k)
            os << k << ',' << batch.counts[k] << ',' << g17(empirical[k]) << ',' << g17(exact[k]) << '\n';
    } else {
        json rows = json::array();
        for (std::int64_t k = 0; k <= a.m; ++k)
            rows.push_back({{"k", k}, {"count", batch.counts[k]}, {"empirical_prob", empirical[k]},
                            {"exact_prob", exact[k]}});
        json doc{{"version", version_string()},
                 {"m", a.m},
                 {"n_paths", a.paths},
                 {"seed", g.seed},
                 {"orientation", a.orientation},
                 {"rng", batch.rng},
                 {"pair_violations", batch.pair_violations},
                 {"odd_t_paths", batch.odd_t_paths},
                 {"out_of_range", batch.out_of_range},
                 {"mean_w", batch.mean_w()},
                 {"mean_tolerance", mean_tol},
                 {"tv_to_exact", total_variation(empirical, exact)},
                 {"rows", rows}};
        os << doc.dump(2) << '\n';
    }
    sink.close();
    return status;
}

// ---------------------------------------------------------------------------

struct SteinArgs {
    std::int64_t m_min = 1;
    std::int64_t m_max = 16;
    int family_size = 20;
    int discrete_functions = 20;
    std::size_t grid = 1000;
    double tolerance = 1e-8;
};

json audit_json(const BoundsAudit& audit)
{
    json j{{"h_norm", audit.h_norm}, {"sup_f", audit.sup_f}, {"sup_fprime", audit.sup_fprime},
           {"bound", audit.bound}, {"holds", audit.holds}};
    if (audit.median_bound) {
        j["median_bound"] = *audit.median_bound;
        j["median_bound_holds"] = audit.median_bound_holds;
    }
    if (audit.fprime_over_lipschitz)
        j["fprime_over_lipschitz"] = *audit.fprime_over_lipschitz;
    if (audit.fprime_over_sup)
        j["fprime_over_sup"] = *audit.fprime_over_sup;
    return j;
}

int run_stein_check(const Globals& g, const SteinArgs& a)
{
    if (a.m_min < 1 || a.m_max < a.m_min)
        throw ArgumentError("need 1 <= --m-min <= --m-max");
    if (a.m_max > kExactLimit)
        throw ArgumentError("--m-max is limited to " + std::to_string(kExactLimit));
    if (a.family_size < 0 || a.discrete_functions < 1 || a.grid < 10)
        throw ArgumentError("--family-size >= 0, --discrete-functions >= 1, --grid >= 10");
    if (format_or(g, ReportFormat::json) != ReportFormat::json)
        throw ArgumentError("stein-check emits json only");

    int status = kPass;
    json records = json::array();

    for (std::int64_t m = a.m_min; m <= a.m_max; ++m) {
        const auto pmf = build_pmf(m);
        const std::pair<const char*, DiscreteSteinOperator> ops[] = {
            {"lemma", build_discrete_operator(m)},
            {"general c=(k+1)(2(m-k)-1)", build_general_operator(pmf, [m](std::int64_t k) { return c_weight(m, k); })},
            {"general c=1", build_general_operator(pmf, [](std::int64_t) { return Rational(1); })},
        };
        for (const auto& [name, op] : ops) {
            int nonzero = 0;
            for (int s = 0; s < a.discrete_functions; ++s) {
                const auto f = random_discrete_function(m, path_stream_key(g.seed ^ static_cast<std::uint64_t>(m), s));
                if (op.expectation(pmf, f) != 0)
                    ++nonzero;
            }
            if (nonzero)
                violation(status, std::string(name) + " operator: E[Af] != 0 at m=" + std::to_string(m));
            records.push_back({{"kind", "discrete"}, {"m", m}, {"operator", name},
                               {"functions", a.discrete_functions}, {"nonzero_expectations", nonzero},
                               {"holds", nonzero == 0}});
        }
        const double gap = check_continuous_characterization(law_of_w(pmf), functions::smooth_family());
        records.push_back({{"kind", "characterization"}, {"m", m}, {"max_abs_gap", gap}});
    }

    std::vector<TestFunction> family{functions::power(1), functions::power(2), functions::abs_deviation(0.5)};
    for (auto& f : functions::smooth_family())
        family.push_back(std::move(f));
    for (int t = 0; t < a.family_size; ++t)
        family.push_back(functions::random_piecewise_linear(g.seed + static_cast<std::uint64_t>(t)));

    BoundsAuditOptions options;
    options.grid_size = a.grid;
    for (const auto& h : family) {
        const auto sol = solve_stein(h);
        double residual = 0.0;
        for (std::size_t i = 1; i < a.grid; ++i) {
            const double x = static_cast<double>(i) / static_cast<double>(a.grid);
            residual = std::max(residual, std::abs(sol.residual(x, sol.fprime(x))));
        }
        const auto bounded = bounds_audit(sol, BoundKind::bounded, options);
        json record{{"kind", "continuous"}, {"label", h.label}, {"nu_h", sol.nu_h()}, {"max_residual", residual},
                    {"bounded", audit_json(bounded)}};
        if (residual > a.tolerance)
            violation(status, h.label + ": residual " + g17(residual));
        if (!bounded.holds)
            violation(status, h.label + ": sup|f_h| = " + g17(bounded.sup_f) + " > 2 sup|h - nu(h)| = " +
                                  g17(bounded.bound));
        if (std::isfinite(h.lipschitz)) {
            const auto lip = bounds_audit(sol, BoundKind::lipschitz, options);
            record["lipschitz"] = audit_json(lip);
            if (!lip.holds)
                violation(status, h.label + ": sup|f_h| = " + g17(lip.sup_f) + " > 2 ||h'|| = " + g17(lip.bound));
        }
        records.push_back(std::move(record));
    }

    Sink sink(g, "stein-check", ReportFormat::json);
    json doc{{"version", version_string()},
             {"config",
              {{"m_min", a.m_min}, {"m_max", a.m_max}, {"family_size", a.family_size},
               {"discrete_functions", a.discrete_functions}, {"grid", a.grid}, {"tolerance", a.tolerance},
               {"seed", g.seed}}},
             {"pass", status == kPass},
             {"records", records}};
    sink.stream() << doc.dump(2) << '\n';
    sink.close();
    return status;
}

// ---------------------------------------------------------------------------

struct WassersteinArgs {
    std::vector<std::int64_t> m{1, 2, 4, 8, 16, 32, 64};
    std::int64_t oracle_nodes = 100'000;
};

int run_wasserstein(const Globals& g, const WassersteinArgs& a)
{
    if (a.oracle_nodes < 100)
        throw ArgumentError("--oracle-nodes must be >= 100");
    struct Row {
        std::int64_t m;
        double d_w, oracle, lower;
        bool ok;
    };
    std::vector<Row> rows;
    int status = kPass;
    const double slack = 2.0 / static_cast<double>(a.oracle_nodes);
    for (const auto m : a.m) {
        if (m < 1)
            throw ArgumentError("--m values must be >= 1");
        const auto cdf = m <= kExactLimit ? StepCdf::from_pmf(build_pmf(m))
                                          : StepCdf::from_measure(law_of_w(pmf_float(m)));
        const double d_w = w1_to_arcsine(cdf);
        const double oracle = w1_quadrature_oracle(cdf, a.oracle_nodes);
        const DiscreteMeasure measure{cdf.atoms, [&] {
                                          std::vector<double> w(cdf.cum.size());
                                          std::adjacent_difference(cdf.cum.begin(), cdf.cum.end(), w.begin());
                                          return w;
                                      }()};
        const std::vector<TestFunction> family{functions::power(1), functions::abs_deviation(0.5),
                                               optimal_dual_potential(cdf)};
        const double lower = lipschitz_lower_bound(measure, family);
        const bool ok = lower <= d_w + 1e-10 && std::abs(d_w - oracle) <= slack;
        if (!ok)
            violation(status, "m=" + std::to_string(m) + ": lower " + g17(lower) + ", W1 " + g17(d_w) +
                                  ", oracle " + g17(oracle));
        rows.push_back({m, d_w, oracle, lower, ok});
    }

    const auto format = format_or(g, ReportFormat::csv);
    Sink sink(g, "wasserstein", format);
    auto& os = sink.stream();
    if (format == ReportFormat::csv) {
        os << "m,d_w,oracle,lower_bound,holds\n";
        for (const auto& r : rows)
            os << r.m << ',' << g17(r.d_w) << ',' << g17(r.oracle) << ',' << g17(r.lower) << ','
               << (r.ok ? "true" : "false") << '\n';
    } else {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"m", r.m}, {"d_w", r.d_w}, {"oracle", r.oracle}, {"lower_bound", r.lower},
                           {"holds", r.ok}});
        os << json{{"version", version_string()}, {"oracle_nodes", a.oracle_nodes}, {"rows", out}}.dump(2) << '\n';
    }
    sink.close();
    return status;
}

// ---------------------------------------------------------------------------

struct RateArgs {
    std::vector<std::int64_t> grid;
    int min_exp = 1;
    int max_exp = 12;
    std::string mode = "auto";
    std::int64_t exact_limit = kExactLimit;
    std::int64_t mc_paths = 0;
    double plateau_tolerance = 0.05;
};

int run_rate(const Globals& g, const RateArgs& a)
{
    RateConfig config;
    config.grid = a.grid.empty() ? geometric_grid(a.min_exp, a.max_exp) : a.grid;
    config.mode = parse_pmf_mode(a.mode);
    config.exact_limit = a.exact_limit;
    config.mc_paths = a.mc_paths;
    config.seed = g.seed;
    config.plateau_tolerance = a.plateau_tolerance;

    const auto report = run_rate_experiment(config);
    const auto verdict = assess(report, config);
    int status = kPass;
    if (!verdict.monotone)
        violation(status, "d_w is not strictly decreasing along the grid");
    if (!verdict.ratios_ok)
        violation(status, "a doubling ratio d_w(2m)/d_w(m) left the band");
    if (!verdict.plateau_ok)
        violation(status, "m d_w plateau spread " + g17(verdict.plateau_spread));
    std::cerr << "C_hat = " << g17(verdict.c_hat) << ", plateau spread " << g17(verdict.plateau_spread) << '\n';

    const auto format = format_or(g, ReportFormat::csv);
    Sink sink(g, "rate", format);
    if (format == ReportFormat::csv)
        write_csv(report, sink.stream());
    else
        write_json(report, sink.stream());
    sink.close();
    return status;
}

// ---------------------------------------------------------------------------

struct OddArgs {
    std::vector<std::int64_t> m{1, 2, 4, 8, 16, 32, 64};
    std::int64_t paths = 100'000;
};

int run_odd_time(const Globals& g, const OddArgs& a)
{
    const auto report = run_odd_time_check(a.m, a.paths, g.seed);
    int status = kPass;
    for (const auto& r : report.rows) {
        if (!r.within_envelope)
            violation(status, "m=" + std::to_string(r.m) + ": odd-time d_w " + g17(r.mc_d_w_odd) +
                                  " outside envelope " + g17(r.envelope));
        if (!r.path_bound_ok)
            violation(status, "m=" + std::to_string(r.m) + ": per-path deviation " + g17(r.max_path_deviation) +
                                  " > " + g17(r.path_bound));
    }

    const auto format = format_or(g, ReportFormat::csv);
    Sink sink(g, "odd-time", format);
    auto& os = sink.stream();
    if (format == ReportFormat::csv) {
        os << "m,d_w_even,mc_d_w_odd,path_bound,mc_sigma,envelope,max_path_deviation,within_envelope,path_bound_ok\n";
        for (const auto& r : report.rows)
            os << r.m << ',' << g17(r.d_w_even) << ',' << g17(r.mc_d_w_odd) << ',' << g17(r.path_bound) << ','
               << g17(r.mc_sigma) << ',' << g17(r.envelope) << ',' << g17(r.max_path_deviation) << ','
               << (r.within_envelope ? "true" : "false") << ',' << (r.path_bound_ok ? "true" : "false") << '\n';
    } else {
        json rows = json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"m", r.m}, {"d_w_even", r.d_w_even}, {"mc_d_w_odd", r.mc_d_w_odd},
                            {"path_bound", r.path_bound}, {"mc_sigma", r.mc_sigma}, {"envelope", r.envelope},
                            {"max_path_deviation", r.max_path_deviation}, {"within_envelope", r.within_envelope},
                            {"path_bound_ok", r.path_bound_ok}});
        os << json{{"version", version_string()}, {"n_paths", report.n_paths}, {"seed", report.seed},
                   {"rng", kRngDescription}, {"rows", rows}}
                  .dump(2)
           << '\n';
    }
    sink.close();
    return status;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Arcsine-law Stein toolkit: exact Chung-Feller law, Stein solutions, W1 rates."};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(std::string("Without --out, output goes to $") + kOutputDirEnv +
               "/<subcommand>.<csv|json> when that variable is set, otherwise to stdout.");

    Globals g;
    app.add_option("--seed", g.seed, "Master seed");
    app.add_option("--out", g.out, "Output file");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", g.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

    PmfArgs pmf;
    auto* pmf_cmd = app.add_subcommand("pmf", "Law of R_m: k, exact fraction, double");
    pmf_cmd->add_option("--m", pmf.m, "Walk half-length")->required();
    pmf_cmd->add_option("--mode", pmf.mode, "exact | float | auto")->check(CLI::IsMember({"exact", "float", "auto"}));

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo histogram of R_m");
    sim_cmd->add_option("--m", sim.m, "Walk half-length")->capture_default_str();
    sim_cmd->add_option("--paths", sim.paths, "Number of paths")->capture_default_str();
    sim_cmd->add_option("--orientation", sim.orientation, "nonnegative | nonpositive")
        ->check(CLI::IsMember({"nonnegative", "nonpositive"}));
    sim_cmd->add_option("--mean-sigmas", sim.mean_sigmas, "Tolerance for |mean W - 1/2| in units of n^-1/2")
        ->capture_default_str();

    SteinArgs stein;
    auto* stein_cmd = app.add_subcommand("stein-check", "Discrete identities and Stein solution bounds (JSON)");
    stein_cmd->add_option("--m-min", stein.m_min)->capture_default_str();
    stein_cmd->add_option("--m-max", stein.m_max)->capture_default_str();
    stein_cmd->add_option("--family-size", stein.family_size, "Random piecewise-linear h")->capture_default_str();
    stein_cmd->add_option("--discrete-functions", stein.discrete_functions, "Random f per m and operator")
        ->capture_default_str();
    stein_cmd->add_option("--grid", stein.grid, "Audit grid size")->capture_default_str();
    stein_cmd->add_option("--tolerance", stein.tolerance, "Residual tolerance")->capture_default_str();

    WassersteinArgs w1;
    auto* w1_cmd = app.add_subcommand("wasserstein", "W1 to the arcsine law with oracle and lower bound");
    w1_cmd->add_option("--m", w1.m, "One or more m")->expected(1, -1);
    w1_cmd->add_option("--oracle-nodes", w1.oracle_nodes)->capture_default_str();

    RateArgs rate;
    auto* rate_cmd = app.add_subcommand("rate", "m * d_w over a grid of m");
    rate_cmd->add_option("--grid", rate.grid, "Explicit m values")->expected(1, -1);
    rate_cmd->add_option("--min-exp", rate.min_exp, "Geometric grid 2^min..2^max")->capture_default_str();
    rate_cmd->add_option("--max-exp", rate.max_exp)->capture_default_str();
    rate_cmd->add_option("--mode", rate.mode, "exact | float | auto")->check(CLI::IsMember({"exact", "float", "auto"}));
    rate_cmd->add_option("--exact-limit", rate.exact_limit)->capture_default_str();
    rate_cmd->add_option("--mc-paths", rate.mc_paths, "Paths for the simulated estimate (0 = off)")
        ->capture_default_str();
    rate_cmd->add_option("--plateau-tolerance", rate.plateau_tolerance)->capture_default_str();

    OddArgs odd;
    auto* odd_cmd = app.add_subcommand("odd-time", "Simulated d_w at times 2m+1");
    odd_cmd->add_option("--m", odd.m, "One or more m")->expected(1, -1);
    odd_cmd->add_option("--paths", odd.paths)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (g.threads > 0)
            omp_set_num_threads(g.threads);
        if (*pmf_cmd)
            return run_pmf(g, pmf);
        if (*sim_cmd)
            return run_simulate(g, sim);
        if (*stein_cmd)
            return run_stein_check(g, stein);
        if (*w1_cmd)
            return run_wasserstein(g, w1);
        if (*rate_cmd)
            return run_rate(g, rate);
        if (*odd_cmd)
            return run_odd_time(g, odd);
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolation;
    }
    return kUsage;
}
