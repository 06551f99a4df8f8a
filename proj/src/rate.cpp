#include "arcstein/rate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "arcstein/chung_feller.hpp"
#include "arcstein/discrete_measure.hpp"
#include "arcstein/errors.hpp"
#include "arcstein/walk.hpp"
#include "arcstein/wasserstein.hpp"

#ifndef ARCSTEIN_VERSION
#define ARCSTEIN_VERSION "0.0.0"
#endif

namespace arcstein {

namespace {

constexpr const char* kCsvHeader = "m,d_w,m_times_dw,mode,wall_time_ms";

void validate_grid(const std::vector<std::int64_t>& grid)
{
    if (grid.empty())
        throw ArgumentError("m grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 1)
            throw ArgumentError("grid entries must be positive, got " + std::to_string(grid[i]));
        if (i > 0 && grid[i] <= grid[i - 1])
            throw ArgumentError("grid must be strictly increasing");
    }
}

bool use_exact(const RateConfig& config, std::int64_t m)
{
    switch (config.mode) {
    case PmfMode::exact:
        return true;
    case PmfMode::floating:
        return false;
    case PmfMode::automatic:
        break;
    }
    return m <= config.exact_limit;
}

double d_w_for(std::int64_t m, bool exact)
{
    if (exact)
        return w1_discrete_vs_arcsine(build_pmf(m));
    return w1_discrete_vs_arcsine(law_of_w(pmf_float(m)));
}

DiscreteMeasure empirical_law(std::span<const std::uint64_t> counts, std::int64_t n_paths)
{
    DiscreteMeasure measure;
    const auto top = static_cast<double>(counts.size() - 1);
    for (std::size_t j = 0; j < counts.size(); ++j) {
        measure.atoms.push_back(static_cast<double>(j) / top);
        measure.weights.push_back(static_cast<double>(counts[j]) / static_cast<double>(n_paths));
    }
    return measure;
}

/// Integral over [0,1] of sqrt(F(1-F)/n) for the empirical step CDF.
double empirical_cdf_sigma(const DiscreteMeasure& measure, std::int64_t n_paths)
{
    const StepCdf cdf = StepCdf::from_measure(measure);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cdf.atoms.size(); ++i) {
        const double c = cdf.cum[i];
        total += (cdf.atoms[i + 1] - cdf.atoms[i]) * std::sqrt(c * (1.0 - c) / static_cast<double>(n_paths));
    }
    return total;
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text)
{
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size())
        throw ArgumentError("malformed number in report: " + text);
    return v;
}

} // namespace

std::string to_string(PmfMode mode)
{
    switch (mode) {
    case PmfMode::exact:
        return "exact";
    case PmfMode::floating:
        return "float";
    case PmfMode::automatic:
        return "auto";
    }
    return "auto";
}

PmfMode parse_pmf_mode(const std::string& text)
{
    if (text == "exact")
        return PmfMode::exact;
    if (text == "float")
        return PmfMode::floating;
    if (text == "auto")
        return PmfMode::automatic;
    throw ArgumentError("unknown pmf mode '" + text + "' (expected exact, float or auto)");
}

ReportFormat parse_report_format(const std::string& text)
{
    if (text == "csv")
        return ReportFormat::csv;
    if (text == "json")
        return ReportFormat::json;
    throw ArgumentError("unknown format '" + text + "' (expected csv or json)");
}

std::string version_string()
{
    return std::string("arcstein ") + ARCSTEIN_VERSION;
}

std::vector<std::int64_t> geometric_grid(int lo_exponent, int hi_exponent)
{
    if (lo_exponent < 0 || hi_exponent < lo_exponent || hi_exponent > 40)
        throw ArgumentError("geometric_grid: need 0 <= lo <= hi <= 40");
    std::vector<std::int64_t> grid;
    for (int e = lo_exponent; e <= hi_exponent; ++e)
        grid.push_back(std::int64_t{1} << e);
    return grid;
}

double RateReport::c_hat() const
{
    double best = 0.0;
    for (const auto& row : rows)
        best = std::max(best, row.m_times_dw);
    return best;
}

RateReport run_rate_experiment(const RateConfig& config)
{
    validate_grid(config.grid);
    if (config.mode == PmfMode::exact && config.grid.back() > config.exact_limit) {
        throw ArgumentError("exact mode supports m <= " + std::to_string(config.exact_limit)
                            + ", grid reaches " + std::to_string(config.grid.back()));
    }

    RateReport report;
    report.version = version_string();
    report.config_echo["grid"] = config.grid;
    report.config_echo["mode"] = to_string(config.mode);
    report.config_echo["exact_limit"] = config.exact_limit;
    report.config_echo["mc_paths"] = config.mc_paths;
    report.config_echo["seed"] = config.seed;
    report.config_echo["ratio_band"] = {config.ratio_low, config.ratio_high};
    report.config_echo["ratio_min_m"] = config.ratio_min_m;
    report.config_echo["plateau_points"] = config.plateau_points;
    report.config_echo["plateau_tolerance"] = config.plateau_tolerance;
    report.rows.resize(config.grid.size());

    const auto n = static_cast<std::int64_t>(config.grid.size());
    std::string failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t m = config.grid[static_cast<std::size_t>(i)];
        RateRow& row = report.rows[static_cast<std::size_t>(i)];
        try {
            const auto start = std::chrono::steady_clock::now();
            const bool exact = use_exact(config, m);
            row.m = m;
            row.mode = exact ? "exact" : "float";
            row.d_w = d_w_for(m, exact);
            row.m_times_dw = static_cast<double>(m) * row.d_w;
            if (config.mc_paths > 0) {
                const WalkBatch batch = simulate_batch({m, config.mc_paths, config.seed});
                row.mc_estimate = w1_discrete_vs_arcsine(empirical_law(batch.counts, batch.n_paths));
            }
            row.wall_time_ms = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        } catch (const std::exception& e) {
#pragma omp critical(arcstein_rate_failure)
            if (failure.empty())
                failure = "m=" + std::to_string(m) + ": " + e.what();
        }
    }
    if (!failure.empty())
        throw ResourceError("rate experiment failed at " + failure);
    return report;
}

RateAssessment assess(const RateReport& report, const RateConfig& config)
{
    RateAssessment out;
    out.c_hat = report.c_hat();
    out.monotone = true;
    out.ratios_ok = true;
    for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
        const auto& a = report.rows[i];
        const auto& b = report.rows[i + 1];
        if (!(b.d_w < a.d_w))
            out.monotone = false;
        if (b.m == 2 * a.m) {
            const double ratio = b.d_w / a.d_w;
            out.ratios.emplace_back(a.m, ratio);
            if (a.m >= config.ratio_min_m && (ratio < config.ratio_low || ratio > config.ratio_high))
                out.ratios_ok = false;
        }
    }
    for (const auto& row : report.rows) {
        if (!(row.d_w > 0.0))
            out.monotone = false;
    }

    const std::size_t k = std::min(config.plateau_points, report.rows.size());
    if (k == 0) {
        out.plateau_ok = false;
        return out;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = report.rows.size() - k; i < report.rows.size(); ++i) {
        lo = std::min(lo, report.rows[i].m_times_dw);
        hi = std::max(hi, report.rows[i].m_times_dw);
    }
    out.plateau_spread = (hi - lo) / hi;
    out.plateau_ok = std::isfinite(out.c_hat) && out.plateau_spread <= config.plateau_tolerance;
    return out;
}

bool OddTimeReport::ok() const
{
    return std::all_of(rows.begin(), rows.end(),
                       [](const OddTimeRow& r) { return r.within_envelope && r.path_bound_ok; });
}

OddTimeReport run_odd_time_check(const std::vector<std::int64_t>& grid, std::int64_t n_paths,
                                 std::uint64_t seed)
{
    validate_grid(grid);
    if (n_paths < 1)
        throw ArgumentError("odd-time check needs at least one path");
    OddTimeReport report;
    report.n_paths = n_paths;
    report.seed = seed;
    for (std::int64_t m : grid) {
        OddTimeRow row;
        row.m = m;
        row.d_w_even = d_w_for(m, m <= 2000);
        const OddTimeBatch batch = simulate_odd_batch(m, n_paths, seed);
        const DiscreteMeasure law = empirical_law(batch.counts, n_paths);
        row.mc_d_w_odd = w1_discrete_vs_arcsine(law);
        row.path_bound = 2.0 / static_cast<double>(2 * m + 1);
        row.mc_sigma = empirical_cdf_sigma(law, n_paths);
        row.envelope = row.d_w_even + row.path_bound + 3.0 * row.mc_sigma;
        row.max_path_deviation = batch.max_deviation;
        row.within_envelope = row.mc_d_w_odd <= row.envelope;
        row.path_bound_ok = batch.max_deviation <= row.path_bound + 1e-15;
        report.rows.push_back(row);
    }
    return report;
}

void write_csv(const RateReport& report, std::ostream& out)
{
    out << kCsvHeader << '\n';
    for (const auto& row : report.rows) {
        out << row.m << ',' << format_double(row.d_w) << ',' << format_double(row.m_times_dw) << ','
            << row.mode << ',' << format_double(row.wall_time_ms) << '\n';
    }
}

nlohmann::ordered_json to_json(const RateReport& report)
{
    nlohmann::ordered_json doc;
    doc["version"] = report.version;
    doc["config"] = report.config_echo;
    doc["c_hat"] = report.c_hat();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["m"] = row.m;
        r["d_w"] = row.d_w;
        r["m_times_dw"] = row.m_times_dw;
        r["mode"] = row.mode;
        r["wall_time_ms"] = row.wall_time_ms;
        if (row.mc_estimate)
            r["mc_estimate"] = *row.mc_estimate;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

void write_json(const RateReport& report, std::ostream& out)
{
    out << to_json(report).dump(2) << '\n';
}

void emit_report(const RateReport& report, ReportFormat format, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open report destination " + path);
    if (format == ReportFormat::csv)
        write_csv(report, out);
    else
        write_json(report, out);
    out.flush();
    if (!out)
        throw IoError("failed writing report to " + path);
}

RateReport parse_csv_report(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw ArgumentError("CSV report must start with header '" + std::string(kCsvHeader) + "'");
    RateReport report;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw ArgumentError("CSV report row has " + std::to_string(fields.size()) + " fields");
        RateRow row;
        row.m = std::stoll(fields[0]);
        row.d_w = parse_double(fields[1]);
        row.m_times_dw = parse_double(fields[2]);
        row.mode = fields[3];
        row.wall_time_ms = parse_double(fields[4]);
        report.rows.push_back(std::move(row));
    }
    return report;
}

RateReport parse_json_report(std::istream& in)
{
    const auto doc = nlohmann::ordered_json::parse(in);
    RateReport report;
    report.version = doc.at("version").get<std::string>();
    report.config_echo = doc.at("config");
    for (const auto& r : doc.at("rows")) {
        RateRow row;
        row.m = r.at("m").get<std::int64_t>();
        row.d_w = r.at("d_w").get<double>();
        row.m_times_dw = r.at("m_times_dw").get<double>();
        row.mode = r.at("mode").get<std::string>();
        row.wall_time_ms = r.at("wall_time_ms").get<double>();
        if (r.contains("mc_estimate"))
            row.mc_estimate = r.at("mc_estimate").get<double>();
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace arcstein
