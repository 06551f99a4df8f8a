#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace arcstein {

enum class PmfMode { exact, floating, automatic };

std::string to_string(PmfMode mode);
PmfMode parse_pmf_mode(const std::string& text);

struct RateConfig {
    std::vector<std::int64_t> grid;
    PmfMode mode = PmfMode::automatic;
    /// Largest m evaluated with exact rationals.
    std::int64_t exact_limit = 2000;
    /// Monte Carlo paths per m for the optional simulated estimate; 0 disables it.
    std::int64_t mc_paths = 0;
    std::uint64_t seed = 0;
    /// Acceptance band for d_w(2m) / d_w(m) once m >= ratio_min_m.
    double ratio_low = 0.45;
    double ratio_high = 0.55;
    std::int64_t ratio_min_m = 256;
    /// m * d_w over the last `plateau_points` grid points must agree to this
    /// relative spread.
    std::size_t plateau_points = 4;
    double plateau_tolerance = 0.05;
};

/// {2^lo, ..., 2^hi}.
std::vector<std::int64_t> geometric_grid(int lo_exponent, int hi_exponent);

struct RateRow {
    std::int64_t m = 0;
    double d_w = 0.0;
    double m_times_dw = 0.0;
    std::string mode; ///< "exact" or "float"
    double wall_time_ms = 0.0;
    std::optional<double> mc_estimate;

    bool operator==(const RateRow&) const = default;
};

struct RateReport {
    std::vector<RateRow> rows;
    nlohmann::ordered_json config_echo = nlohmann::ordered_json::object();
    std::string version;

    /// sup over rows of m * d_w.
    double c_hat() const;

    bool operator==(const RateReport&) const = default;
};

/// d_w(L(W_m), nu) for each grid point, evaluated in parallel over m.
RateReport run_rate_experiment(const RateConfig& config);

struct RateAssessment {
    bool monotone = false;
    bool ratios_ok = false;
    bool plateau_ok = false;
    double plateau_spread = 0.0;
    /// (m, d_w(2m)/d_w(m)) for consecutive doubling grid points.
    std::vector<std::pair<std::int64_t, double>> ratios;
    double c_hat = 0.0;

    bool ok() const { return monotone && ratios_ok && plateau_ok; }
};

RateAssessment assess(const RateReport& report, const RateConfig& config);

struct OddTimeRow {
    std::int64_t m = 0;
    double d_w_even = 0.0;
    double mc_d_w_odd = 0.0;
    double path_bound = 0.0; ///< 2 / (2m + 1)
    double mc_sigma = 0.0;
    double envelope = 0.0;   ///< d_w_even + path_bound + 3 mc_sigma
    double max_path_deviation = 0.0;
    bool within_envelope = false;
    bool path_bound_ok = false;
};

struct OddTimeReport {
    std::vector<OddTimeRow> rows;
    std::int64_t n_paths = 0;
    std::uint64_t seed = 0;

    bool ok() const;
};

/// Simulated d_w at odd times 2m + 1 checked against the even-time value plus
/// the per-path correction 2/(2m+1) and three Monte Carlo standard deviations.
OddTimeReport run_odd_time_check(const std::vector<std::int64_t>& grid, std::int64_t n_paths,
                                 std::uint64_t seed);

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(const std::string& text);

std::string version_string();

/// CSV columns: m,d_w,m_times_dw,mode,wall_time_ms. Doubles use %.17g.
void write_csv(const RateReport& report, std::ostream& out);
void write_json(const RateReport& report, std::ostream& out);
nlohmann::ordered_json to_json(const RateReport& report);

/// Writes to `path`; IoError names the path on failure.
void emit_report(const RateReport& report, ReportFormat format, const std::string& path);

RateReport parse_csv_report(std::istream& in);
RateReport parse_json_report(std::istream& in);

} // namespace arcstein
