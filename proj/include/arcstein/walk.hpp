#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arcstein {

/// Which indicator is accumulated: X_j = 1{S_{j-1} >= 0, S_j >= 0} or its
/// mirror 1{S_{j-1} <= 0, S_j <= 0}.
enum class Orientation { nonnegative, nonpositive };

/// Occupation statistics of a single walk of `steps` steps.
struct PathRecord {
    std::int64_t steps = 0;
    /// Sum of X_j over all steps.
    std::int64_t t_all = 0;
    /// T_m: sum of X_j over the first 2 floor(steps/2) steps.
    std::int64_t t_even = 0;
    /// X_{2j-1} == X_{2j} for every complete pair.
    bool pairs_equal = true;

    std::int64_t r() const { return t_even / 2; }
    bool t_is_even() const { return t_even % 2 == 0; }
};

/// Occupation statistics for an explicit step sequence (entries +1 / -1).
PathRecord occupation(std::span<const int> steps, Orientation orientation = Orientation::nonnegative);

/// Walk of 2m steps drawn from the SplitMix64 stream starting at `seed`.
PathRecord simulate_path(std::int64_t m, std::uint64_t seed,
                         Orientation orientation = Orientation::nonnegative);

/// Walk of arbitrary length drawn from the stream starting at `seed`.
PathRecord simulate_steps(std::int64_t steps, std::uint64_t seed,
                          Orientation orientation = Orientation::nonnegative);

inline constexpr std::int64_t kDefaultHistogramLimit = 100'000'000;

struct WalkConfig {
    std::int64_t m = 1;
    std::int64_t n_paths = 1;
    std::uint64_t master_seed = 0;
    Orientation orientation = Orientation::nonnegative;
    std::int64_t histogram_limit = kDefaultHistogramLimit;
};

/// Histogram of R_m over a batch of independent paths.
struct WalkBatch {
    std::int64_t m = 0;
    std::int64_t n_paths = 0;
    std::uint64_t master_seed = 0;
    Orientation orientation = Orientation::nonnegative;
    std::string rng;
    std::vector<std::uint64_t> counts; ///< counts[k] = #{paths with R_m = k}
    std::uint64_t pair_violations = 0; ///< paths with some X_{2j-1} != X_{2j}
    std::uint64_t odd_t_paths = 0;     ///< paths with T_m odd
    std::uint64_t out_of_range = 0;    ///< paths with R_m outside [0, m]
    std::uint64_t sum_r = 0;

    double mean_w() const;
    std::vector<double> empirical_pmf() const;
};

/// Parallel over paths (OpenMP). Path i uses the stream
/// path_stream_key(master_seed, i), so the histogram does not depend on the
/// thread count.
WalkBatch simulate_batch(const WalkConfig& config);

namespace serial {
/// Single-threaded reference for simulate_batch.
WalkBatch simulate_batch(const WalkConfig& config);
} // namespace serial

/// Paths of odd length 2m + 1 alongside their even-time prefix.
struct OddTimeBatch {
    std::int64_t m = 0;
    std::int64_t n_paths = 0;
    std::uint64_t master_seed = 0;
    /// counts[j] = #{paths with sum_{i <= 2m+1} X_i = j}, j = 0..2m+1.
    std::vector<std::uint64_t> counts;
    /// max over paths of |T'/(2m+1) - T_m/(2m)|.
    double max_deviation = 0.0;
};

OddTimeBatch simulate_odd_batch(std::int64_t m, std::int64_t n_paths, std::uint64_t master_seed);

double total_variation(std::span<const double> p, std::span<const double> q);

/// TV distance between the two empirical histograms (equal in law under
/// sign symmetry of the walk). Throws ArgumentError on mismatched m or path counts.
double symmetry_check(const WalkBatch& batch_pos, const WalkBatch& batch_neg);

/// Histogram with k mapped to m - k.
std::vector<std::uint64_t> reversed(std::span<const std::uint64_t> counts);

} // namespace arcstein
