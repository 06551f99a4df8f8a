#include "arcstein/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arcstein/errors.hpp"
#include "arcstein/numeric.hpp"
#include "arcstein/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arcstein {

namespace {

class OccupationCounter {
public:
    explicit OccupationCounter(Orientation orientation) : orientation_(orientation) {}

    void step(int eps)
    {
        const std::int64_t next = position_ + eps;
        const bool x = orientation_ == Orientation::nonnegative ? (position_ >= 0 && next >= 0)
                                                                : (position_ <= 0 && next <= 0);
        ++record_.steps;
        record_.t_all += x ? 1 : 0;
        if (record_.steps % 2 == 0) {
            if (x != previous_)
                record_.pairs_equal = false;
            record_.t_even = record_.t_all;
        } else {
            previous_ = x;
        }
        position_ = next;
    }

    const PathRecord& record() const { return record_; }

private:
    Orientation orientation_;
    std::int64_t position_ = 0;
    bool previous_ = false;
    PathRecord record_;
};

template <class Rng>
PathRecord run_walk(std::int64_t steps, Rng& rng, Orientation orientation)
{
    OccupationCounter counter(orientation);
    std::uint64_t bits = 0;
    int remaining = 0;
    for (std::int64_t i = 0; i < steps; ++i) {
        if (remaining == 0) {
            bits = rng();
            remaining = 64;
        }
        counter.step((bits & 1U) != 0 ? 1 : -1);
        bits >>= 1;
        --remaining;
    }
    return counter.record();
}

void validate(const WalkConfig& config)
{
    if (config.m < 1)
        throw ArgumentError("simulate_batch: m must be positive");
    if (config.n_paths < 1)
        throw ArgumentError("simulate_batch: n_paths must be positive");
    if (config.m + 1 > config.histogram_limit) {
        throw ResourceError("simulate_batch: histogram of " + std::to_string(config.m + 1)
                            + " bins exceeds limit " + std::to_string(config.histogram_limit));
    }
}

WalkBatch empty_batch(const WalkConfig& config)
{
    WalkBatch batch;
    batch.m = config.m;
    batch.n_paths = config.n_paths;
    batch.master_seed = config.master_seed;
    batch.orientation = config.orientation;
    batch.rng = kRngDescription;
    batch.counts.assign(static_cast<std::size_t>(config.m) + 1, 0);
    return batch;
}

/// Accumulates one path into a histogram and its violation tallies.
struct BatchTally {
    std::vector<std::uint64_t> counts;
    std::uint64_t pair_violations = 0;
    std::uint64_t odd_t_paths = 0;
    std::uint64_t out_of_range = 0;
    std::uint64_t sum_r = 0;

    void add(const PathRecord& path, std::int64_t m)
    {
        if (!path.pairs_equal)
            ++pair_violations;
        if (!path.t_is_even())
            ++odd_t_paths;
        const std::int64_t r = path.r();
        if (r < 0 || r > m) {
            ++out_of_range;
            return;
        }
        ++counts[static_cast<std::size_t>(r)];
        sum_r += static_cast<std::uint64_t>(r);
    }

    void merge_into(WalkBatch& batch) const
    {
        for (std::size_t k = 0; k < counts.size(); ++k)
            batch.counts[k] += counts[k];
        batch.pair_violations += pair_violations;
        batch.odd_t_paths += odd_t_paths;
        batch.out_of_range += out_of_range;
        batch.sum_r += sum_r;
    }
};

} // namespace

PathRecord occupation(std::span<const int> steps, Orientation orientation)
{
    OccupationCounter counter(orientation);
    for (int eps : steps) {
        if (eps != 1 && eps != -1)
            throw ArgumentError("walk steps must be +1 or -1");
        counter.step(eps);
    }
    return counter.record();
}

PathRecord simulate_steps(std::int64_t steps, std::uint64_t seed, Orientation orientation)
{
    if (steps < 0)
        throw ArgumentError("simulate_steps: negative length");
    SplitMix64 rng(seed);
    return run_walk(steps, rng, orientation);
}

PathRecord simulate_path(std::int64_t m, std::uint64_t seed, Orientation orientation)
{
    if (m < 1)
        throw ArgumentError("simulate_path: m must be positive");
    return simulate_steps(2 * m, seed, orientation);
}

double WalkBatch::mean_w() const
{
    return static_cast<double>(sum_r) / (static_cast<double>(m) * static_cast<double>(n_paths));
}

std::vector<double> WalkBatch::empirical_pmf() const
{
    std::vector<double> out(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        out[k] = static_cast<double>(counts[k]) / static_cast<double>(n_paths);
    return out;
}

WalkBatch simulate_batch(const WalkConfig& config)
{
    validate(config);
    WalkBatch batch = empty_batch(config);
    const std::int64_t m = config.m;

#pragma omp parallel
    {
        BatchTally local{std::vector<std::uint64_t>(batch.counts.size(), 0)};
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < config.n_paths; ++i) {
            SplitMix64 rng(path_stream_key(config.master_seed, static_cast<std::uint64_t>(i)));
            local.add(run_walk(2 * m, rng, config.orientation), m);
        }
#pragma omp critical(arcstein_walk_merge)
        local.merge_into(batch);
    }
    return batch;
}

namespace serial {

WalkBatch simulate_batch(const WalkConfig& config)
{
    validate(config);
    WalkBatch batch = empty_batch(config);
    BatchTally tally{std::vector<std::uint64_t>(batch.counts.size(), 0)};
    for (std::int64_t i = 0; i < config.n_paths; ++i) {
        SplitMix64 rng(path_stream_key(config.master_seed, static_cast<std::uint64_t>(i)));
        tally.add(run_walk(2 * config.m, rng, config.orientation), config.m);
    }
    tally.merge_into(batch);
    return batch;
}

} // namespace serial

OddTimeBatch simulate_odd_batch(std::int64_t m, std::int64_t n_paths, std::uint64_t master_seed)
{
    validate(WalkConfig{m, n_paths, master_seed});
    OddTimeBatch batch;
    batch.m = m;
    batch.n_paths = n_paths;
    batch.master_seed = master_seed;
    batch.counts.assign(static_cast<std::size_t>(2 * m + 2), 0);
    const double odd_len = static_cast<double>(2 * m + 1);
    const double even_len = static_cast<double>(2 * m);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(batch.counts.size(), 0);
        double local_dev = 0.0;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n_paths; ++i) {
            SplitMix64 rng(path_stream_key(master_seed, static_cast<std::uint64_t>(i)));
            const PathRecord path = run_walk(2 * m + 1, rng, Orientation::nonnegative);
            ++local[static_cast<std::size_t>(path.t_all)];
            const double dev = std::abs(static_cast<double>(path.t_all) / odd_len
                                        - static_cast<double>(path.t_even) / even_len);
            local_dev = std::max(local_dev, dev);
        }
#pragma omp critical(arcstein_odd_merge)
        {
            for (std::size_t j = 0; j < local.size(); ++j)
                batch.counts[j] += local[j];
            batch.max_deviation = std::max(batch.max_deviation, local_dev);
        }
    }
    return batch;
}

double total_variation(std::span<const double> p, std::span<const double> q)
{
    if (p.size() != q.size())
        throw ArgumentError("total_variation: distributions have different support sizes");
    CompensatedSum acc;
    for (std::size_t i = 0; i < p.size(); ++i)
        acc.add(std::abs(p[i] - q[i]));
    return 0.5 * acc.value();
}

double symmetry_check(const WalkBatch& batch_pos, const WalkBatch& batch_neg)
{
    if (batch_pos.m != batch_neg.m)
        throw ArgumentError("symmetry_check: batches have different m");
    if (batch_pos.n_paths != batch_neg.n_paths)
        throw ArgumentError("symmetry_check: batches have different path counts");
    return total_variation(batch_pos.empirical_pmf(), batch_neg.empirical_pmf());
}

std::vector<std::uint64_t> reversed(std::span<const std::uint64_t> counts)
{
    return {counts.rbegin(), counts.rend()};
}

} // namespace arcstein
