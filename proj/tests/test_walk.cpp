#include "doctest.h"

#include <cmath>
#include <vector>

#include <omp.h>

#include "arcstein/chung_feller.hpp"
#include "arcstein/errors.hpp"
#include "arcstein/walk.hpp"

using namespace arcstein;

namespace {

std::vector<int> steps_from_bits(std::uint64_t bits, int n)
{
    std::vector<int> steps(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        steps[static_cast<std::size_t>(j)] = ((bits >> j) & 1U) != 0 ? 1 : -1;
    return steps;
}

} // namespace

TEST_SUITE("walk")
{
    TEST_CASE("hand traces")
    {
        const std::vector<int> up_up{1, 1};
        const auto a = occupation(up_up);
        CHECK(a.t_even == 2);
        CHECK(a.r() == 1);
        CHECK(a.pairs_equal);

        const std::vector<int> down_up{-1, 1};
        const auto b = occupation(down_up);
        CHECK(b.t_even == 0);
        CHECK(b.r() == 0);

        // S = 1, 0, -1, 0, 1: X = 1, 1, 0, 0, 1
        const std::vector<int> mixed{1, -1, -1, 1, 1};
        const auto c = occupation(mixed);
        CHECK(c.steps == 5);
        CHECK(c.t_all == 3);
        CHECK(c.t_even == 2);

        const std::vector<int> bad{1, 0};
        CHECK_THROWS_AS(occupation(bad), ArgumentError);
    }

    TEST_CASE("pair and parity lemmas hold on every walk up to length 16")
    {
        for (int m = 1; m <= 8; ++m) {
            const std::uint64_t total = std::uint64_t{1} << (2 * m);
            for (std::uint64_t bits = 0; bits < total; ++bits) {
                const auto steps = steps_from_bits(bits, 2 * m);
                const auto pos = occupation(steps);
                const auto neg = occupation(steps, Orientation::nonpositive);
                REQUIRE(pos.pairs_equal);
                REQUIRE(pos.t_is_even());
                REQUIRE(pos.r() >= 0);
                REQUIRE(pos.r() <= m);
                // mirrored indicator is the complement on the same path
                REQUIRE(neg.t_even == 2 * m - pos.t_even);
            }
        }
    }

    TEST_CASE("simulated paths respect the lemmas")
    {
        for (std::uint64_t seed = 0; seed < 2000; ++seed) {
            const auto path = simulate_path(13, seed);
            CHECK(path.steps == 26);
            CHECK(path.pairs_equal);
            CHECK(path.t_is_even());
        }
        CHECK_THROWS_AS(simulate_path(0, 1), ArgumentError);
    }

    TEST_CASE("single path batch")
    {
        const auto batch = simulate_batch({.m = 5, .n_paths = 1, .master_seed = 3});
        std::uint64_t total = 0;
        for (auto c : batch.counts)
            total += c;
        CHECK(total == 1);
        CHECK(batch.counts.size() == 6);
        CHECK_THROWS_AS(simulate_batch({.m = 5, .n_paths = 0}), ArgumentError);
        CHECK_THROWS_AS(simulate_batch({.m = 0, .n_paths = 5}), ArgumentError);
        CHECK_THROWS_AS(simulate_batch({.m = 50, .n_paths = 5, .histogram_limit = 10}), ResourceError);
    }

    TEST_CASE("histograms match the exact law")
    {
        const auto one = simulate_batch({.m = 1, .n_paths = 1'000'000, .master_seed = 11});
        const auto p1 = one.empirical_pmf();
        CHECK(std::abs(p1[0] - 0.5) <= 5e-3);
        CHECK(std::abs(p1[1] - 0.5) <= 5e-3);

        const auto eight = simulate_batch({.m = 8, .n_paths = 1'000'000, .master_seed = 12});
        const auto exact = build_pmf(8);
        const auto view = exact.float_view();
        CHECK(total_variation(eight.empirical_pmf(), std::vector<double>(view.begin(), view.end())) <= 0.005);
        CHECK(eight.pair_violations == 0);
        CHECK(eight.odd_t_paths == 0);
        CHECK(eight.out_of_range == 0);
        CHECK(std::abs(eight.mean_w() - 0.5) <= 5.0 / std::sqrt(1e6));
    }

    TEST_CASE("batches do not depend on the thread count")
    {
        const WalkConfig config{.m = 16, .n_paths = 50'000, .master_seed = 77};
        const auto reference = serial::simulate_batch(config);
        const int saved = omp_get_max_threads();
        for (int threads : {1, 2, 3, 4, 8}) {
            omp_set_num_threads(threads);
            const auto batch = simulate_batch(config);
            CHECK(batch.counts == reference.counts);
            CHECK(batch.sum_r == reference.sum_r);
        }
        omp_set_num_threads(saved);
        CHECK(reference.counts != simulate_batch({.m = 16, .n_paths = 50'000, .master_seed = 78}).counts);
    }

    TEST_CASE("sign symmetry")
    {
        const auto pos = simulate_batch({.m = 1, .n_paths = 1000, .master_seed = 5});
        const auto neg = simulate_batch(
            {.m = 1, .n_paths = 1000, .master_seed = 5, .orientation = Orientation::nonpositive});
        CHECK(pos.counts == reversed(neg.counts));

        const auto a = simulate_batch({.m = 4, .n_paths = 1'000'000, .master_seed = 21});
        const auto b = simulate_batch(
            {.m = 4, .n_paths = 1'000'000, .master_seed = 22, .orientation = Orientation::nonpositive});
        CHECK(symmetry_check(a, b) <= 0.01);

        const auto other = simulate_batch({.m = 3, .n_paths = 1'000'000, .master_seed = 21});
        CHECK_THROWS_AS(symmetry_check(a, other), ArgumentError);
    }

    TEST_CASE("odd-time deviation stays within 2/(2m+1)")
    {
        for (std::int64_t m : {1, 4, 32}) {
            const auto batch = simulate_odd_batch(m, 20'000, 9);
            CHECK(batch.max_deviation <= 2.0 / static_cast<double>(2 * m + 1) + 1e-15);
            std::uint64_t total = 0;
            for (auto c : batch.counts)
                total += c;
            CHECK(total == 20'000);
        }
    }
}
