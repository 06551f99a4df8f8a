#pragma once

#include <cstdint>
#include <limits>

namespace arcstein {

/// SplitMix64 finalizer (Steele, Lea & Flood).
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64 stream. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

/// Starting state of the stream for path `path_index` under `master_seed`.
/// Depends only on the pair, so batches are independent of scheduling.
constexpr std::uint64_t path_stream_key(std::uint64_t master_seed, std::uint64_t path_index)
{
    return mix64(mix64(master_seed) ^ (path_index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

inline constexpr const char* kRngDescription =
    "splitmix64; path stream state = mix64(mix64(seed) ^ (index * 0xD1B54A32D192ED03 + 0x8CB92BA72F3D8DD7))";

} // namespace arcstein
