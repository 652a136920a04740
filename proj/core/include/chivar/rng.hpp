#ifndef CHIVAR_RNG_HPP
#define CHIVAR_RNG_HPP

#include <cstdint>

namespace chivar {

// Counter-based generator built on the SplitMix64 finalizer.  The i-th value
// of a stream depends only on (seed, i), so samples are reproducible no
// matter how work is split across threads.
//
// Constants are the standard SplitMix64 ones:
//   gamma = 0x9E3779B97F4A7C15  (2^64 / golden ratio)
//   mix   = murmur3-style finalizer with multipliers
//           0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// i-th output of the stream with the given seed.
constexpr std::uint64_t stream_at(std::uint64_t seed, std::uint64_t i) {
    return splitmix64(seed + (i + 1) * kSplitMixGamma);
}

// Child seed for a keyed substream, e.g. derive_seed(base, n, trial).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return stream_at(stream_at(base, a), b);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a) {
    return stream_at(base, a);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double uniform_at(std::uint64_t seed, std::uint64_t i) {
    return static_cast<double>(stream_at(seed, i) >> 11) * 0x1.0p-53;
}

} // namespace chivar

#endif
