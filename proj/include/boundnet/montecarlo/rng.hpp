#pragma once

#include <cstdint>

namespace boundnet::montecarlo {

/// SplitMix64 generator. Deterministic across platforms; used instead of
/// <random> distributions because those are implementation-defined and the
/// experiment contract is byte-identical output for a given seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n > 0. Rejection-sampled so the result is
    /// exactly uniform and platform-independent.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t state_;
};

/// Stream identifiers for the counter-based substream scheme: every
/// (phase, a, b, c, d) tuple owns an independent generator derived purely
/// from the root seed, so trials can be evaluated in any order (or in
/// parallel) with identical results.
enum class StreamPhase : std::uint64_t {
    Layout = 1,  // (n, layout_index, attempt, 0)
    Pattern = 2, // (n, layout_index, activation_size, pattern_index)
};

inline std::uint64_t mix_word(std::uint64_t h, std::uint64_t w) {
    SplitMix64 g(h + 0x9E3779B97F4A7C15ull * (w + 1));
    return g.next();
}

inline SplitMix64 substream(std::uint64_t root, StreamPhase phase,
                            std::uint64_t a, std::uint64_t b,
                            std::uint64_t c, std::uint64_t d) {
    std::uint64_t h = mix_word(root, static_cast<std::uint64_t>(phase));
    h = mix_word(h, a);
    h = mix_word(h, b);
    h = mix_word(h, c);
    h = mix_word(h, d);
    return SplitMix64(h);
}

} // namespace boundnet::montecarlo
