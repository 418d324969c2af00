#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trapmix {

/// Deterministic random stream: xoshiro256** seeded through splitmix64.
///
/// The same seed yields the same sequence on every platform (no reliance on
/// std:: distributions, whose output is implementation-defined). Streams for
/// parallel replications are derived with child(), which mixes (seed, label)
/// into a fresh seed; distinct labels give statistically independent streams.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    // Recorded in experiment output metadata.
    static constexpr const char* kGeneratorId = "xoshiro256ss-v1";

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    /// Fair coin.
    bool next_bool() { return (next_u64() >> 63) != 0; }

    /// Uniform in [0, n). Throws std::invalid_argument if n == 0.
    std::size_t draw_index(std::size_t n);

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// True with probability p. Throws std::invalid_argument if p is outside [0, 1].
    bool bernoulli(double p);

    /// Independent stream derived from this stream's seed and a label.
    RandomStream child(std::uint64_t label) const;

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = draw_index(i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_[4];
};

/// splitmix64 finalizer; also used to derive child seeds.
std::uint64_t mix_seed(std::uint64_t value);

}  // namespace trapmix
