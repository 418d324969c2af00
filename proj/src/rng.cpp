#include "trapmix/rng.hpp"

#include <stdexcept>

namespace trapmix {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t value) {
    // splitmix64 finalizer (Steele, Lea, Flood 2014).
    std::uint64_t z = value + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
        sm += 0x9E3779B97F4A7C15ULL;
        word = mix_seed(sm);
    }
    // xoshiro state must not be all zero.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
        state_[0] = 1;
    }
}

std::uint64_t RandomStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::size_t RandomStream::draw_index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("draw_index: n must be positive");
    }
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) {
            return static_cast<std::size_t>(r % bound);
        }
    }
}

bool RandomStream::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("bernoulli: probability must lie in [0, 1]");
    }
    return uniform01() < p;
}

RandomStream RandomStream::child(std::uint64_t label) const {
    return RandomStream(mix_seed(seed_ ^ mix_seed(label)));
}

}  // namespace trapmix
