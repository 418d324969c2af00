#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trapmix {

/// Fixed-length binary genome. Length is set at construction and never
/// changes; copies are deep (crossover produces new strings, never views).
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t length) : bits_(length, 0) {}

    /// Parses a string of '0'/'1' characters.
    static BitString from_string(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    int bit(std::size_t i) const { return bits_[i]; }
    void set_bit(std::size_t i, int value) { bits_[i] = value ? 1 : 0; }
    void flip_bit(std::size_t i) { bits_[i] ^= 1; }

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Number of 1-bits in s.
int unitation(const BitString& s);

/// Number of 1-bits in positions [begin, end).
int unitation_in_range(const BitString& s, std::size_t begin, std::size_t end);

/// The block_length bits at positions [index*block_length, (index+1)*block_length).
/// Throws if the length is not divisible by block_length or index is out of range.
BitString block(const BitString& s, std::size_t index, std::size_t block_length);

/// Number of differing positions. Throws on length mismatch.
int hamming(const BitString& a, const BitString& b);

BitString complement(const BitString& s);

}  // namespace trapmix
