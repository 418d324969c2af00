#include "trapmix/bitstring.hpp"

#include <stdexcept>

namespace trapmix {

BitString BitString::from_string(std::string_view text) {
    BitString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString::from_string: expected only '0' or '1'");
        }
        s.bits_[i] = static_cast<std::uint8_t>(c - '0');
    }
    return s;
}

std::string BitString::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out[i] = static_cast<char>('0' + bits_[i]);
    }
    return out;
}

int unitation(const BitString& s) {
    return unitation_in_range(s, 0, s.size());
}

int unitation_in_range(const BitString& s, std::size_t begin, std::size_t end) {
    int count = 0;
    for (std::size_t i = begin; i < end; ++i) {
        count += s.bit(i);
    }
    return count;
}

BitString block(const BitString& s, std::size_t index, std::size_t block_length) {
    if (block_length == 0 || s.size() % block_length != 0) {
        throw std::invalid_argument("block: length not divisible by block length");
    }
    if (index >= s.size() / block_length) {
        throw std::out_of_range("block: index out of range");
    }
    BitString out(block_length);
    const std::size_t offset = index * block_length;
    for (std::size_t i = 0; i < block_length; ++i) {
        out.set_bit(i, s.bit(offset + i));
    }
    return out;
}

int hamming(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming: length mismatch");
    }
    int distance = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        distance += a.bit(i) != b.bit(i);
    }
    return distance;
}

BitString complement(const BitString& s) {
    BitString out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.set_bit(i, 1 - s.bit(i));
    }
    return out;
}

}  // namespace trapmix
