#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace trapmix {

// Relative tolerance for snapping floating-point ratios that are rational in
// exact arithmetic (e.g. a*(k-z)/b with integer-valued a, b) back onto the
// integer they represent before applying ceil/floor.
inline constexpr double kRationalSnapTolerance = 1e-12;

inline double exact_ceil(double q) {
    double nearest = std::nearbyint(q);
    if (std::abs(q - nearest) <= kRationalSnapTolerance * std::max(1.0, std::abs(q))) {
        return nearest;
    }
    return std::ceil(q);
}

inline double exact_floor(double q) {
    double nearest = std::nearbyint(q);
    if (std::abs(q - nearest) <= kRationalSnapTolerance * std::max(1.0, std::abs(q))) {
        return nearest;
    }
    return std::floor(q);
}

// All reals in CSV output carry 12 significant digits.
inline std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace trapmix
