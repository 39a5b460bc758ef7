#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace airrev {

// Shortest representation that round-trips; keeps reports byte-stable.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

// Integral doubles print without a fractional part.
inline std::string format_rating(double v) {
    if (std::nearbyint(v) == v && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    return format_double(v);
}

}  // namespace airrev
