#pragma once

#include <cstddef>
#include <span>

namespace fhsforge {

/// Start index of the lexicographically least rotation of a word (the
/// smallest such index when the word is periodic). Two-pointer minimum
/// expression search, linear time.
template <typename T>
std::size_t least_rotation(std::span<const T> w)
{
    const std::size_t n = w.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const T& a = w[(i + k) % n];
        const T& b = w[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j)
            ++j;
        k = 0;
    }
    return i < j ? i : j;
}

/// Smallest t >= 1 with w rotated by t equal to w. Always divides |w|.
template <typename T>
std::size_t rotation_period(std::span<const T> w)
{
    const std::size_t n = w.size();
    for (std::size_t t = 1; t < n; ++t) {
        if (n % t != 0)
            continue;
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i)
            same = w[i] == w[(i + t) % n];
        if (same)
            return t;
    }
    return n;
}

} // namespace fhsforge
