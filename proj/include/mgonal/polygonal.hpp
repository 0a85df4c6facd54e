// polygonal.hpp: exact evaluation and recognition of generalized m-gonal
// numbers P_m(x) = ((m-2)x^2 - (m-4)x) / 2. "Generalized" admits x <= 0;
// the value sequence at fixed m >= 5 is 0, 1, m-3, m, 3m-6, ...
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mgonal/common.hpp"

namespace mgonal {

inline void check_polygon_order(i64 m) {
    require(m >= 3, "polygon order must be at least 3");
    guard(m <= max_polygon_order, "polygon order exceeds guard");
}

namespace detail {
// No guards; caller ensures (m-2)*x*x stays below 2^62.
inline i64 eval_polygonal_raw(i64 m, i64 x) {
    return ((m - 2) * x * x - (m - 4) * x) / 2;
}
}  // namespace detail

inline i64 eval_polygonal(i64 m, i64 x) {
    check_polygon_order(m);
    guard(x >= -max_index && x <= max_index, "gonal index exceeds guard");
    // (m-2)x^2 - (m-4)x = (m-2)x(x-1) + 2x is always even and nonnegative.
    return detail::eval_polygonal_raw(m, x);
}

// Inverse of eval_polygonal: the index x of smallest |x| with P_m(x) = n,
// positive on ties, or nullopt when n is not a generalized m-gonal number.
// Solves the quadratic with an exact integer square root.
inline std::optional<i64> is_generalized_polygonal(i64 m, i64 n) {
    check_polygon_order(m);
    require(n >= 0, "value must be nonnegative");
    guard(n <= max_value, "value exceeds guard");
    if (n == 0) return 0;

    // (m-2)x^2 - (m-4)x - 2n = 0  =>  x = ((m-4) +- sqrt(D)) / (2(m-2))
    u128 d = static_cast<u128>((m - 4) * (m - 4)) +
             static_cast<u128>(8) * static_cast<u128>(m - 2) * static_cast<u128>(n);
    u128 s = isqrt128(d);
    if (s * s != d) return std::nullopt;

    std::optional<i64> best;
    for (int sign : {+1, -1}) {
        i128 num = static_cast<i128>(m - 4) + sign * static_cast<i128>(s);
        i128 den = 2 * static_cast<i128>(m - 2);
        if (num % den != 0) continue;
        i64 x = static_cast<i64>(num / den);
        if (detail::eval_polygonal_raw(m, x) != n) continue;
        if (!best || std::abs(x) < std::abs(*best) ||
            (std::abs(x) == std::abs(*best) && x > *best)) {
            best = x;
        }
    }
    return best;
}

// Distinct generalized m-gonal values <= cap, sorted ascending (0 included).
inline std::vector<i64> polygonal_values_up_to(i64 m, i64 cap) {
    check_polygon_order(m);
    std::vector<i64> values;
    for (i64 k = 0;; ++k) {
        i64 up = detail::eval_polygonal_raw(m, k);
        i64 down = detail::eval_polygonal_raw(m, -k);
        if (k > 0 && up > cap && down > cap) break;
        if (up <= cap) values.push_back(up);
        if (k > 0 && down <= cap) values.push_back(down);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

}  // namespace mgonal
