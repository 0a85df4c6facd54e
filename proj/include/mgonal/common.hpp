// common.hpp: integer guards, exact square roots, and the error types shared
// by every mgonal header. All arithmetic is signed 64-bit; the guard limits
// below keep every intermediate product under 2^62 so nothing can wrap.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mgonal {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Raised when an input would push an intermediate past the 64-bit guard.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr i64 max_polygon_order = i64{1} << 20;  // m
inline constexpr i64 max_index = i64{1} << 20;          // |x|
inline constexpr i64 max_value = i64{1} << 40;          // N, T, 2A+B

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void guard(bool cond, const char* msg) {
    if (!cond) throw overflow_error(msg);
}

inline i64 mod_canon(i64 x, i64 k) {
    i64 r = x % k;
    return r < 0 ? r + k : r;
}

// floor(sqrt(n)) for 0 <= n < 2^62, exact.
inline i64 isqrt(i64 n) {
    require(n >= 0, "isqrt: negative argument");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// 128-bit variant for discriminants that can exceed 2^62.
inline u128 isqrt128(u128 n) {
    if (n == 0) return 0;
    auto r = static_cast<u128>(static_cast<u64>(sqrtl(static_cast<long double>(n))));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace mgonal
