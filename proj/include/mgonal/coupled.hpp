// coupled.hpp: solver for the system
//     a_1 x_1   + ... + a_n x_n   = B
//     a_1 x_1^2 + ... + a_n x_n^2 = 2A + B
// over the integers. Solvability is equivalent to the m-gonal form
// <a_1,...,a_n>_m representing A(m-2)+B, via
//     A(m-2)+B = sum a_k P_m(x_k)
//              = (m-2)/2 * (sum a_k x_k^2 - sum a_k x_k) + sum a_k x_k,
// so one solved instance certifies a representation for every m at once.
//
// Algorithm: meet in the middle. The coefficient list is split into a head
// [0, n/2) and a tail [n/2, n); all (linear, quadratic) sums of the tail are
// tabulated, then head vectors are scanned for a complement. Per-variable
// index bounds come from the quadratic side: |x_k| <= sqrt((2A+B)/a_k).
// Both halves are enumerated in ascending lexicographic order and the first
// complement wins, so witnesses are deterministic.
#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "mgonal/forms.hpp"

namespace mgonal {

// Encodes the integer N = A(m-2) + B once a polygon order m is fixed.
struct ProgressionTarget {
    i64 a = 0;  // A >= 0
    i64 b = 0;  // B is a free integer
};

class CoupledInstance {
public:
    CoupledInstance(std::vector<i64> coeffs, ProgressionTarget target)
        : coeffs_(std::move(coeffs)), target_(target) {
        require(!coeffs_.empty(), "system needs at least one coefficient");
        for (i64 a : coeffs_) require(a >= 1, "coefficients must be positive");
        require(target_.a >= 0, "A must be nonnegative");
        guard(target_.a <= max_value && std::abs(target_.b) <= max_value,
              "target exceeds guard");
    }

    const std::vector<i64>& coeffs() const noexcept { return coeffs_; }
    const ProgressionTarget& target() const noexcept { return target_; }
    i64 linear_target() const noexcept { return target_.b; }
    i64 quadratic_target() const noexcept { return 2 * target_.a + target_.b; }

private:
    std::vector<i64> coeffs_;
    ProgressionTarget target_;
};

namespace detail {

// Enumerates index vectors for the coefficient slice with sum a_k x_k^2 <=
// budget, ascending lexicographic. fn(lin, quad, vec) returns false to stop.
template <class F>
bool enumerate_half(std::span<const i64> coeffs, i64 budget, std::vector<i64>& vec,
                    std::size_t k, i64 lin, i64 quad, F&& fn) {
    if (k == coeffs.size()) return fn(lin, quad, vec);
    const i64 a = coeffs[k];
    const i64 bound = isqrt((budget - quad) / a);
    for (i64 x = -bound; x <= bound; ++x) {
        vec[k] = x;
        if (!enumerate_half(coeffs, budget, vec, k + 1, lin + a * x,
                            quad + a * x * x, fn)) {
            return false;
        }
    }
    vec[k] = 0;
    return true;
}

}  // namespace detail

// Solves the coupled system; nullopt when no integer solution exists.
inline std::optional<Witness> solve_coupled(const CoupledInstance& inst) {
    const i64 b = inst.linear_target();
    const i64 q = inst.quadratic_target();
    if (q < 0) return std::nullopt;  // quadratic side is nonnegative

    const auto& coeffs = inst.coeffs();
    const std::size_t n = coeffs.size();

    i64 coeff_sum = 0;
    for (i64 a : coeffs) {
        coeff_sum += a;
        guard(coeff_sum <= max_value, "coefficient sum exceeds guard");
    }
    // Cauchy-Schwarz with weights: (sum a x)^2 <= (sum a)(sum a x^2).
    if (static_cast<i128>(b) * b > static_cast<i128>(coeff_sum) * q) {
        return std::nullopt;
    }

    const std::size_t half = n / 2;
    const std::span<const i64> head(coeffs.data(), half);
    const std::span<const i64> tail(coeffs.data() + half, n - half);

    // Largest |linear sum| the tail can reach within the quadratic budget.
    i64 lin_cap = 0;
    for (i64 a : tail) lin_cap += a * isqrt(q / a);
    guard(static_cast<i128>(q + 1) * (2 * lin_cap + 1) < (i128{1} << 62),
          "system targets exceed guard");
    const auto key = [lin_cap](i64 lin, i64 quad) {
        return static_cast<u64>(quad) * static_cast<u64>(2 * lin_cap + 1) +
               static_cast<u64>(lin + lin_cap);
    };

    std::unordered_map<u64, std::vector<i64>> table;
    std::vector<i64> vec(tail.size(), 0);
    detail::enumerate_half(tail, q, vec, 0, 0, 0,
                           [&](i64 lin, i64 quad, const std::vector<i64>& v) {
                               table.try_emplace(key(lin, quad), v);  // first wins
                               return true;
                           });

    std::optional<Witness> found;
    std::vector<i64> hvec(head.size(), 0);
    detail::enumerate_half(head, q, hvec, 0, 0, 0,
                           [&](i64 lin, i64 quad, const std::vector<i64>& v) {
                               const i64 need_lin = b - lin;
                               const i64 need_quad = q - quad;
                               if (need_lin < -lin_cap || need_lin > lin_cap) return true;
                               auto it = table.find(key(need_lin, need_quad));
                               if (it == table.end()) return true;
                               Witness w(v.begin(), v.end());
                               w.insert(w.end(), it->second.begin(), it->second.end());
                               found = std::move(w);
                               return false;
                           });
    return found;
}

// The bridge identity: returns A(m-2)+B and checks it equals
// sum a_k P_m(x_k) for the solving witness. A mismatch is a solver bug.
inline i64 connect_to_form(i64 m, const CoupledInstance& inst, const Witness& w) {
    check_polygon_order(m);
    require(w.size() == inst.coeffs().size(), "witness length mismatch");
    i128 lin = 0, quad = 0, value = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        guard(std::abs(w[k]) <= max_index, "witness entry exceeds guard");
        const i128 a = inst.coeffs()[k];
        const i128 x = w[k];
        lin += a * x;
        quad += a * x * x;
        // 2 P_m(x) = (m-2)x^2 - (m-4)x
        value += a * ((m - 2) * x * x - (m - 4) * x) / 2;
    }
    if (lin != inst.linear_target() || quad != inst.quadratic_target()) {
        throw std::logic_error("witness does not solve the coupled instance");
    }
    const i128 n = static_cast<i128>(inst.target().a) * (m - 2) + inst.target().b;
    if (value != n) {
        throw std::logic_error("bridge identity violated");
    }
    guard(n <= max_value * 4, "represented value exceeds guard");
    return static_cast<i64>(n);
}

}  // namespace mgonal
