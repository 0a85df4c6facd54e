// criteria.hpp: five explicit representability criteria for the quaternary
// forms <1,1,1,1>, <1,1,1,2>, <1,1,2,3>, <1,1,2,4>, <1,2,2,3>. Each one is a
// sufficient condition on the target (A, B): a congruence clause plus the
// inequality w*A + (w/2)*B - B^2 >= 0, where w is twice the coefficient sum.
// The conditions are sufficient, not necessary: a cell failing the predicate
// may still be solvable. verify_criterion() sweeps the admissible band and
// checks every predicate-true cell against the coupled-system solver.
#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "mgonal/coupled.hpp"
#include "mgonal/parallel.hpp"

namespace mgonal {

enum class CriterionId { c1111, c1112, c1123, c1124, c1223 };

inline constexpr std::array<CriterionId, 5> all_criteria = {
    CriterionId::c1111, CriterionId::c1112, CriterionId::c1123,
    CriterionId::c1124, CriterionId::c1223};

struct CriterionSpec {
    const char* tag;
    std::array<i64, 4> coeffs;
    i64 weight;  // w in the inequality; equals 2 * sum of coefficients
};

inline const CriterionSpec& criterion_spec(CriterionId id) {
    static constexpr std::array<CriterionSpec, 5> specs = {{
        {"c1111", {1, 1, 1, 1}, 8},
        {"c1112", {1, 1, 1, 2}, 10},
        {"c1123", {1, 1, 2, 3}, 14},
        {"c1124", {1, 1, 2, 4}, 16},
        {"c1223", {1, 2, 2, 3}, 16},
    }};
    return specs[static_cast<std::size_t>(id)];
}

inline std::optional<CriterionId> parse_criterion(std::string_view tag) {
    for (CriterionId id : all_criteria) {
        if (tag == criterion_spec(id).tag) return id;
    }
    return std::nullopt;
}

namespace detail {
inline bool weight_inequality(i64 w, i64 a, i64 b) {
    guard(std::abs(a) <= max_value && std::abs(b) <= max_value,
          "criterion target exceeds guard");
    return static_cast<i128>(w) * a + static_cast<i128>(w / 2) * b -
               static_cast<i128>(b) * b >=
           0;
}
}  // namespace detail

// The sufficient condition, evaluated exactly. Residues use nonnegative
// canonical representatives; (A,B) == (0,0) means both components at once.
inline bool criterion_holds(CriterionId id, i64 a, i64 b) {
    const i64 w = criterion_spec(id).weight;
    if (!detail::weight_inequality(w, a, b)) return false;
    switch (id) {
        case CriterionId::c1111:
            return mod_canon(b, 2) == 1;
        case CriterionId::c1112:
            return !(mod_canon(a, 5) == 0 && mod_canon(b, 5) == 0);
        case CriterionId::c1123:
            return !(mod_canon(a, 7) == 0 && mod_canon(b, 7) == 0);
        case CriterionId::c1124:
            return !(mod_canon(a, 2) == 1 && mod_canon(b, 8) == 4) &&
                   !(mod_canon(a, 2) == 0 && mod_canon(b, 8) == 0);
        case CriterionId::c1223:
            return mod_canon(b, 4) != 0;
    }
    return false;  // unreachable
}

inline bool criterion_holds(CriterionId id, const ProgressionTarget& t) {
    return criterion_holds(id, t.a, t.b);
}

// Closed finite interval of B where the inequality can hold at fixed A:
// with h = w/2, B^2 - hB - wA <= 0  <=>  (2B - h)^2 <= h^2 + 4wA.
inline std::pair<i64, i64> admissible_band(CriterionId id, i64 a) {
    require(a >= 0, "A must be nonnegative");
    const i64 w = criterion_spec(id).weight;
    const i64 h = w / 2;
    const i64 s = isqrt(h * h + 4 * w * a);
    // ceil((h-s)/2) and floor((h+s)/2); h-s <= 0 <= h+s.
    const i64 lo = -((s - h) / 2);
    const i64 hi = (h + s) / 2;
    return {lo, hi};
}

struct CriterionSweep {
    CriterionId id{};
    i64 a_max = 0;
    i64 cells_checked = 0;  // predicate-true cells put to the solver
    std::vector<ProgressionTarget> counterexamples;  // expected empty
};

// Sweeps 0 <= A <= a_max over each A's admissible band and records every
// predicate-true cell the solver cannot solve. The grid is partitioned into
// A-stripes across workers; results merge in A order, so output does not
// depend on the worker count.
inline CriterionSweep verify_criterion(CriterionId id, i64 a_max, int workers = 1) {
    require(a_max >= 0, "a_max must be nonnegative");
    const auto& spec = criterion_spec(id);
    const std::vector<i64> coeffs(spec.coeffs.begin(), spec.coeffs.end());

    struct Stripe {
        i64 cells = 0;
        std::vector<ProgressionTarget> bad;
    };
    std::vector<Stripe> stripes(static_cast<std::size_t>(workers));

    run_striped(a_max + 1, workers, [&](i64 stripe, i64 lo, i64 hi) {
        Stripe& out = stripes[static_cast<std::size_t>(stripe)];
        for (i64 a = lo; a < hi; ++a) {
            const auto [b_lo, b_hi] = admissible_band(id, a);
            for (i64 b = b_lo; b <= b_hi; ++b) {
                if (!criterion_holds(id, a, b)) continue;
                ++out.cells;
                CoupledInstance inst(coeffs, {a, b});
                if (!solve_coupled(inst)) out.bad.push_back({a, b});
            }
        }
    });

    CriterionSweep sweep{id, a_max, 0, {}};
    for (const auto& s : stripes) {
        sweep.cells_checked += s.cells;
        sweep.counterexamples.insert(sweep.counterexamples.end(), s.bad.begin(),
                                     s.bad.end());
    }
    return sweep;
}

}  // namespace mgonal
