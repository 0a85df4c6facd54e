// escalation.hpp: coefficient-sequence structure of forms that represent
// every positive integer up to m-4. Because the smallest generalized m-gonal
// number after 0 and 1 is m-3, any value <= m-4 forces every index into
// {0,1}, so covering 1..m-4 is a subset-sum question. A sorted list
// a_1 <= ... <= a_n covers it exactly when
//     a_1 = 1,
//     a_{i+1} <= a_1+...+a_i+1   while a_1+...+a_i < m-4,
//     a_1+...+a_n >= m-4,
// and for m >= 12 the leading triple is then one of
//     (1,1,1) (1,1,2) (1,1,3) (1,2,2) (1,2,3) (1,2,4).
#pragma once

#include <array>
#include <functional>
#include <set>

#include "mgonal/coupled.hpp"

namespace mgonal {

struct EscalationSeq {
    i64 m = 0;
    std::vector<i64> coeffs;
};

using PrefixTriple = std::array<i64, 3>;

inline constexpr std::array<PrefixTriple, 6> admissible_triples = {{
    {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}}};

namespace detail {
inline void check_sorted_positive(std::span<const i64> coeffs) {
    require(!coeffs.empty(), "coefficient list must be nonempty");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        require(coeffs[i] >= 1, "coefficients must be positive");
        require(i == 0 || coeffs[i - 1] <= coeffs[i], "coefficients must be sorted");
    }
}
}  // namespace detail

// The three clauses above, exactly.
inline bool satisfies_escalation(i64 m, std::span<const i64> coeffs) {
    check_polygon_order(m);
    detail::check_sorted_positive(coeffs);
    if (coeffs[0] != 1) return false;
    i64 prefix = coeffs[0];
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (prefix < m - 4 && coeffs[i] > prefix + 1) return false;
        guard(prefix <= max_value, "coefficient sum exceeds guard");
        prefix += coeffs[i];
    }
    return prefix >= m - 4;
}

// Coverage route to the same answer: does the form represent all of
// 1..m-4? Disagreement with satisfies_escalation is a logic error (the two
// are provably equivalent for m >= 8).
inline bool coverage_equivalence(i64 m, std::span<const i64> coeffs) {
    require(m >= 8, "equivalence argument needs m >= 8");
    const bool structural = satisfies_escalation(m, coeffs);
    const Form form(m, std::vector<i64>(coeffs.begin(), coeffs.end()));
    const bool covered = check_coverage(form, m - 4).complete();
    if (structural != covered) {
        throw std::logic_error("escalation clauses disagree with coverage");
    }
    return covered;
}

// The leading coefficient triple; throws when outside the admissible set.
inline PrefixTriple classify_prefix(std::span<const i64> coeffs) {
    require(coeffs.size() >= 3, "prefix classification needs rank >= 3");
    const PrefixTriple triple = {coeffs[0], coeffs[1], coeffs[2]};
    for (const auto& t : admissible_triples) {
        if (t == triple) return triple;
    }
    throw std::invalid_argument("leading triple outside the admissible set");
}

// Emits every sorted sequence satisfying the escalation clauses with
// n <= max_rank, in lexicographic order (prefixes first), each exactly once.
// Entries are capped at 2^(max_rank-1): while the prefix sum is below m-4
// the clauses already force a_{i+1} <= 2^i, so the cap only trims the
// unconstrained region past the target and keeps the stream finite.
// minimal_only stops extending a branch once the prefix sum reaches m-4,
// i.e. emits exactly the sequences whose last coefficient is needed.
template <class F>
void for_each_escalation(i64 m, int max_rank, bool minimal_only, F&& emit) {
    check_polygon_order(m);
    require(max_rank >= 1 && max_rank <= 40, "max_rank out of range");
    const i64 cap = i64{1} << (max_rank - 1);
    const i64 target = m - 4;
    std::vector<i64> cur;
    cur.reserve(static_cast<std::size_t>(max_rank));

    const std::function<void(i64)> rec = [&](i64 sum) {
        const bool complete = !cur.empty() && sum >= target;
        if (complete) {
            emit(EscalationSeq{m, cur});
            if (minimal_only) return;
        }
        if (static_cast<int>(cur.size()) == max_rank) return;
        if (cur.empty()) {
            cur.push_back(1);
            rec(1);
            cur.pop_back();
            return;
        }
        const i64 lo = cur.back();
        const i64 hi = sum < target ? std::min(sum + 1, cap) : cap;
        for (i64 a = lo; a <= hi; ++a) {
            cur.push_back(a);
            rec(sum + a);
            cur.pop_back();
        }
    };
    rec(0);
}

inline std::vector<EscalationSeq> enumerate_escalations(i64 m, int max_rank,
                                                        bool minimal_only = false) {
    std::vector<EscalationSeq> out;
    for_each_escalation(m, max_rank, minimal_only,
                        [&](const EscalationSeq& seq) { out.push_back(seq); });
    return out;
}

// Harness for the run-propagation argument: if g_values covers enough of a
// window, adding the tail terms must cover the full stretch
// [n_start, n_start + (m-4)]. Verified by direct search over the attainable
// sums of the tail.
inline bool propagate_run(const std::set<i64>& g_values, std::span<const i64> tail,
                          i64 m, i64 n_start) {
    check_polygon_order(m);
    require(n_start >= 1, "window start must be positive");
    const i64 top = n_start + (m - 4);
    const auto tail_attain = attainable_table(m, tail, top);
    for (i64 value = n_start; value <= top; ++value) {
        bool hit = false;
        for (i64 s = 0; s <= value && !hit; ++s) {
            if (tail_attain[static_cast<std::size_t>(s)] && g_values.count(value - s)) {
                hit = true;
            }
        }
        if (!hit) return false;
    }
    return true;
}

// Checks that prefix + <extra> solves the coupled system for the window of
// targets A(m-2) + b0 + offset, offset in [0, width), for every A in
// [a_lo, a_hi]. Returns the uncovered (A, offset) cells, expected empty
// wherever the completion argument needs coverage. Found witnesses are pushed
// through the bridge identity at this m as a consistency check.
inline std::vector<std::pair<i64, i64>> window_coverage(std::span<const i64> prefix,
                                                        i64 extra, i64 m, i64 b0,
                                                        i64 width, i64 a_lo, i64 a_hi) {
    check_polygon_order(m);
    require(extra >= 1, "appended coefficient must be positive");
    require(width >= 1, "window width must be positive");
    require(0 <= a_lo && a_lo <= a_hi, "bad A range");
    std::vector<i64> coeffs(prefix.begin(), prefix.end());
    coeffs.push_back(extra);

    std::vector<std::pair<i64, i64>> uncovered;
    for (i64 a = a_lo; a <= a_hi; ++a) {
        for (i64 offset = 0; offset < width; ++offset) {
            CoupledInstance inst(coeffs, {a, b0 + offset});
            const auto witness = solve_coupled(inst);
            if (!witness) {
                uncovered.emplace_back(a, offset);
            } else {
                connect_to_form(m, inst, *witness);
            }
        }
    }
    return uncovered;
}

}  // namespace mgonal
