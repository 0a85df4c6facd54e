// bounds.hpp: closed-form rank and count bounds. All logs are computed by
// bit length, never floating point, so powers of two land exactly.
#pragma once

#include <bit>

#include "mgonal/escalation.hpp"

namespace mgonal {

// The minimal count of generalized m-gonal numbers summing to every positive
// integer. The source case list has holes at m = 7 and m = 9; those are
// surfaced as domain errors rather than guessed.
inline i64 ell(i64 m) {
    check_polygon_order(m);
    if (m >= 10) return m - 4;
    switch (m) {
        case 3:
        case 5:
        case 6:
            return 3;
        case 4:
        case 8:
            return 4;
        default:
            throw std::domain_error("ell(m) is not stated for m in {7, 9}");
    }
}

// ceil(log2(m-3)) = bit length of m-4: the minimal rank of a form covering
// 1..m-4 (subset sums of n coefficients under the escalation clauses top out
// at 2^n - 1).
inline int min_rank_escalation(i64 m) {
    require(m >= 8, "escalation rank bound needs m >= 8");
    guard(m <= max_polygon_order, "polygon order exceeds guard");
    return static_cast<int>(std::bit_width(static_cast<u64>(m - 4)));
}

struct RankBound {
    int lower = 0;
    int upper = 0;
    bool exact = false;
};

// Minimal rank of a universal m-gonal form: with k = ceil(log2(m-3)) and
// d = 2^k - m, the bound is exactly k+1 when -3 <= d <= 1 and [k, k+1]
// otherwise. d < -3 cannot happen since k is the ceiling.
inline RankBound min_rank_universal(i64 m) {
    require(m >= 12, "universal rank bound needs m >= 12");
    const int k = min_rank_escalation(m);
    const i64 d = (i64{1} << k) - m;
    if (d < -3) throw std::logic_error("ceiling bound violated");
    if (d <= 1) return {k + 1, k + 1, true};
    return {k, k + 1, false};
}

// Exhaustively confirms that no form of the given rank covers 1..n_max.
// Candidates are the subset-sum-capped lists (a_1 = 1, a_{i+1} <= prefix+1);
// anything outside that space misses 1 or prefix+1 immediately.
inline bool check_rank_lower_bound(i64 m, int rank, i64 n_max) {
    require(m >= 8, "rank bound check needs m >= 8");
    require(rank >= 1, "rank must be positive");
    require(rank < min_rank_escalation(m), "rank is not below the bound");
    require(n_max >= 1, "coverage bound must be positive");

    bool all_gapped = true;
    std::vector<i64> cur{1};
    const std::function<void(i64)> rec = [&](i64 sum) {
        if (!all_gapped) return;
        if (static_cast<int>(cur.size()) == rank) {
            const Form form(m, cur);
            if (check_coverage(form, n_max).complete()) all_gapped = false;
            return;
        }
        for (i64 a = cur.back(); a <= sum + 1; ++a) {
            cur.push_back(a);
            rec(sum + a);
            cur.pop_back();
        }
    };
    rec(1);
    return all_gapped;
}

}  // namespace mgonal
