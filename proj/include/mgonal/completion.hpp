// completion.hpp: one-term completion of near-universal forms. Given a
// sequence that covers 1..m-4, the leading triple picks a single extra
// coefficient that upgrades the form to a (claimed) universal one:
//     (1,1,1) -> 2        (1,2,2) -> 3, or 6 when a_4 = 4
//     (1,1,2) -> 3        (1,2,3) -> 1, or 2 when a_4 = 7
//     (1,1,3) -> 2        (1,2,4) -> 1, or 2 when a_4 = 8
// Audits here are evidence, not proof: reports say "verified up to N",
// never "universal" (no finite check certifies universality).
#pragma once

#include <optional>

#include "mgonal/escalation.hpp"

namespace mgonal {

struct CompletionOutcome {
    i64 appended = 0;   // one of {1, 2, 3, 6}
    int rule = 0;       // case (1)-(6), keyed by the leading triple
    bool special = false;  // the a_4-dependent sub-case fired
    i64 min_m = 0;      // smallest m the case is proved for
};

// Table lookup for the appended coefficient. Throws if the sequence does not
// satisfy the escalation clauses or m is below the case's proved range.
inline CompletionOutcome completion_coefficient(const EscalationSeq& seq) {
    if (!satisfies_escalation(seq.m, seq.coeffs)) {
        throw std::invalid_argument("sequence does not cover 1..m-4");
    }
    const PrefixTriple triple = classify_prefix(seq.coeffs);
    // a_4 keys the special sub-cases; with rank 3 it is absent and the
    // generic value applies.
    const std::optional<i64> a4 = seq.coeffs.size() >= 4
                                      ? std::optional<i64>(seq.coeffs[3])
                                      : std::nullopt;
    CompletionOutcome out;
    if (triple == PrefixTriple{1, 1, 1}) {
        out = {2, 1, false, 8};
    } else if (triple == PrefixTriple{1, 1, 2}) {
        // The source case states no m bound; applied in the m >= 12 regime.
        out = {3, 2, false, 12};
    } else if (triple == PrefixTriple{1, 1, 3}) {
        out = {2, 3, false, 10};
    } else if (triple == PrefixTriple{1, 2, 2}) {
        out = a4 == 4 ? CompletionOutcome{6, 4, true, 10}
                      : CompletionOutcome{3, 4, false, 10};
    } else if (triple == PrefixTriple{1, 2, 3}) {
        out = a4 == 7 ? CompletionOutcome{2, 5, true, 11}
                      : CompletionOutcome{1, 5, false, 11};
    } else {  // (1,2,4)
        out = a4 == 8 ? CompletionOutcome{2, 6, true, 12}
                      : CompletionOutcome{1, 6, false, 12};
    }
    if (seq.m < out.min_m) {
        throw std::domain_error("completion rule not proved below its m bound");
    }
    return out;
}

// The completed form: the input sequence plus the table coefficient,
// re-sorted.
inline Form complete_form(const EscalationSeq& seq) {
    require(seq.m >= 12, "completion needs m >= 12");
    const CompletionOutcome out = completion_coefficient(seq);
    std::vector<i64> coeffs = seq.coeffs;
    coeffs.push_back(out.appended);
    return Form(seq.m, std::move(coeffs));
}

// Coverage audit of the completed form over 1..depth*(m-2);
// missing is expected empty.
inline CoverageReport audit_completion(const EscalationSeq& seq, i64 depth) {
    require(depth >= 1, "audit depth must be positive");
    return check_coverage(complete_form(seq), depth * (seq.m - 2));
}

// Empirical side table: which appended values smaller than the table's also
// leave no gap up to depth*(m-2). Evidence only, no claim attached.
struct ExploreEntry {
    i64 appended = 0;
    bool clean = false;
};

inline std::vector<ExploreEntry> explore_completions(const EscalationSeq& seq,
                                                     i64 depth) {
    require(depth >= 1, "audit depth must be positive");
    const CompletionOutcome out = completion_coefficient(seq);
    std::vector<ExploreEntry> entries;
    for (i64 c = 1; c < out.appended; ++c) {
        std::vector<i64> coeffs = seq.coeffs;
        coeffs.push_back(c);
        const Form candidate(seq.m, std::move(coeffs));
        entries.push_back(
            {c, check_coverage(candidate, depth * (seq.m - 2)).complete()});
    }
    return entries;
}

struct GammaWitness {
    Form form;
    i64 gap = 0;
};

// Searches the escalation stream for a form that covers 1..m-4 but leaves a
// gap within [1, n_max] — an empirical demonstration that covering 1..m-4
// does not imply universality. Returns the first hit in enumeration order.
inline std::optional<GammaWitness> find_gamma_witness(i64 m, int rank_cap,
                                                      i64 n_max) {
    require(m >= 12, "gamma witness search needs m >= 12");
    require(n_max >= 1, "search bound must be positive");
    std::optional<GammaWitness> found;
    for (const auto& seq : enumerate_escalations(m, rank_cap)) {
        const Form form(seq.m, seq.coeffs);
        if (const auto gap = first_gap(form, n_max)) {
            found = GammaWitness{form, *gap};
            break;
        }
    }
    return found;
}

}  // namespace mgonal
