// serialize.hpp: JSON report builders. Reports are consumed by scripts and
// regression tests, so every object carries "schema":"mgonal/1", field order
// is fixed (ordered_json), and identical inputs give byte-identical output
// regardless of worker count.
#pragma once

#include <json.hpp>

#include "mgonal/bounds.hpp"
#include "mgonal/completion.hpp"
#include "mgonal/criteria.hpp"

namespace mgonal {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_tag = "mgonal/1";

inline json coverage_json(const CoverageReport& report) {
    return json{{"m", report.m},
                {"coeffs", report.coeffs},
                {"checked_up_to", report.checked_up_to},
                {"missing", report.missing}};
}

inline json sweep_json(const CriterionSweep& sweep) {
    json cells = json::array();
    for (const auto& t : sweep.counterexamples) {
        cells.push_back(json{{"A", t.a}, {"B", t.b}});
    }
    return json{{"schema", schema_tag},
                {"criterion", criterion_spec(sweep.id).tag},
                {"a_max", sweep.a_max},
                {"counterexamples", std::move(cells)},
                {"cells_checked", sweep.cells_checked}};
}

inline json rank_json(i64 m) {
    const RankBound bound = min_rank_universal(m);
    return json{{"schema", schema_tag},
                {"m", m},
                {"escalation_rank", min_rank_escalation(m)},
                {"universal_rank",
                 json{{"lower", bound.lower},
                      {"upper", bound.upper},
                      {"exact", bound.exact}}}};
}

inline json escalation_json(const EscalationSeq& seq) {
    return json{{"schema", schema_tag}, {"m", seq.m}, {"coeffs", seq.coeffs}};
}

inline json completion_json(const EscalationSeq& seq, const CompletionOutcome& out,
                            const CoverageReport& audit) {
    return json{{"schema", schema_tag},
                {"m", seq.m},
                {"coeffs", seq.coeffs},
                {"appended", out.appended},
                {"rule", out.rule},
                {"special", out.special},
                {"min_m", out.min_m},
                {"completed", complete_form(seq).coeffs()},
                {"verified_up_to", audit.checked_up_to},
                {"missing", audit.missing}};
}

}  // namespace mgonal
