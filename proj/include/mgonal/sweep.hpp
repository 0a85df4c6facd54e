// sweep.hpp: batch orchestration shared by the CLI and the acceptance suite.
// Sweeps fan out across workers on their outermost dimension and merge in
// enumeration order, so reports are reproducible for any worker count.
#pragma once

#include "mgonal/parallel.hpp"
#include "mgonal/serialize.hpp"

namespace mgonal {

struct AuditRecord {
    EscalationSeq seq;
    CompletionOutcome outcome;
    CoverageReport report;
};

// Completes and audits every minimal escalation sequence for each m in
// [m_lo, m_hi]. rank_cap == 0 uses the per-m default min_rank_escalation + 1
// (the deepest rank a minimal completion input can need).
inline std::vector<AuditRecord> audit_sweep(i64 m_lo, i64 m_hi, int rank_cap,
                                            i64 depth, int workers = 1) {
    require(12 <= m_lo && m_lo <= m_hi, "audit range needs 12 <= m_lo <= m_hi");
    std::vector<AuditRecord> records;
    for (i64 m = m_lo; m <= m_hi; ++m) {
        const int cap = rank_cap > 0 ? rank_cap : min_rank_escalation(m) + 1;
        const auto seqs = enumerate_escalations(m, cap, /*minimal_only=*/true);
        std::vector<AuditRecord> local(seqs.size());
        run_striped(static_cast<i64>(seqs.size()), workers,
                    [&](i64, i64 lo, i64 hi) {
                        for (i64 i = lo; i < hi; ++i) {
                            const auto& seq = seqs[static_cast<std::size_t>(i)];
                            local[static_cast<std::size_t>(i)] = {
                                seq, completion_coefficient(seq),
                                audit_completion(seq, depth)};
                        }
                    });
        records.insert(records.end(), local.begin(), local.end());
    }
    return records;
}

}  // namespace mgonal
