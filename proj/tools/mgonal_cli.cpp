// mgonal: batch front end for the m-gonal form toolkit. One subcommand per
// library operation; reports in text, JSON (one object per line), or CSV.
// Exit codes: 0 success / nothing missing, 1 counterexamples or gaps found,
// 2 bad configuration or input, 3 overflow guard tripped.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "mgonal/mgonal.hpp"

namespace {

using mgonal::i64;
using mgonal::json;

enum class Format { text, json_lines, csv };

struct CommonOpts {
    bool as_json = false;
    bool as_csv = false;
    int workers = 1;

    Format format() const {
        if (as_json) return Format::json_lines;
        if (as_csv) return Format::csv;
        return Format::text;
    }
};

std::string join(const std::vector<i64>& values, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::pair<i64, i64> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        throw CLI::ValidationError("--m-range", "expected A..B");
    }
    const i64 lo = std::stoll(text.substr(0, pos));
    const i64 hi = std::stoll(text.substr(pos + 2));
    if (lo > hi) throw CLI::ValidationError("--m-range", "empty range");
    return {lo, hi};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run_eval(i64 m, i64 x, const CommonOpts& opts) {
    const i64 value = mgonal::eval_polygonal(m, x);
    switch (opts.format()) {
        case Format::json_lines:
            emit(json{{"schema", mgonal::schema_tag}, {"m", m}, {"x", x}, {"value", value}});
            break;
        case Format::csv:
            std::cout << "m,x,value\n" << m << ',' << x << ',' << value << "\n";
            break;
        case Format::text:
            std::cout << "P_" << m << "(" << x << ") = " << value << "\n";
            break;
    }
    return 0;
}

int run_check(i64 m, const std::vector<i64>& coeffs, i64 n, const CommonOpts& opts) {
    const mgonal::Form form(m, coeffs);
    const auto witness = mgonal::represents(form, n);
    switch (opts.format()) {
        case Format::json_lines: {
            json j{{"schema", mgonal::schema_tag},
                   {"m", m},
                   {"coeffs", form.coeffs()},
                   {"n", n},
                   {"represented", witness.has_value()}};
            if (witness) j["witness"] = *witness;
            emit(j);
            break;
        }
        case Format::csv:
            std::cout << "m,coeffs,n,represented,witness\n"
                      << m << ",\"" << join(form.coeffs()) << "\"," << n << ','
                      << (witness ? 1 : 0) << ",\""
                      << (witness ? join(*witness) : "") << "\"\n";
            break;
        case Format::text:
            if (witness) {
                std::cout << form.name() << " represents " << n << " at x = ("
                          << join(*witness) << ")\n";
            } else {
                std::cout << form.name() << " does not represent " << n << "\n";
            }
            break;
    }
    return witness ? 0 : 1;
}

int run_cover(i64 m, const std::vector<i64>& coeffs, i64 bound, const CommonOpts& opts) {
    const mgonal::Form form(m, coeffs);
    const auto report = mgonal::check_coverage(form, bound);
    switch (opts.format()) {
        case Format::json_lines: {
            json j{{"schema", mgonal::schema_tag}};
            j.update(mgonal::coverage_json(report));
            emit(j);
            break;
        }
        case Format::csv:
            std::cout << "m,coeffs,checked_up_to,missing_count,missing\n"
                      << m << ",\"" << join(form.coeffs()) << "\"," << bound << ','
                      << report.missing.size() << ",\"" << join(report.missing)
                      << "\"\n";
            break;
        case Format::text:
            if (report.complete()) {
                std::cout << form.name() << " covers 1.." << bound << "\n";
            } else {
                std::cout << form.name() << " misses " << report.missing.size()
                          << " value(s) in 1.." << bound << ": "
                          << join(report.missing) << "\n";
            }
            break;
    }
    return report.complete() ? 0 : 1;
}

int run_solve(const std::vector<i64>& coeffs, i64 a, i64 b, std::optional<i64> m,
              const CommonOpts& opts) {
    const mgonal::CoupledInstance inst(coeffs, {a, b});
    const auto witness = mgonal::solve_coupled(inst);
    std::optional<i64> value;
    if (witness && m) value = mgonal::connect_to_form(*m, inst, *witness);
    switch (opts.format()) {
        case Format::json_lines: {
            json j{{"schema", mgonal::schema_tag},
                   {"coeffs", inst.coeffs()},
                   {"A", a},
                   {"B", b},
                   {"solvable", witness.has_value()}};
            if (witness) j["witness"] = *witness;
            if (value) j["represents"] = *value;
            emit(j);
            break;
        }
        case Format::csv:
            std::cout << "coeffs,A,B,solvable,witness\n"
                      << '"' << join(inst.coeffs()) << "\"," << a << ',' << b << ','
                      << (witness ? 1 : 0) << ",\""
                      << (witness ? join(*witness) : "") << "\"\n";
            break;
        case Format::text:
            if (witness) {
                std::cout << "solvable at x = (" << join(*witness) << ")";
                if (value) std::cout << "; represents A(m-2)+B = " << *value;
                std::cout << "\n";
            } else {
                std::cout << "no integer solution\n";
            }
            break;
    }
    return witness ? 0 : 1;
}

int run_verify_lemma(const std::string& which, i64 a_max, const CommonOpts& opts) {
    std::vector<mgonal::CriterionId> ids;
    if (which == "all") {
        ids.assign(mgonal::all_criteria.begin(), mgonal::all_criteria.end());
    } else if (auto id = mgonal::parse_criterion(which)) {
        ids.push_back(*id);
    } else {
        throw CLI::ValidationError("--criterion",
                                   "expected one of c1111,c1112,c1123,c1124,c1223,all");
    }
    bool clean = true;
    if (opts.format() == Format::csv) {
        std::cout << "criterion,a_max,cells_checked,counterexamples\n";
    }
    for (auto id : ids) {
        const auto sweep = mgonal::verify_criterion(id, a_max, opts.workers);
        clean = clean && sweep.counterexamples.empty();
        switch (opts.format()) {
            case Format::json_lines:
                emit(mgonal::sweep_json(sweep));
                break;
            case Format::csv: {
                std::string cells;
                for (std::size_t i = 0; i < sweep.counterexamples.size(); ++i) {
                    if (i) cells += ';';
                    cells += std::to_string(sweep.counterexamples[i].a) + ":" +
                             std::to_string(sweep.counterexamples[i].b);
                }
                std::cout << mgonal::criterion_spec(id).tag << ',' << a_max << ','
                          << sweep.cells_checked << ",\"" << cells << "\"\n";
                break;
            }
            case Format::text:
                std::cout << mgonal::criterion_spec(id).tag << ": "
                          << sweep.cells_checked << " cells checked, "
                          << sweep.counterexamples.size() << " counterexample(s)\n";
                break;
        }
    }
    return clean ? 0 : 1;
}

int run_escalate(i64 m, int max_rank, bool minimal, const CommonOpts& opts) {
    if (opts.format() == Format::csv) std::cout << "m,coeffs\n";
    mgonal::for_each_escalation(m, max_rank, minimal, [&](const mgonal::EscalationSeq& seq) {
        switch (opts.format()) {
            case Format::json_lines:
                emit(mgonal::escalation_json(seq));
                break;
            case Format::csv:
                std::cout << seq.m << ",\"" << join(seq.coeffs) << "\"\n";
                break;
            case Format::text:
                std::cout << join(seq.coeffs) << "\n";
                break;
        }
    });
    return 0;
}

int run_complete(i64 m, const std::vector<i64>& coeffs, i64 depth, bool explore,
                 const CommonOpts& opts) {
    std::vector<i64> sorted = coeffs;
    std::sort(sorted.begin(), sorted.end());
    const mgonal::EscalationSeq seq{m, sorted};
    const auto outcome = mgonal::completion_coefficient(seq);
    const auto audit = mgonal::audit_completion(seq, depth);
    std::vector<mgonal::ExploreEntry> entries;
    if (explore) entries = mgonal::explore_completions(seq, depth);
    switch (opts.format()) {
        case Format::json_lines: {
            json j = mgonal::completion_json(seq, outcome, audit);
            if (explore) {
                json ex = json::array();
                for (const auto& e : entries) {
                    ex.push_back(json{{"appended", e.appended},
                                      {"checked_up_to", audit.checked_up_to},
                                      {"clean", e.clean}});
                }
                j["explore_empirical"] = std::move(ex);
            }
            emit(j);
            break;
        }
        case Format::csv:
            std::cout << "m,coeffs,appended,rule,special,completed,verified_up_to,"
                         "missing_count\n"
                      << m << ",\"" << join(seq.coeffs) << "\"," << outcome.appended
                      << ',' << outcome.rule << ',' << (outcome.special ? 1 : 0)
                      << ",\"" << join(mgonal::complete_form(seq).coeffs()) << "\","
                      << audit.checked_up_to << ',' << audit.missing.size() << "\n";
            break;
        case Format::text: {
            std::cout << "append " << outcome.appended << " (rule " << outcome.rule
                      << (outcome.special ? ", special a_4 case" : "") << ") -> "
                      << mgonal::complete_form(seq).name() << "\n";
            if (audit.complete()) {
                std::cout << "verified: no gaps up to " << audit.checked_up_to << "\n";
            } else {
                std::cout << "GAPS up to " << audit.checked_up_to << ": "
                          << join(audit.missing) << "\n";
            }
            for (const auto& e : entries) {
                std::cout << "explore (empirical): appending " << e.appended
                          << (e.clean ? " also leaves no gap up to "
                                      : " leaves gaps up to ")
                          << audit.checked_up_to << "\n";
            }
            break;
        }
    }
    return audit.complete() ? 0 : 1;
}

int run_audit(const std::string& range, int rank_cap, i64 depth, const CommonOpts& opts) {
    const auto [m_lo, m_hi] = parse_range(range);
    const auto records = mgonal::audit_sweep(m_lo, m_hi, rank_cap, depth, opts.workers);
    std::size_t failures = 0;
    if (opts.format() == Format::csv) {
        std::cout << "m,coeffs,appended,rule,verified_up_to,missing_count\n";
    }
    for (const auto& rec : records) {
        if (!rec.report.complete()) ++failures;
        switch (opts.format()) {
            case Format::json_lines:
                emit(mgonal::completion_json(rec.seq, rec.outcome, rec.report));
                break;
            case Format::csv:
                std::cout << rec.seq.m << ",\"" << join(rec.seq.coeffs) << "\","
                          << rec.outcome.appended << ',' << rec.outcome.rule << ','
                          << rec.report.checked_up_to << ','
                          << rec.report.missing.size() << "\n";
                break;
            case Format::text:
                if (!rec.report.complete()) {
                    std::cout << "FAIL m=" << rec.seq.m << " (" << join(rec.seq.coeffs)
                              << ") + " << rec.outcome.appended << ": gaps "
                              << join(rec.report.missing) << "\n";
                }
                break;
        }
    }
    switch (opts.format()) {
        case Format::json_lines:
            emit(json{{"schema", mgonal::schema_tag},
                      {"m_lo", m_lo},
                      {"m_hi", m_hi},
                      {"sequences_audited", records.size()},
                      {"failures", failures}});
            break;
        case Format::csv:
            break;
        case Format::text:
            std::cout << records.size() << " sequence(s) audited, " << failures
                      << " failure(s)\n";
            break;
    }
    return failures == 0 ? 0 : 1;
}

int run_rank(std::optional<i64> m, const std::string& range, const CommonOpts& opts) {
    i64 lo, hi;
    if (m) {
        lo = hi = *m;
    } else {
        std::tie(lo, hi) = parse_range(range);
    }
    if (opts.format() == Format::csv) {
        std::cout << "m,escalation_rank,universal_lower,universal_upper,exact\n";
    }
    for (i64 mm = lo; mm <= hi; ++mm) {
        const auto bound = mgonal::min_rank_universal(mm);
        switch (opts.format()) {
            case Format::json_lines:
                emit(mgonal::rank_json(mm));
                break;
            case Format::csv:
                std::cout << mm << ',' << mgonal::min_rank_escalation(mm) << ','
                          << bound.lower << ',' << bound.upper << ','
                          << (bound.exact ? 1 : 0) << "\n";
                break;
            case Format::text:
                std::cout << "m=" << mm
                          << ": escalation rank " << mgonal::min_rank_escalation(mm)
                          << ", universal rank ";
                if (bound.exact) {
                    std::cout << bound.lower << " (exact)\n";
                } else {
                    std::cout << "[" << bound.lower << ", " << bound.upper << "]\n";
                }
                break;
        }
    }
    return 0;
}

int run_gamma(i64 m, int rank_cap, i64 n_max, const CommonOpts& opts) {
    const auto witness = mgonal::find_gamma_witness(m, rank_cap, n_max);
    switch (opts.format()) {
        case Format::json_lines: {
            json j{{"schema", mgonal::schema_tag},
                   {"m", m},
                   {"rank_cap", rank_cap},
                   {"n_max", n_max},
                   {"found", witness.has_value()}};
            if (witness) {
                j["coeffs"] = witness->form.coeffs();
                j["gap"] = witness->gap;
            }
            emit(j);
            break;
        }
        case Format::csv:
            std::cout << "m,rank_cap,n_max,found,coeffs,gap\n"
                      << m << ',' << rank_cap << ',' << n_max << ','
                      << (witness ? 1 : 0) << ",\""
                      << (witness ? join(witness->form.coeffs()) : "") << "\","
                      << (witness ? std::to_string(witness->gap) : "") << "\n";
            break;
        case Format::text:
            if (witness) {
                std::cout << witness->form.name() << " covers 1.." << m - 4
                          << " but misses " << witness->gap << "\n";
            } else {
                std::cout << "no gap witness within the searched space\n";
            }
            break;
    }
    return witness ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-gonal form toolkit: representability, coupled systems, "
                 "escalation, completion, rank bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_flag("--json", opts.as_json, "emit one JSON object per line");
    app.add_flag("--csv", opts.as_csv, "emit CSV");
    app.add_option("--workers", opts.workers, "worker thread count")
        ->envname("MGONAL_WORKERS")
        ->check(CLI::PositiveNumber);

    i64 m = 0, x = 0, n = 0, a = 0, b = 0, a_max = 300, n_max = 1000, depth = 20;
    std::vector<i64> coeffs;
    std::string criterion = "all", m_range;
    int max_rank = 0, rank_cap = 0;
    bool minimal = false, explore = false;
    std::optional<i64> opt_m;

    auto* eval = app.add_subcommand("eval", "evaluate P_m(x)");
    eval->add_option("--m", m, "polygon order")->required();
    eval->add_option("--x", x, "gonal index")->required();

    auto* check = app.add_subcommand("check", "decide whether a form represents N");
    check->add_option("--m", m, "polygon order")->required();
    check->add_option("--coeffs", coeffs, "coefficients")->required()->delimiter(',');
    check->add_option("--n", n, "target value")->required();

    auto* cover = app.add_subcommand("cover", "list unrepresented values in 1..N");
    cover->add_option("--m", m, "polygon order")->required();
    cover->add_option("--coeffs", coeffs, "coefficients")->required()->delimiter(',');
    cover->add_option("--n-max", n_max, "coverage bound")->required();

    auto* solve = app.add_subcommand("solve-system",
                                     "solve sum a_k x_k = B, sum a_k x_k^2 = 2A+B");
    solve->add_option("--coeffs", coeffs, "coefficients")->required()->delimiter(',');
    solve->add_option("--a", a, "A (nonnegative)")->required();
    solve->add_option("--b", b, "B (any integer)")->required();
    solve->add_option("--m", opt_m, "report the represented value A(m-2)+B");

    auto* verify = app.add_subcommand("verify-lemma",
                                      "sweep a representability criterion against "
                                      "the coupled solver");
    verify->add_option("--criterion", criterion, "c1111..c1223 or all");
    verify->add_option("--a-max", a_max, "largest A in the sweep");

    auto* escalate = app.add_subcommand("escalate",
                                        "enumerate coefficient sequences covering "
                                        "1..m-4");
    escalate->add_option("--m", m, "polygon order")->required();
    escalate->add_option("--max-rank", max_rank, "rank cap")->required();
    escalate->add_flag("--minimal", minimal, "only minimal-length sequences");

    auto* complete = app.add_subcommand("complete",
                                        "append the completion coefficient and audit");
    complete->add_option("--m", m, "polygon order")->required();
    complete->add_option("--coeffs", coeffs, "coefficients")->required()->delimiter(',');
    complete->add_option("--audit-depth", depth, "audit 1..depth*(m-2)");
    complete->add_flag("--explore", explore,
                       "also audit smaller appended values (empirical)");

    auto* audit = app.add_subcommand("audit",
                                     "complete and audit every minimal sequence "
                                     "over an m range");
    audit->add_option("--m-range", m_range, "range A..B")->required();
    audit->add_option("--rank-cap", rank_cap, "rank cap (default: per-m minimum + 1)");
    audit->add_option("--audit-depth", depth, "audit 1..depth*(m-2)");

    auto* rank = app.add_subcommand("rank", "closed-form rank bounds");
    rank->add_option("--m", opt_m, "polygon order");
    rank->add_option("--m-range", m_range, "range A..B");

    auto* gamma = app.add_subcommand("gamma-witness",
                                     "find a form covering 1..m-4 with a gap above");
    gamma->add_option("--m", m, "polygon order")->required();
    gamma->add_option("--rank-cap", rank_cap, "enumeration rank cap")->required();
    gamma->add_option("--n-max", n_max, "gap search bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) return run_eval(m, x, opts);
        if (*check) return run_check(m, coeffs, n, opts);
        if (*cover) return run_cover(m, coeffs, n_max, opts);
        if (*solve) return run_solve(coeffs, a, b, opt_m, opts);
        if (*verify) return run_verify_lemma(criterion, a_max, opts);
        if (*escalate) return run_escalate(m, max_rank, minimal, opts);
        if (*complete) return run_complete(m, coeffs, depth, explore, opts);
        if (*audit) return run_audit(m_range, rank_cap, depth, opts);
        if (*rank) {
            if (!opt_m && m_range.empty()) {
                throw CLI::ValidationError("rank", "need --m or --m-range");
            }
            return run_rank(opt_m, m_range, opts);
        }
        if (*gamma) return run_gamma(m, rank_cap, n_max, opts);
    } catch (const mgonal::overflow_error& e) {
        std::cerr << "overflow guard: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
