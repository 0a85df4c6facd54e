// forms.hpp: the m-gonal form <a_1,...,a_n>_m = a_1 P_m(x_1)+...+a_n P_m(x_n)
// and the exhaustive representation engine. Two search paths are provided:
//  - represents(): depth-first witness search, variables in descending
//    coefficient order, per-variable indices enumerated 0, 1, -1, 2, -2, ...
//    so witnesses are reproducible across runs and platforms.
//  - attainable_table()/check_coverage(): dynamic programming over
//    coefficients (set union of shifted copies), the hot path of all audits.
#pragma once

#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mgonal/polygonal.hpp"

namespace mgonal {

class Form {
public:
    Form(i64 m, std::vector<i64> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
        check_polygon_order(m_);
        require(!coeffs_.empty(), "form needs at least one coefficient");
        for (i64 a : coeffs_) {
            require(a >= 1, "coefficients must be positive");
            guard(a <= max_value, "coefficient exceeds guard");
        }
        std::sort(coeffs_.begin(), coeffs_.end());
    }

    i64 order() const noexcept { return m_; }
    const std::vector<i64>& coeffs() const noexcept { return coeffs_; }
    int rank() const noexcept { return static_cast<int>(coeffs_.size()); }

    // "<1,1,2,4>_12"
    std::string name() const {
        std::ostringstream os;
        os << '<';
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ',';
            os << coeffs_[i];
        }
        os << ">_" << m_;
        return os.str();
    }

private:
    i64 m_;
    std::vector<i64> coeffs_;
};

using Witness = std::vector<i64>;

// Sum a_i * P_m(x_i); the value a witness certifies.
inline i64 apply(const Form& form, const Witness& x) {
    require(x.size() == form.coeffs().size(), "witness length mismatch");
    i128 total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += static_cast<i128>(form.coeffs()[i]) *
                 eval_polygonal(form.order(), x[i]);
        guard(total <= static_cast<i128>(4) * max_value, "form value exceeds guard");
    }
    return static_cast<i64>(total);
}

struct CoverageReport {
    i64 m = 0;
    std::vector<i64> coeffs;
    i64 checked_up_to = 0;
    std::vector<i64> missing;  // sorted subset of [1, checked_up_to]

    bool complete() const noexcept { return missing.empty(); }
};

namespace detail {

// Memory guard for the coverage DP; well past any desk-scale audit.
inline constexpr i64 max_coverage_span = i64{1} << 26;

inline bool represents_rec(const Form& form, int idx, i64 rem, Witness& x) {
    const i64 m = form.order();
    const i64 a = form.coeffs()[static_cast<std::size_t>(idx)];
    const i64 budget = rem / a;  // a*P <= rem  <=>  P <= floor(rem/a)
    if (idx == 0) {
        // Last variable in closed form: the quadratic inverse picks the same
        // index the enumeration order would find first (smallest |x|,
        // positive on ties).
        if (rem % a != 0) return false;
        auto inv = is_generalized_polygonal(m, budget);
        if (!inv) return false;
        x[0] = *inv;
        return true;
    }
    for (i64 k = 0;; ++k) {
        const i64 up = eval_polygonal_raw(m, k);
        const i64 down = eval_polygonal_raw(m, -k);
        if (k > 0 && up > budget && down > budget) break;
        if (up <= budget) {
            x[static_cast<std::size_t>(idx)] = k;
            if (represents_rec(form, idx - 1, rem - a * up, x)) return true;
        }
        if (k > 0 && down <= budget) {
            x[static_cast<std::size_t>(idx)] = -k;
            if (represents_rec(form, idx - 1, rem - a * down, x)) return true;
        }
    }
    return false;
}

}  // namespace detail

// Booleans attain[0..cap] marking sums of a_i * P_m(x_i) over the given
// coefficients (coeffs may be empty: only 0 is attainable).
inline std::vector<char> attainable_table(i64 m, std::span<const i64> coeffs, i64 cap) {
    check_polygon_order(m);
    require(cap >= 0, "coverage bound must be nonnegative");
    guard(cap <= detail::max_coverage_span, "coverage range too large");
    std::vector<char> attain(static_cast<std::size_t>(cap) + 1, 0);
    attain[0] = 1;
    for (i64 a : coeffs) {
        const auto values = polygonal_values_up_to(m, cap / a);
        std::vector<char> next = attain;  // the shift by a * 0
        for (i64 v : values) {
            if (v == 0) continue;
            const i64 s = a * v;
            for (i64 idx = s; idx <= cap; ++idx) {
                next[static_cast<std::size_t>(idx)] |=
                    attain[static_cast<std::size_t>(idx - s)];
            }
        }
        attain.swap(next);
    }
    return attain;
}

// Decides F_m(x) = n over the integers; returns the first witness in the
// deterministic search order, or nullopt if n is not represented.
inline std::optional<Witness> represents(const Form& form, i64 n) {
    require(n >= 1, "target must be positive");
    guard(n <= max_value, "target exceeds guard");
    Witness x(form.coeffs().size(), 0);
    if (detail::represents_rec(form, form.rank() - 1, n, x)) return x;
    return std::nullopt;
}

// Exact list of unrepresented integers in [1, t].
inline CoverageReport check_coverage(const Form& form, i64 t) {
    require(t >= 1, "coverage bound must be positive");
    const auto attain = attainable_table(form.order(), form.coeffs(), t);
    CoverageReport report{form.order(), form.coeffs(), t, {}};
    for (i64 v = 1; v <= t; ++v) {
        if (!attain[static_cast<std::size_t>(v)]) report.missing.push_back(v);
    }
    return report;
}

// Smallest unrepresented integer in [1, n_max], or nullopt if fully covered.
inline std::optional<i64> first_gap(const Form& form, i64 n_max) {
    require(n_max >= 1, "search bound must be positive");
    const auto attain = attainable_table(form.order(), form.coeffs(), n_max);
    for (i64 v = 1; v <= n_max; ++v) {
        if (!attain[static_cast<std::size_t>(v)]) return v;
    }
    return std::nullopt;
}

// Sorted list of represented values in [0, t] (0 always present).
inline std::vector<i64> attainable_values(const Form& form, i64 t) {
    const auto attain = attainable_table(form.order(), form.coeffs(), t);
    std::vector<i64> values;
    for (i64 v = 0; v <= t; ++v) {
        if (attain[static_cast<std::size_t>(v)]) values.push_back(v);
    }
    return values;
}

}  // namespace mgonal
