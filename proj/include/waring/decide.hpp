#ifndef WARING_DECIDE_HPP
#define WARING_DECIDE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "exactla.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "randcheck.hpp"
#include "slices.hpp"

namespace waring {

enum class Stage { WeaklySingular, SingularT1, Noncommuting, Nondiagonalizable, Accepted };

inline std::string_view to_string(Stage s) {
    switch (s) {
    case Stage::WeaklySingular: return "weakly_singular";
    case Stage::SingularT1: return "singular_t1";
    case Stage::Noncommuting: return "noncommuting";
    case Stage::Nondiagonalizable: return "nondiagonalizable";
    case Stage::Accepted: return "accepted";
    }
    return "unknown";
}

struct DecisionReport {
    bool accepted = false;
    Stage stage = Stage::SingularT1;
    FieldMode mode = FieldMode::Complex;
    SampleConfig cfg;
    std::size_t nvars = 0;
    unsigned degree = 0;
    // Single-trial failure bounds: accept error n(d-1)/|S|, reject error 2(d-2)/|S|.
    double error_bound_positive = 0.0;
    double error_bound_negative = 0.0;
    std::uint64_t oracle_calls = 0;
    std::vector<Stage> trial_stages;
    std::string note;
};

inline double bound_positive(std::size_t n, unsigned d, std::uint64_t set_size) {
    return std::min(1.0, static_cast<double>(n) * (d - 1) / static_cast<double>(set_size));
}
inline double bound_negative(unsigned d, std::uint64_t set_size) {
    return std::min(1.0, 2.0 * (d - 2) / static_cast<double>(set_size));
}

namespace detail {

struct TrialOutcome {
    Stage stage = Stage::SingularT1;
    Matrix change;      // R
    Matrix pencil;      // T1^{-1} T2, set once T1 is invertible
};

// The third distinguished slice for n = 2: the slice of h along a random direction m,
// read off h(M x) with M = [m | e_2] and mapped back by M^{-T} (.) M^{-1}.
inline Matrix random_direction_slice(const Oracle& h, std::uint64_t set_size, RandomStream& rng) {
    Vector m = random_vector(2, set_size, rng);
    Matrix basis{{m[0], Rational{0}}, {m[1], Rational{1}}};
    Matrix s = distinguished_slice(compose_linear(h, basis), 0);
    Matrix inv = invert(basis);
    return inv.transpose() * s * inv;
}

inline TrialOutcome decision_trial(const Oracle& o, FieldMode mode, std::uint64_t set_size, RandomStream& rng) {
    const std::size_t n = o.nvars();
    TrialOutcome out;
    out.change = random_matrix(n, set_size, rng);
    Oracle h = compose_linear(o, out.change);

    Matrix t1 = distinguished_slice(h, 0);
    if (det(t1).is_zero()) {
        out.stage = Stage::SingularT1;
        return out;
    }
    Matrix t1_inv = invert(t1);

    Matrix t2 = n >= 2 ? distinguished_slice(h, 1) : t1;
    Matrix t3 = n >= 3 ? distinguished_slice(h, 2) : (n == 2 ? random_direction_slice(h, set_size, rng) : t1);

    out.pencil = t1_inv * t2;
    if (!commutes(out.pencil, t1_inv * t3)) {
        out.stage = Stage::Noncommuting;
        return out;
    }
    out.stage = is_diagonalizable(out.pencil, mode) ? Stage::Accepted : Stage::Nondiagonalizable;
    return out;
}

inline void check_decidable(const Oracle& o) {
    if (o.degree() < 3) throw DegreeError("decision requires degree at least 3");
    if (o.nvars() == 0) throw DimensionError("decision requires at least one variable");
}

inline DecisionReport make_report(const Oracle& o, FieldMode mode, const SampleConfig& cfg) {
    DecisionReport r;
    r.mode = mode;
    r.cfg = cfg;
    r.nvars = o.nvars();
    r.degree = o.degree();
    r.error_bound_positive = bound_positive(o.nvars(), o.degree(), cfg.set_size);
    r.error_bound_negative = bound_negative(o.degree(), cfg.set_size);
    return r;
}

// Probes a few random points; true when the oracle vanished on all of them.
inline bool looks_zero(const Oracle& o, const SampleConfig& cfg) {
    RandomStream rng(cfg.seed, RandomStream::id(RandomStream::Probe, 0));
    for (int k = 0; k < 3; ++k)
        if (!o(random_vector(o.nvars(), cfg.set_size, rng)).is_zero()) return false;
    return true;
}

// Majority verdict; a rejection reports the most frequent failing stage (earliest on ties).
inline Stage combine_stages(const std::vector<Stage>& stages) {
    std::size_t accepts = std::count(stages.begin(), stages.end(), Stage::Accepted);
    if (2 * accepts > stages.size()) return Stage::Accepted;
    std::array<Stage, 3> order{Stage::SingularT1, Stage::Noncommuting, Stage::Nondiagonalizable};
    Stage best = order[0];
    std::size_t best_count = 0;
    for (auto s : order) {
        auto c = static_cast<std::size_t>(std::count(stages.begin(), stages.end(), s));
        if (c > best_count) {
            best = s;
            best_count = c;
        }
    }
    return best;
}

} // namespace detail

/*
 * Randomized equivalence test against sums of d-th powers of independent linear forms.
 *
 * Each trial draws R from S^{n x n}, forms h = o(R x), reads T1, T2, T3 of h from the
 * oracle and accepts iff T1 is invertible, T1^{-1}T2 and T1^{-1}T3 commute and
 * T1^{-1}T2 is diagonalizable over the field selected by `mode`. Trial k draws from
 * stream (ChangeOfBasis, k).
 */
inline DecisionReport decide_equiv(const Oracle& o, FieldMode mode, const SampleConfig& cfg = {}) {
    cfg.validate();
    detail::check_decidable(o);
    DecisionReport report = detail::make_report(o, mode, cfg);
    const std::uint64_t calls_before = o.calls();
    for (unsigned t = 0; t < cfg.trials; ++t) {
        RandomStream rng(cfg.seed, RandomStream::id(RandomStream::ChangeOfBasis, t));
        report.trial_stages.push_back(detail::decision_trial(o, mode, cfg.set_size, rng).stage);
    }
    report.stage = detail::combine_stages(report.trial_stages);
    report.accepted = report.stage == Stage::Accepted;
    if (report.stage == Stage::SingularT1 && detail::looks_zero(o, cfg)) report.note = "input vanished at every probe point";
    report.oracle_calls = o.calls() - calls_before;
    return report;
}

namespace detail {

// Cofactor expansion along the first row; entries are polynomials.
inline Poly symbolic_det(const std::vector<std::vector<Poly>>& m, std::size_t nvars) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(nvars, Rational{1});
    if (n == 1) return m[0][0];
    Poly acc(nvars);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][col] * symbolic_det(minor, nvars);
        if (col % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

// det( sum over ordered J of prod lambda_{J_m} S_J ) as a polynomial in lambda_1..lambda_n.
inline Poly weak_singularity_determinant(const SliceFamily& fam) {
    const std::size_t n = fam.n;
    std::vector<std::vector<Poly>> sym(n, std::vector<Poly>(n, Poly(n)));
    for (const auto& [tuple, s] : fam.slices) {
        std::vector<unsigned> counts(n, 0);
        for (auto i : tuple) ++counts[i];
        Rational orderings(multinomial(counts));
        Monomial lambda(counts);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!s(a, b).is_zero()) sym[a][b].add_term(lambda, orderings * s(a, b));
    }
    return symbolic_det(sym, n);
}

// A point where a nonzero polynomial of degree <= deg in each variable does not vanish:
// such a polynomial cannot vanish on all of {1, ..., deg+1}^n.
inline Vector nonvanishing_point(const Poly& p, unsigned deg) {
    const std::size_t n = p.nvars();
    if (n == 0) throw std::logic_error("nonvanishing_point: no variables");
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Rational{static_cast<long>(idx[i] + 1)};
        if (!p.eval(v).is_zero()) return v;
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++idx[pos] <= deg) break;
            idx[pos] = 0;
            if (pos == 0) throw std::logic_error("nonvanishing_point: polynomial vanishes on the grid");
        }
    }
}

} // namespace detail

/*
 * Deterministic decision from the full slice family (small instances only):
 *   1. the slice space must not be weakly singular,
 *   2. for an invertible A in the span, all A^{-1} S must commute pairwise,
 *   3. every A^{-1} S must be diagonalizable over the selected field.
 */
inline DecisionReport decide_full_slices(const Poly& p, FieldMode mode, std::optional<unsigned> degree = std::nullopt,
                                         SliceGuard guard = {}) {
    const unsigned d = degree ? *degree : p.degree();
    if (d < 3) throw DegreeError("decide_full_slices: degree must be at least 3");
    if (p.nvars() == 0) throw DimensionError("decide_full_slices: no variables");
    SliceFamily fam = all_slices(p, d, guard);

    DecisionReport report;
    report.mode = mode;
    report.nvars = p.nvars();
    report.degree = d;
    report.cfg.trials = 1;

    auto finish = [&](Stage s) {
        report.stage = s;
        report.accepted = s == Stage::Accepted;
        report.trial_stages = {s};
        return report;
    };

    Poly det_poly = detail::weak_singularity_determinant(fam);
    if (det_poly.is_zero()) return finish(Stage::WeaklySingular);

    Vector witness = detail::nonvanishing_point(det_poly, static_cast<unsigned>(p.nvars()) * (d - 2));
    Matrix a_inv = invert(fam.along(witness));

    std::vector<Matrix> normalized;
    for (const auto& [tuple, s] : fam.slices) normalized.push_back(a_inv * s);
    for (std::size_t i = 0; i < normalized.size(); ++i)
        for (std::size_t j = i + 1; j < normalized.size(); ++j)
            if (!commutes(normalized[i], normalized[j])) return finish(Stage::Noncommuting);
    for (const auto& m : normalized)
        if (!is_diagonalizable(m, mode)) return finish(Stage::Nondiagonalizable);
    return finish(Stage::Accepted);
}

} // namespace waring

#endif
