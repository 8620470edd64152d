#ifndef WARING_MINVARS_HPP
#define WARING_MINVARS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "decide.hpp"
#include "exactla.hpp"
#include "interp.hpp"
#include "oracle.hpp"
#include "randcheck.hpp"

namespace waring {

// M[i][j] = d o / d x_j evaluated at alphas[i].
inline Matrix derivative_matrix(const Oracle& o, const std::vector<Vector>& alphas) {
    const std::size_t n = o.nvars();
    if (alphas.size() != n) throw DimensionError("derivative_matrix: need exactly n points");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = partial_eval(o, j, alphas[i]);
    return m;
}

struct EssentialVariables {
    std::size_t count = 0;  // t
    Matrix change;          // A = (u_1..u_t, v_1..v_{n-t}), v_i spanning the kernel
};

/*
 * Number of essential variables t and a change of variables A such that o(A x)
 * only depends on x_1..x_t. The evaluation points come from stream (Points, 0).
 */
inline EssentialVariables essential_count_and_basis(const Oracle& o, const SampleConfig& cfg = {}) {
    cfg.validate();
    const std::size_t n = o.nvars();
    RandomStream rng(cfg.seed, RandomStream::id(RandomStream::Points, 0));
    std::vector<Vector> alphas;
    for (std::size_t i = 0; i < n; ++i) alphas.push_back(random_vector(n, cfg.set_size, rng));
    auto kernel = kernel_basis(derivative_matrix(o, alphas));
    return {n - kernel.size(), complete_basis(kernel, n)};
}

struct MinvarsReport {
    bool accepted = false;
    std::size_t essential_count = 0;
    Matrix change;
    std::optional<DecisionReport> inner;  // absent when t = 0
    double error_bound_rank = 0.0;        // t(d-1)/|S|
    std::uint64_t oracle_calls = 0;
    SampleConfig cfg;
    FieldMode mode = FieldMode::Complex;
    std::size_t nvars = 0;
    unsigned degree = 0;
};

/*
 * Decides whether o is a combination of d-th powers of at most n independent linear
 * forms: restricts o to its essential variables and runs decide_equiv there.
 * t = 0 is the empty decomposition and is accepted.
 */
inline MinvarsReport decide_waring(const Oracle& o, FieldMode mode, const SampleConfig& cfg = {}) {
    cfg.validate();
    if (o.degree() < 3) throw DegreeError("decide_waring: degree must be at least 3");
    const std::uint64_t calls_before = o.calls();
    MinvarsReport report;
    report.cfg = cfg;
    report.mode = mode;
    report.nvars = o.nvars();
    report.degree = o.degree();

    auto ev = essential_count_and_basis(o, cfg);
    report.essential_count = ev.count;
    report.change = ev.change;
    report.error_bound_rank =
        std::min(1.0, static_cast<double>(ev.count) * (o.degree() - 1) / static_cast<double>(cfg.set_size));
    if (ev.count == 0) {
        report.accepted = true;
    } else {
        Oracle restricted = restrict_leading(o, ev.change, ev.count);
        report.inner = decide_equiv(restricted, mode, cfg);
        report.accepted = report.inner->accepted;
    }
    report.oracle_calls = o.calls() - calls_before;
    return report;
}

} // namespace waring

#endif
