#ifndef WARING_ORACLE_HPP
#define WARING_ORACLE_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>

#include "errors.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace waring {

/*
 * Evaluation blackbox for a homogeneous polynomial of declared degree.
 *
 * Copies share the evaluator and the call counter. The evaluator must be pure
 * and reentrant; the counter is atomic so concurrent callers never lose counts.
 */
class Oracle {
public:
    using Evaluator = std::function<Rational(std::span<const Rational>)>;

    Oracle(std::size_t n, unsigned d, Evaluator eval)
        : n_(n), d_(d), eval_(std::make_shared<Evaluator>(std::move(eval))),
          calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

    std::size_t nvars() const { return n_; }
    unsigned degree() const { return d_; }
    std::uint64_t calls() const { return calls_->load(std::memory_order_relaxed); }

    Rational operator()(std::span<const Rational> point) const {
        if (point.size() != n_) throw DimensionError("Oracle: point has wrong length");
        if (counts_) calls_->fetch_add(1, std::memory_order_relaxed);
        return (*eval_)(point);
    }

private:
    // Oracles that forward to another oracle report that oracle's count instead of their own.
    Oracle(std::size_t n, unsigned d, Evaluator eval, std::shared_ptr<std::atomic<std::uint64_t>> shared_calls,
           bool counts)
        : n_(n), d_(d), eval_(std::make_shared<Evaluator>(std::move(eval))), calls_(std::move(shared_calls)),
          counts_(counts) {}

    friend Oracle compose_linear(const Oracle& o, const Matrix& r);
    friend Oracle restrict_leading(const Oracle& o, const Matrix& a, std::size_t t);

    std::size_t n_;
    unsigned d_;
    std::shared_ptr<Evaluator> eval_;
    std::shared_ptr<std::atomic<std::uint64_t>> calls_;
    bool counts_ = true;
};

// Oracle evaluating p exactly. Throws if p is not homogeneous of its degree.
inline Oracle from_poly(const Poly& p) {
    if (!p.is_homogeneous()) throw NotHomogeneousError("from_poly: polynomial is not homogeneous");
    return Oracle(p.nvars(), p.degree(), [p](std::span<const Rational> v) { return p.eval(v); });
}

// Same, with an explicit degree; lets the zero polynomial carry a degree.
inline Oracle from_poly(const Poly& p, unsigned d) {
    require_homogeneous(p, d);
    return Oracle(p.nvars(), d, [p](std::span<const Rational> v) { return p.eval(v); });
}

// h(v) = o(R v), evaluated lazily; every evaluation of h is one call on o.
inline Oracle compose_linear(const Oracle& o, const Matrix& r) {
    if (r.rows() != o.nvars() || r.cols() != o.nvars()) throw DimensionError("compose_linear: matrix must be n x n");
    Oracle inner = o;
    Oracle h(o.nvars(), o.degree(),
             [inner, r](std::span<const Rational> v) {
                 auto w = r * v;
                 return inner(w);
             },
             o.calls_, false);
    return h;
}

// v (length t) -> o(A * (v, 0, ..., 0)); the first t columns of A span the restriction.
inline Oracle restrict_leading(const Oracle& o, const Matrix& a, std::size_t t) {
    const std::size_t n = o.nvars();
    if (a.rows() != n || a.cols() != n || t > n) throw DimensionError("restrict_leading: bad shape");
    Oracle inner = o;
    return Oracle(t, o.degree(),
                  [inner, a, n, t](std::span<const Rational> v) {
                      std::vector<Rational> w(n);
                      for (std::size_t i = 0; i < n; ++i)
                          for (std::size_t j = 0; j < t; ++j)
                              if (!v[j].is_zero()) w[i] += a(i, j) * v[j];
                      return inner(w);
                  },
                  o.calls_, false);
}

/*
 * Oracle for sum_i coeffs[i] * <forms[i], x>^d, evaluated from the linear forms
 * directly. Used to build large test instances without expanding them.
 */
inline Oracle from_power_sum(const std::vector<Rational>& coeffs, const std::vector<Vector>& forms, unsigned d) {
    if (coeffs.size() != forms.size() || forms.empty()) throw DimensionError("from_power_sum: size mismatch");
    const std::size_t n = forms.front().size();
    for (const auto& f : forms)
        if (f.size() != n) throw DimensionError("from_power_sum: forms have different lengths");
    return Oracle(n, d, [coeffs, forms, d](std::span<const Rational> v) {
        Rational acc;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            Rational dot;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!v[j].is_zero()) dot += forms[i][j] * v[j];
            acc += coeffs[i] * pow(dot, d);
        }
        return acc;
    });
}

} // namespace waring

#endif
