#ifndef WARING_SLICES_HPP
#define WARING_SLICES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "interp.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "poly.hpp"

namespace waring {

// Number of distinct orderings of a multiset with the given multiplicities.
inline mpz_class multinomial(const std::vector<unsigned>& counts) {
    unsigned total = 0;
    for (auto c : counts) total += c;
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), total);
    for (auto c : counts) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), c);
        r /= f;
    }
    return r;
}

namespace detail {

// Multiplicity of {i x (d-2), j, k} as a multiset of d indices.
inline Rational orderings(std::size_t n, unsigned d, std::size_t i, std::size_t j, std::size_t k) {
    std::vector<unsigned> counts(n, 0);
    counts[i] += d - 2;
    counts[j] += 1;
    counts[k] += 1;
    return Rational(multinomial(counts));
}

// Calls f(tuple) for every tuple in [n]^len in lexicographic order.
template <typename F>
void for_each_tuple(std::size_t n, std::size_t len, F&& f) {
    std::vector<std::size_t> t(len, 0);
    if (n == 0 && len > 0) return;
    while (true) {
        f(static_cast<const std::vector<std::size_t>&>(t));
        std::size_t pos = len;
        while (pos > 0) {
            --pos;
            if (++t[pos] < n) break;
            t[pos] = 0;
            if (pos == 0) return;
        }
        if (len == 0) return;
    }
}

// Calls f(tuple) for every nondecreasing tuple in [n]^len.
template <typename F>
void for_each_multiset(std::size_t n, std::size_t len, F&& f) {
    if (n == 0 && len > 0) return;
    std::vector<std::size_t> t(len, 0);
    while (true) {
        f(static_cast<const std::vector<std::size_t>&>(t));
        std::size_t pos = len;
        while (pos > 0 && t[pos - 1] == n - 1) --pos;
        if (pos == 0) return;
        std::size_t v = t[pos - 1] + 1;
        for (std::size_t q = pos - 1; q < len; ++q) t[q] = v;
    }
}

} // namespace detail

// Symmetric tensor entry T_{i..i j k} = coeff(x_i^{d-2} x_j x_k) / #orderings.
inline Rational slice_entry(const Oracle& o, std::size_t i, std::size_t j, std::size_t k) {
    Rational c = coeff_xi_pow(o, i, j, k);
    return c / detail::orderings(o.nvars(), o.degree(), i, j, k);
}

struct SliceTriple {
    Matrix t1, t2, t3;
};

/*
 * The distinguished slice T_{i...i} of an oracle's polynomial. Shares the line
 * restrictions between entries, so it costs 1 + (n-1)(d+1) + C(n-1,2)(d+1) calls.
 */
inline Matrix distinguished_slice(const Oracle& o, std::size_t i) {
    const std::size_t n = o.nvars();
    const unsigned d = o.degree();
    if (d < 3) throw DegreeError("distinguished_slice: degree must be at least 3");
    detail::check_index(o, i);

    const Rational pairs{static_cast<long>(d) * static_cast<long>(d - 1)};
    Matrix s(n, n);
    s(i, i) = o(detail::unit(n, i));
    std::vector<Rational> square(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        UniPoly line = detail::slice_line(o, i, {j});
        s(i, j) = s(j, i) = line.coeff(d - 1) / Rational{static_cast<long>(d)};
        square[j] = line.coeff(d - 2);
        s(j, j) = square[j] * Rational{2} / pairs;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
            if (k == i) continue;
            Rational mixed = detail::slice_line(o, i, {j, k}).coeff(d - 2) - square[j] - square[k];
            s(j, k) = s(k, j) = mixed / pairs;
        }
    }
    return s;
}

/*
 * T1, T2, T3 of the oracle's polynomial. With fewer than three variables the
 * missing slices repeat T1.
 */
inline SliceTriple slice_triple(const Oracle& o) {
    if (o.degree() < 3) throw DegreeError("slice_triple: degree must be at least 3");
    if (o.nvars() == 0) throw DimensionError("slice_triple: no variables");
    SliceTriple t;
    t.t1 = distinguished_slice(o, 0);
    t.t2 = o.nvars() >= 2 ? distinguished_slice(o, 1) : t.t1;
    t.t3 = o.nvars() >= 3 ? distinguished_slice(o, 2) : t.t1;
    return t;
}

struct SliceGuard {
    std::size_t max_vars = 4;
    unsigned max_degree = 6;
};

// All slices of a symmetric tensor, keyed by the nondecreasing (d-2)-tuple of fixed indices.
struct SliceFamily {
    std::size_t n = 0;
    unsigned d = 0;
    std::map<std::vector<std::size_t>, Matrix> slices;

    const Matrix& at(std::vector<std::size_t> tuple) const {
        std::sort(tuple.begin(), tuple.end());
        return slices.at(tuple);
    }

    // sum over ordered tuples J of prod_m u[J_m] * S_J
    Matrix along(const Vector& u) const {
        if (u.size() != n) throw DimensionError("SliceFamily::along: vector length mismatch");
        Matrix acc(n, n);
        detail::for_each_tuple(n, d - 2, [&](const std::vector<std::size_t>& tuple) {
            Rational w{1};
            for (auto j : tuple) w *= u[j];
            if (!w.is_zero()) acc += w * at(tuple);
        });
        return acc;
    }

    friend bool operator==(const SliceFamily&, const SliceFamily&) = default;
};

// Every distinct slice of a dense homogeneous polynomial (n + d - 3 choose d - 2 of them).
inline SliceFamily all_slices(const Poly& p, std::optional<unsigned> degree = std::nullopt, SliceGuard guard = {}) {
    const std::size_t n = p.nvars();
    const unsigned d = degree ? *degree : p.degree();
    require_homogeneous(p, d);
    if (d < 2) throw DegreeError("all_slices: degree must be at least 2");
    if (n > guard.max_vars || d > guard.max_degree) throw SizeGuardError("all_slices: instance exceeds size guard");

    SliceFamily fam{n, d, {}};
    detail::for_each_multiset(n, d - 2, [&](const std::vector<std::size_t>& tuple) {
        Matrix s(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                std::vector<unsigned> counts(n, 0);
                for (auto i : tuple) ++counts[i];
                ++counts[j];
                ++counts[k];
                Rational c = p.coefficient(Monomial(counts));
                if (c.is_zero()) continue;
                s(j, k) = s(k, j) = c / Rational(multinomial(counts));
            }
        fam.slices.emplace(tuple, std::move(s));
    });
    return fam;
}

/*
 * Slices of p(A x) from the slices of p:
 *   T_I = A^T D_I A,  D_I = sum over ordered J of prod_m A[J_m][I_m] * S_J.
 */
inline SliceFamily transform_slices(const SliceFamily& fam, const Matrix& a) {
    const std::size_t n = fam.n;
    if (a.rows() != n || a.cols() != n) throw DimensionError("transform_slices: matrix must be n x n");
    const Matrix at = a.transpose();
    SliceFamily out{n, fam.d, {}};
    for (const auto& [tuple, unused] : fam.slices) {
        Matrix dsum(n, n);
        detail::for_each_tuple(n, fam.d - 2, [&](const std::vector<std::size_t>& src) {
            Rational w{1};
            for (std::size_t m = 0; m < src.size() && !w.is_zero(); ++m) w *= a(src[m], tuple[m]);
            if (!w.is_zero()) dsum += w * fam.at(src);
        });
        out.slices.emplace(tuple, at * dsum * a);
    }
    return out;
}

} // namespace waring

#endif
