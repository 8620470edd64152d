#ifndef WARING_EXACTLA_HPP
#define WARING_EXACTLA_HPP

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace waring {

enum class FieldMode { Complex, Real };

inline std::string_view to_string(FieldMode m) { return m == FieldMode::Complex ? "complex" : "real"; }

namespace detail {

inline void require_square(const Matrix& m, const char* who) {
    if (!m.is_square()) throw DimensionError(std::string(who) + ": matrix must be square");
}

// Integer matrix diag(s) * A, with s_i the lcm of the denominators of row i.
inline std::pair<std::vector<std::vector<mpz_class>>, std::vector<mpz_class>> clear_row_denominators(const Matrix& a) {
    std::vector<std::vector<mpz_class>> b(a.rows(), std::vector<mpz_class>(a.cols()));
    std::vector<mpz_class> scale(a.rows(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).denominator().get_mpz_t());
        scale[i] = l;
        for (std::size_t j = 0; j < a.cols(); ++j) b[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
    }
    return {std::move(b), std::move(scale)};
}

/*
 * In-place fraction-free (Bareiss) forward elimination on the first `pivot_cols`
 * columns of an integer matrix. Every intermediate stays an integer because each
 * update is divided exactly by the previous pivot. Returns the sign of the row
 * permutation, or 0 when a pivot column is entirely zero (singular).
 */
inline int bareiss_forward(std::vector<std::vector<mpz_class>>& m, std::size_t pivot_cols) {
    const std::size_t rows = m.size();
    auto& tracker = BitTracker::instance();
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < pivot_cols && k < rows; ++k) {
        std::size_t p = k;
        while (p < rows && m[p][k] == 0) ++p;
        if (p == rows) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        const std::size_t cols = m[k].size();
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                mpz_class v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                if (tracker.enabled()) tracker.observe(mpz_sizeinbase(v.get_mpz_t(), 2));
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign;
}

inline Rational to_rational(const mpz_class& z) { return Rational(z); }

} // namespace detail

// Exact determinant through fraction-free elimination.
inline Rational det(const Matrix& a) {
    detail::require_square(a, "det");
    const std::size_t n = a.rows();
    if (n == 0) return Rational{1};
    auto [b, scale] = detail::clear_row_denominators(a);
    int sign = detail::bareiss_forward(b, n);
    if (sign == 0) return Rational{};
    mpz_class denom = 1;
    for (const auto& s : scale) denom *= s;
    mpz_class num = b[n - 1][n - 1];
    if (sign < 0) num = -num;
    return Rational(num, denom);
}

// Exact inverse; throws SingularError when det(a) = 0.
inline Matrix invert(const Matrix& a) {
    detail::require_square(a, "invert");
    const std::size_t n = a.rows();
    auto [b, scale] = detail::clear_row_denominators(a);
    for (std::size_t i = 0; i < n; ++i) {
        b[i].resize(2 * n, 0);
        b[i][n + i] = 1;
    }
    if (detail::bareiss_forward(b, n) == 0) throw SingularError();

    // Back substitution on the fraction-free upper triangle.
    Matrix x(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc = detail::to_rational(b[ii][n + col]);
            for (std::size_t j = ii + 1; j < n; ++j) acc -= detail::to_rational(b[ii][j]) * x(j, col);
            x(ii, col) = acc / detail::to_rational(b[ii][ii]);
        }
    }
    // a^{-1} = (diag(s) a)^{-1} diag(s)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) *= detail::to_rational(scale[j]);
    return x;
}

// Monic characteristic polynomial det(tI - M), Faddeev-LeVerrier recurrence.
inline UniPoly charpoly(const Matrix& m) {
    detail::require_square(m, "charpoly");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational{1};
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix next = m * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        c[n - k] = -(m * mk).trace() / Rational{static_cast<long>(k)};
    }
    return UniPoly(std::move(c));
}

// p / gcd(p, p'), made monic.
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    UniPoly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

// Horner evaluation of p at a square matrix.
inline Matrix eval_at_matrix(const UniPoly& p, const Matrix& m) {
    detail::require_square(m, "eval_at_matrix");
    const std::size_t n = m.rows();
    Matrix acc(n, n);
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
    }
    return acc;
}

/*
 * Number of distinct real roots via the Sturm chain p, p', -rem(...), ...
 * Each remainder is divided by the absolute value of its leading coefficient,
 * which keeps coefficients small without changing any sign.
 */
inline int sturm_count(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    auto normalize = [](const UniPoly& q) { return Rational{1} / q.leading().abs() * q; };
    std::vector<UniPoly> chain{normalize(p)};
    UniPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(normalize(d));
    while (chain.size() >= 2) {
        UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(normalize(Rational{-1} * r));
    }
    auto variations = [&](bool at_plus_infinity) {
        int count = 0, last = 0;
        for (const auto& q : chain) {
            int s = q.leading().sign();
            if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
            if (s != 0 && last != 0 && s != last) ++count;
            if (s != 0) last = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

/*
 * Diagonalizable over C iff the square-free part of the characteristic polynomial
 * annihilates M; over R additionally every root of that square-free part is real.
 */
inline bool is_diagonalizable(const Matrix& m, FieldMode mode) {
    detail::require_square(m, "is_diagonalizable");
    if (m.rows() == 0) return true;
    UniPoly sf = squarefree_part(charpoly(m));
    if (!eval_at_matrix(sf, m).is_zero()) return false;
    if (mode == FieldMode::Real) return sturm_count(sf) == sf.degree();
    return true;
}

inline bool commutes(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        throw DimensionError("commutes: matrices must be square of equal size");
    return a * b == b * a;
}

// Reduced row echelon form with leftmost pivots. Returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rational inv = Rational{1} / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

// Basis of the right kernel {v : M v = 0}, one vector per free column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    Matrix r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = Rational{1};
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/*
 * Invertible n x n matrix whose last |vs| columns are vs and whose leading columns
 * are standard basis vectors picked greedily in index order.
 */
inline Matrix complete_basis(const std::vector<Vector>& vs, std::size_t n) {
    for (const auto& v : vs)
        if (v.size() != n) throw DimensionError("complete_basis: vector length mismatch");
    if (vs.size() > n || rank(Matrix::from_columns(vs, n)) != vs.size())
        throw std::invalid_argument("complete_basis: vectors are linearly dependent");

    std::vector<Vector> chosen;
    std::vector<Vector> current = vs;
    for (std::size_t k = 0; k < n && chosen.size() + vs.size() < n; ++k) {
        Vector e(n);
        e[k] = Rational{1};
        current.push_back(e);
        if (rank(Matrix::from_columns(current, n)) == current.size()) {
            chosen.push_back(std::move(e));
        } else {
            current.pop_back();
        }
    }
    std::vector<Vector> cols = chosen;
    cols.insert(cols.end(), vs.begin(), vs.end());
    return Matrix::from_columns(cols, n);
}

} // namespace waring

#endif
