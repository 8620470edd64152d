// Shared helpers for the test suites. Everything here is deliberately written
// without the library's own algorithms so it can serve as an independent check.
#ifndef WARING_TESTS_SUPPORT_HPP
#define WARING_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <waring/waring.hpp>

namespace testing_support {

using waring::Matrix;
using waring::Monomial;
using waring::Poly;
using waring::Rational;
using waring::Vector;

inline long uniform_int(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline Matrix random_int_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, long lo, long hi) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational{uniform_int(g, lo, hi)};
    return m;
}

inline Vector random_int_vector(std::mt19937_64& g, std::size_t n, long lo, long hi) {
    Vector v(n);
    for (auto& x : v) x = Rational{uniform_int(g, lo, hi)};
    return v;
}

// Leibniz formula; only for n <= 6.
inline Rational det_by_permutations(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational acc;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational t{inversions % 2 == 0 ? 1 : -1};
        for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t *= m(i, perm[i]);
        acc += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline Matrix random_invertible(std::mt19937_64& g, std::size_t n, long lo, long hi) {
    while (true) {
        Matrix m = random_int_matrix(g, n, n, lo, hi);
        if (!det_by_permutations(m).is_zero()) return m;
    }
}

// Random homogeneous polynomial of degree d with `terms` monomials and coefficients in [-9, 9].
inline Poly random_homogeneous(std::mt19937_64& g, std::size_t n, unsigned d, std::size_t terms) {
    Poly p(n);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<unsigned> e(n, 0);
        for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(uniform_int(g, 0, static_cast<long>(n) - 1))];
        p.add_term(Monomial(e), Rational{uniform_int(g, -9, 9)});
    }
    return p;
}

// Expands sum_i coeffs[i] * <forms[i], x>^d by summing over all ordered d-tuples of
// variables (each ordered tuple contributes one product to its monomial).
inline Poly expand_power_sum(const std::vector<Rational>& coeffs, const std::vector<Vector>& forms, unsigned d) {
    const std::size_t n = forms.front().size();
    Poly p(n);
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        std::vector<unsigned> e(n, 0);
        for (auto i : idx) ++e[i];
        Rational c;
        for (std::size_t f = 0; f < forms.size(); ++f) {
            Rational t = coeffs[f];
            for (auto i : idx) t *= forms[f][i];
            c += t;
        }
        p.add_term(Monomial(e), c);
        std::size_t pos = d;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < n) break;
            idx[pos] = 0;
            if (pos == 0) return p;
        }
        if (d == 0) return p;
    }
}

// P_d(A x) = sum_i <row_i(A), x>^d.
inline Poly power_sum_of_rows(const Matrix& a, unsigned d) {
    std::vector<Vector> forms;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vector row(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
        forms.push_back(row);
    }
    return expand_power_sum(std::vector<Rational>(a.rows(), Rational{1}), forms, d);
}

inline Poly var_pow(std::size_t n, std::size_t i, unsigned e) {
    std::vector<unsigned> ex(n, 0);
    ex[i] = e;
    Poly p(n);
    p.add_term(Monomial(ex), Rational{1});
    return p;
}

inline Poly monomial(std::vector<unsigned> e, const Rational& c = Rational{1}) {
    Poly p(e.size());
    p.add_term(Monomial(std::move(e)), c);
    return p;
}

} // namespace testing_support

#endif
