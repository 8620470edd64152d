#ifndef WARING_SUBSTITUTE_HPP
#define WARING_SUBSTITUTE_HPP

#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace waring {

// Explicit expansion of p(A x). Variable x_i of p is replaced by row i of A.
inline Poly substitute_linear(const Poly& p, const Matrix& a) {
    const std::size_t n = p.nvars();
    if (a.rows() != n || a.cols() != n) throw DimensionError("substitute_linear: matrix must be n x n");

    std::vector<Poly> forms;
    forms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
        forms.push_back(Poly::linear(row));
    }

    // powers[i][e] = forms[i]^e, filled lazily
    std::vector<std::vector<Poly>> powers(n);
    for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Poly::constant(n, Rational{1}));
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& cache = powers[i];
        while (cache.size() <= e) cache.push_back(cache.back() * forms[i]);
        return cache[e];
    };

    Poly result(n);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] != 0) term = term * power(i, m[i]);
        result += term;
    }
    return result;
}

} // namespace waring

#endif
