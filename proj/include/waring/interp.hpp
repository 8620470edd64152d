#ifndef WARING_INTERP_HPP
#define WARING_INTERP_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "errors.hpp"
#include "oracle.hpp"
#include "poly.hpp"

namespace waring {

// Lagrange interpolation in coefficient form: the unique polynomial of degree < m through m points.
inline UniPoly interpolate(const std::vector<Rational>& points, const std::vector<Rational>& values) {
    if (points.size() != values.size()) throw DimensionError("interpolate: points and values differ in length");
    {
        std::set<Rational> seen;
        for (const auto& x : points)
            if (!seen.insert(x).second) throw std::invalid_argument("interpolate: duplicate interpolation point");
    }
    const std::size_t m = points.size();
    if (m == 0) return {};

    // master(t) = prod_k (t - x_k)
    std::vector<Rational> master{Rational{1}};
    for (const auto& x : points) {
        std::vector<Rational> next(master.size() + 1);
        for (std::size_t k = 0; k < master.size(); ++k) {
            next[k + 1] += master[k];
            next[k] -= x * master[k];
        }
        master = std::move(next);
    }

    std::vector<Rational> result(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (values[i].is_zero()) continue;
        // basis(t) = master(t) / (t - x_i) by synthetic division
        std::vector<Rational> basis(m);
        Rational carry;
        for (std::size_t k = m; k-- > 0;) {
            carry = master[k + 1] + carry * points[i];
            basis[k] = carry;
        }
        Rational denom{1};
        for (std::size_t k = 0; k < m; ++k)
            if (k != i) denom *= points[i] - points[k];
        Rational scale = values[i] / denom;
        for (std::size_t k = 0; k < m; ++k) result[k] += scale * basis[k];
    }
    return UniPoly(std::move(result));
}

// Univariate restriction g(t) = o(base + t * direction), recovered from the nodes t = 0..d.
inline UniPoly restrict_to_line(const Oracle& o, const Vector& base, const Vector& direction) {
    const unsigned d = o.degree();
    std::vector<Rational> nodes(d + 1), values(d + 1);
    Vector point(o.nvars());
    for (unsigned s = 0; s <= d; ++s) {
        nodes[s] = Rational{static_cast<long>(s)};
        for (std::size_t k = 0; k < point.size(); ++k) point[k] = base[k] + nodes[s] * direction[k];
        values[s] = o(point);
    }
    return interpolate(nodes, values);
}

namespace detail {

inline Vector unit(std::size_t n, std::size_t i) {
    Vector e(n);
    e.at(i) = Rational{1};
    return e;
}

inline void check_index(const Oracle& o, std::size_t i) {
    if (i >= o.nvars()) throw DimensionError("variable index out of range");
}

// g(t) = o(t e_i + sum_{j in others} e_j)
inline UniPoly slice_line(const Oracle& o, std::size_t i, std::initializer_list<std::size_t> others) {
    Vector base(o.nvars());
    for (auto j : others) base[j] += Rational{1};
    return restrict_to_line(o, base, unit(o.nvars(), i));
}

} // namespace detail

/*
 * Coefficient of x_i^{d-2} x_j x_k in the oracle's polynomial (0-based indices).
 *   j = k = i         : o(e_i)
 *   one of j, k is i  : coefficient of t^{d-1} in o(t e_i + e_other)
 *   j = k != i        : coefficient of t^{d-2} in o(t e_i + e_j)
 *   i, j, k distinct  : coefficient of t^{d-2} in o(t e_i + e_j + e_k) minus the two square terms
 * At most 3(d+1) oracle calls.
 */
inline Rational coeff_xi_pow(const Oracle& o, std::size_t i, std::size_t j, std::size_t k) {
    const unsigned d = o.degree();
    if (d < 3) throw DegreeError("coeff_xi_pow: degree must be at least 3");
    detail::check_index(o, i);
    detail::check_index(o, j);
    detail::check_index(o, k);
    if (j == i && k == i) return o(detail::unit(o.nvars(), i));
    if (j == i || k == i) {
        std::size_t other = (j == i) ? k : j;
        return detail::slice_line(o, i, {other}).coeff(d - 1);
    }
    if (j == k) return detail::slice_line(o, i, {j}).coeff(d - 2);
    Rational mixed = detail::slice_line(o, i, {j, k}).coeff(d - 2);
    return mixed - detail::slice_line(o, i, {j}).coeff(d - 2) - detail::slice_line(o, i, {k}).coeff(d - 2);
}

// Exact partial derivative d o / d x_i at a point: interpolate o(point + t e_i), read g'(0).
inline Rational partial_eval(const Oracle& o, std::size_t i, const Vector& point) {
    detail::check_index(o, i);
    if (point.size() != o.nvars()) throw DimensionError("partial_eval: point has wrong length");
    if (o.degree() == 0) return Rational{};
    return restrict_to_line(o, point, detail::unit(o.nvars(), i)).coeff(1);
}

} // namespace waring

#endif
