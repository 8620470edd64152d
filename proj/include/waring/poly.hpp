#ifndef WARING_POLY_HPP
#define WARING_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace waring {

using Vector = std::vector<Rational>;

// Exponent vector of a monomial in n variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t n, std::size_t i) {
        Monomial m(n);
        m.exps_.at(i) = 1;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    unsigned degree() const {
        unsigned s = 0;
        for (auto e : exps_) s += e;
        return s;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw DimensionError("Monomial: variable count mismatch");
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exps_;
};

// Graded lexicographic order: higher total degree first, then lexicographically
// larger exponent vectors first (x1 > x2 > ...).
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exponents() > b.exponents();
    }
};

// Sparse multivariate polynomial over the rationals. Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    Poly() = default;
    explicit Poly(std::size_t n) : n_(n) {}

    static Poly constant(std::size_t n, const Rational& c) {
        Poly p(n);
        p.add_term(Monomial(n), c);
        return p;
    }
    static Poly variable(std::size_t n, std::size_t i) {
        Poly p(n);
        p.add_term(Monomial::variable(n, i), Rational{1});
        return p;
    }
    // Linear form sum_i coeffs[i] * x_i.
    static Poly linear(std::span<const Rational> coeffs) {
        Poly p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
        return p;
    }

    std::size_t nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational{} : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.nvars() != n_) throw DimensionError("Poly: monomial has wrong variable count");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Maximum total degree; 0 for the zero polynomial.
    unsigned degree() const { return terms_.empty() ? 0u : terms_.begin()->first.degree(); }

    // The zero polynomial is homogeneous of every degree.
    bool is_homogeneous(std::optional<unsigned> d = std::nullopt) const {
        if (terms_.empty()) return true;
        unsigned target = d ? *d : degree();
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree() == target; });
    }

    Rational eval(std::span<const Rational> point) const {
        if (point.size() != n_) throw DimensionError("Poly::eval: point has wrong length");
        // Per-variable power caches keep repeated exponents cheap.
        std::vector<std::vector<Rational>> powers(n_);
        for (std::size_t i = 0; i < n_; ++i) powers[i].push_back(Rational{1});
        auto power = [&](std::size_t i, unsigned e) -> const Rational& {
            auto& cache = powers[i];
            while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
            return cache[e];
        };
        Rational acc;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < n_; ++i)
                if (m[i] != 0) t *= power(i, m[i]);
            acc += t;
        }
        return acc;
    }

    Poly derivative(std::size_t i) const {
        if (i >= n_) throw DimensionError("Poly::derivative: variable index out of range");
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial dm = m;
            dm[i] -= 1;
            r.add_term(dm, c * Rational{static_cast<long>(m[i])});
        }
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational{-1}; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    void check_same(const Poly& o) const {
        if (o.n_ != n_) throw DimensionError("Poly: variable count mismatch");
    }

    std::size_t n_ = 0;
    Terms terms_;
};

inline Poly pow(const Poly& p, unsigned e) {
    Poly result = Poly::constant(p.nvars(), Rational{1});
    Poly base = p;
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

// Validates homogeneity of a declared degree; the zero polynomial passes for any d.
inline void require_homogeneous(const Poly& p, unsigned d) {
    if (!p.is_homogeneous(d))
        throw NotHomogeneousError("polynomial is not homogeneous of degree " + std::to_string(d));
}

// P_d = x_1^d + ... + x_n^d.
inline Poly power_sum(std::size_t n, unsigned d) {
    Poly p(n);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n);
        m[i] = d;
        p.add_term(m, Rational{1});
    }
    return p;
}

// Dense univariate polynomial, index = degree. The zero polynomial is the empty vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly monomial(unsigned k, const Rational& c = Rational{1}) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational{}; }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& t) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational{static_cast<long>(k)};
        return UniPoly(std::move(d));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        UniPoly r = *this;
        Rational lc = leading();
        for (auto& x : r.c_) x /= lc;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        std::vector<Rational> r = a.c_;
        for (auto& x : r) x *= s;
        return UniPoly(std::move(r));
    }

    // Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        if (a.degree() < b.degree()) return {UniPoly{}, a};
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
        const Rational& lb = b.leading();
        for (std::size_t k = q.size(); k-- > 0;) {
            Rational f = rem[k + b.c_.size() - 1] / lb;
            q[k] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
        }
        rem.resize(b.c_.size() - 1);
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Monic gcd over Q.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace waring

#endif
