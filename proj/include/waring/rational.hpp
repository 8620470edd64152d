#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace waring {

/*
 * Bit-size instrumentation.
 *
 * When enabled, every Rational produced by an arithmetic operator reports
 * its size (numerator bits + denominator bits) and the tracker keeps the
 * running maximum. Disabled by default; the check costs one relaxed load.
 */
class BitTracker {
public:
    static BitTracker& instance() {
        static BitTracker tracker;
        return tracker;
    }

    void enable() {
        max_bits_.store(0, std::memory_order_relaxed);
        enabled_.store(true, std::memory_order_relaxed);
    }
    void disable() { enabled_.store(false, std::memory_order_relaxed); }
    bool enabled() const { return enabled_.load(std::memory_order_relaxed); }
    std::size_t max_bits() const { return max_bits_.load(std::memory_order_relaxed); }

    void observe(std::size_t bits) {
        std::size_t cur = max_bits_.load(std::memory_order_relaxed);
        while (bits > cur && !max_bits_.compare_exchange_weak(cur, bits, std::memory_order_relaxed)) {
        }
    }

private:
    std::atomic<bool> enabled_{false};
    std::atomic<std::size_t> max_bits_{0};
};

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(unsigned long v) : v_(v) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpz_class v) : v_(std::move(v)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "a" or "a/b" with optional sign, base 10.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        mpz_class num, den{1};
        try {
            if (slash == std::string::npos) {
                num = mpz_class(s, 10);
            } else {
                num = mpz_class(s.substr(0, slash), 10);
                den = mpz_class(s.substr(slash + 1), 10);
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: malformed literal '" + s + "'");
        }
        return Rational(num, den);
    }

    // Exact value of a finite double.
    static Rational from_double(double x) {
        mpq_class q(x);
        return Rational(q);
    }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(10); }

    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_)), Raw{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; track(); return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; track(); return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; track(); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        track();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_), Raw{}); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    struct Raw {};
    Rational(mpq_class v, Raw) : v_(std::move(v)) {}

    void track() const {
        auto& t = BitTracker::instance();
        if (t.enabled()) t.observe(bit_size());
    }

    mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned exp) {
    Rational result{1};
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1;
        if (exp != 0) b *= b;
    }
    return result;
}

} // namespace waring

#endif
