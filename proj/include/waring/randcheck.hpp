#ifndef WARING_RANDCHECK_HPP
#define WARING_RANDCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exactla.hpp"
#include "matrix.hpp"

namespace waring {

struct SampleConfig {
    std::uint64_t set_size = std::uint64_t{1} << 31;
    std::uint64_t seed = 0;
    unsigned trials = 1;

    void validate() const {
        if (set_size < 2) throw std::invalid_argument("SampleConfig: set_size must be at least 2");
        if (trials < 1) throw std::invalid_argument("SampleConfig: trials must be at least 1");
    }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/*
 * Counter-based random stream.
 *
 * Stream layout: key = splitmix64(seed ^ splitmix64(stream_id)); the k-th raw
 * word is splitmix64(key + k * 0x9E3779B97F4A7C15). A stream id is
 * (purpose << 32) | index, so streams for different purposes and trial indices
 * never share words and results do not depend on platform or scheduling.
 */
class RandomStream {
public:
    enum Purpose : std::uint64_t {
        ChangeOfBasis = 1, // change of variables R, index = trial / retry
        Points = 2,     // evaluation points for variable minimization
        Verify = 3,     // residual verification points
        Combine = 4,    // coefficients for family commutativity tests
        Direction = 5,  // extra slice direction when n = 2
        Probe = 6,      // zero-input probing
        Generic = 7,
    };

    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_(splitmix64(seed ^ splitmix64(stream_id))) {}

    static std::uint64_t id(Purpose p, std::uint64_t index) { return (static_cast<std::uint64_t>(p) << 32) | index; }

    std::uint64_t next_u64() { return splitmix64(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL); }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("RandomStream::below: zero bound");
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    // Uniform element of S = {1, ..., set_size}.
    Rational sample(std::uint64_t set_size) { return Rational(static_cast<unsigned long>(below(set_size) + 1)); }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

inline Matrix random_matrix(std::size_t n, std::uint64_t set_size, RandomStream& rng) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.sample(set_size);
    return m;
}

// n x n matrix with i.i.d. entries from S, drawn from stream (ChangeOfBasis, 0) of cfg.seed.
inline Matrix random_matrix(std::size_t n, const SampleConfig& cfg) {
    cfg.validate();
    RandomStream rng(cfg.seed, RandomStream::id(RandomStream::ChangeOfBasis, 0));
    return random_matrix(n, cfg.set_size, rng);
}

inline Vector random_vector(std::size_t n, std::uint64_t set_size, RandomStream& rng) {
    Vector v(n);
    for (auto& x : v) x = rng.sample(set_size);
    return v;
}

/*
 * One randomized commutativity check: with alpha, beta drawn from S, test whether
 * sum alpha_i A_i and sum beta_i A_i commute. A commuting family always passes;
 * a non-commuting family passes with probability at most 2/|S|.
 */
inline bool family_commutes_randomized(const std::vector<Matrix>& family, std::uint64_t set_size,
                                       RandomStream& rng) {
    if (family.empty()) return true;
    const std::size_t n = family.front().rows();
    for (const auto& m : family)
        if (!m.is_square() || m.rows() != n) throw DimensionError("family_commutes_randomized: size mismatch");
    Matrix a(n, n), b(n, n);
    for (const auto& m : family) a += rng.sample(set_size) * m;
    for (const auto& m : family) b += rng.sample(set_size) * m;
    return commutes(a, b);
}

// Repeats the check cfg.trials times on independent streams; false as soon as one draw fails.
inline bool family_commutes_randomized(const std::vector<Matrix>& family, const SampleConfig& cfg) {
    cfg.validate();
    for (unsigned t = 0; t < cfg.trials; ++t) {
        RandomStream rng(cfg.seed, RandomStream::id(RandomStream::Combine, t));
        if (!family_commutes_randomized(family, cfg.set_size, rng)) return false;
    }
    return true;
}

} // namespace waring

#endif
