// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "la_corpus.hpp"

using namespace waring;
using namespace testing_support;

namespace {

constexpr std::uint64_t kDefaultSet = std::uint64_t{1} << 31;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Vector> rows_of(const Matrix& a) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vector r(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) r[j] = a(i, j);
        out.push_back(r);
    }
    return out;
}

SampleConfig seeded(std::uint64_t seed, std::uint64_t set_size = kDefaultSet) { return {set_size, seed, 1}; }

// 1. Paper example.
Outcome paper_example() {
    auto t0 = std::chrono::steady_clock::now();
    Poly f = parse_poly("2*x1^3 + 12*x1*x2^2");
    bool real = decide_equiv(from_poly(f), FieldMode::Real).accepted;
    bool cplx = decide_equiv(from_poly(f), FieldMode::Complex).accepted;
    auto rec = reconstruct(from_poly(f), FieldMode::Real);
    bool forms_ok = rec.status == ReconstructStatus::Decomposed && rec.decomposition->terms.size() == 2;
    double res = forms_ok ? rec.decomposition->residual : INFINITY;
    if (forms_ok) {
        // normalized forms are (1, -sqrt2) and (1, sqrt2)
        const auto& t = rec.decomposition->terms;
        const double r2 = std::sqrt(2.0);
        forms_ok = std::abs(t[0].form[0] - 1.0) < 1e-9 && std::abs(t[0].form[1] + r2) < 1e-9 &&
                   std::abs(t[1].form[0] - 1.0) < 1e-9 && std::abs(t[1].form[1] - r2) < 1e-9;
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "real=%d complex=%d forms=%d residual=%.2e time=%.3fs", real, cplx, forms_ok, res, secs);
    return {real && cplx && forms_ok && res < 1e-9 && secs < 1.0, buf};
}

// 2. Positive instances P_d(A x).
Outcome positive_rate() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 g(2002);
    int accepted = 0, total = 0;
    for (int k = 0; k < 500; ++k) {
        std::size_t n = static_cast<std::size_t>(2 + k % 5);
        unsigned d = static_cast<unsigned>(3 + (k / 5) % 4);
        Matrix a = random_invertible(g, n, -5, 5);
        Oracle o = from_power_sum(std::vector<Rational>(n, Rational{1}), rows_of(a), d);
        FieldMode mode = k % 2 == 0 ? FieldMode::Complex : FieldMode::Real;
        accepted += decide_equiv(o, mode, seeded(static_cast<std::uint64_t>(k))).accepted;
        ++total;
    }
    double rate = static_cast<double>(accepted) / total, secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "accepted %d/%d (rate %.4f, need >= 0.999) time=%.1fs", accepted, total, rate, secs);
    return {rate >= 0.999 && secs < 60.0, buf};
}

struct Negative {
    Poly p;
    FieldMode mode;
    std::string kind;
};

// x1^(d-1) x2 plus independent powers, under a random change of variables.
Poly nondiagonalizable_instance(std::mt19937_64& g, std::size_t n, unsigned d) {
    std::vector<unsigned> e(n, 0);
    e[0] = d - 1;
    e[1] = 1;
    Poly p = monomial(e);
    for (std::size_t i = 2; i < n; ++i) p += var_pow(n, i, d);
    return substitute_linear(p, random_invertible(g, n, -3, 3));
}

std::vector<Negative> negative_corpus() {
    std::mt19937_64 g(3003);
    std::vector<Negative> out;
    // non-diagonalizable
    for (int k = 0; k < 34; ++k) {
        std::size_t n = static_cast<std::size_t>(2 + k % 3);
        unsigned d = static_cast<unsigned>(3 + (k / 3) % 3);
        out.push_back({nondiagonalizable_instance(g, n, d), k % 2 ? FieldMode::Real : FieldMode::Complex, "nondiagonalizable"});
    }
    // weakly singular: fewer than n powers in n variables
    for (int k = 0; k < 33; ++k) {
        std::size_t n = static_cast<std::size_t>(2 + k % 3);
        unsigned d = static_cast<unsigned>(3 + (k / 3) % 4);
        std::size_t r = static_cast<std::size_t>(uniform_int(g, 1, static_cast<long>(n) - 1));
        Poly p = k % 3 == 0 ? var_pow(n, 0, d) : power_sum_of_rows(random_int_matrix(g, r, n, -4, 4), d);
        out.push_back({p, FieldMode::Complex, "weakly_singular"});
    }
    // non-commuting slices: generic forms of rank above n; sparse draws can land on a
    // degenerate form, so keep drawing until the full-slice oracle reports the stage
    while (out.size() < 100) {
        std::size_t n = out.size() % 2 ? 3 : 2;
        unsigned d = n == 2 ? static_cast<unsigned>(uniform_int(g, 4, 6)) : static_cast<unsigned>(uniform_int(g, 3, 5));
        Poly p = random_homogeneous(g, n, d, 10);
        if (p.is_zero() || decide_full_slices(p, FieldMode::Complex, d).stage != Stage::Noncommuting) continue;
        out.push_back({p, FieldMode::Complex, "noncommuting"});
    }
    return out;
}

// 3. Crafted negatives, verified by the full-slice oracle.
Outcome negative_rate() {
    auto t0 = std::chrono::steady_clock::now();
    auto corpus = negative_corpus();
    int rejected = 0, trials = 0, unverified = 0;
    std::map<std::string, int> verified;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& c = corpus[k];
        auto truth = decide_full_slices(c.p, c.mode, c.p.degree());
        bool kind_ok = !truth.accepted && (c.kind != "noncommuting" || truth.stage == Stage::Noncommuting) &&
                       (c.kind != "weakly_singular" || truth.stage == Stage::WeaklySingular);
        if (!kind_ok) {
            ++unverified;
            continue;
        }
        ++verified[c.kind];
        Oracle o = from_poly(c.p);
        for (std::uint64_t s = 0; s < 10; ++s) {
            rejected += !decide_equiv(o, c.mode, seeded(k * 10 + s)).accepted;
            ++trials;
        }
    }
    double rate = trials ? static_cast<double>(rejected) / trials : 0.0, secs = seconds_since(t0);
    char buf[220];
    std::snprintf(buf, sizeof buf, "rejected %d/%d trials (rate %.4f, need >= 0.999); verified %d/%zu instances "
                  "(nondiag %d, weakly singular %d, noncommuting %d) time=%.1fs",
                  rejected, trials, rate, static_cast<int>(corpus.size()) - unverified, corpus.size(),
                  verified["nondiagonalizable"], verified["weakly_singular"], verified["noncommuting"], secs);
    return {unverified == 0 && rate >= 0.999 && secs < 60.0, buf};
}

// 4. Agreement with the full-slice oracle, and the slice call budget.
Outcome oracle_agreement() {
    std::mt19937_64 g(4004);
    int agree = 0, total = 0, false_reject = 0, false_accept = 0, positives = 0, negatives = 0;
    bool budget_ok = true;
    std::uint64_t worst_calls = 0;
    double bound_pos = 0.0, bound_neg = 0.0;
    for (int k = 0; k < 200; ++k) {
        std::size_t n = static_cast<std::size_t>(1 + k % 3);
        unsigned d = static_cast<unsigned>(3 + (k / 3) % 3);
        Poly p = k % 2 == 0 ? power_sum_of_rows(random_invertible(g, n, -5, 5), d) : random_homogeneous(g, n, d, 8);
        if (p.is_zero()) p = var_pow(n, 0, d);
        auto truth = decide_full_slices(p, FieldMode::Complex, d);
        Oracle o = from_poly(p, d);
        auto r = decide_equiv(o, FieldMode::Complex, seeded(static_cast<std::uint64_t>(k)));
        Oracle fresh = from_poly(p, d);
        slice_triple(fresh);
        worst_calls = std::max<std::uint64_t>(worst_calls, fresh.calls());
        budget_ok = budget_ok && fresh.calls() <= 10u * n * n * d;
        ++total;
        truth.accepted ? ++positives : ++negatives;
        bound_pos = std::max(bound_pos, r.error_bound_positive);
        bound_neg = std::max(bound_neg, r.error_bound_negative);
        if (r.accepted == truth.accepted) ++agree;
        else if (truth.accepted) ++false_reject;
        else ++false_accept;
    }
    // Each side may disagree at most as often as its single-trial bound allows (mean + 3 sigma, at least one).
    auto allowed = [](int count, double bound) {
        double mean = count * bound;
        return std::max(1.0, mean + 3.0 * std::sqrt(mean));
    };
    bool sides_ok = false_reject <= allowed(positives, bound_pos) && false_accept <= allowed(negatives, bound_neg);
    double rate = static_cast<double>(agree) / total;
    char buf[220];
    std::snprintf(buf, sizeof buf, "agree %d/%d (rate %.3f, need >= 0.99); false rejects %d of %d, false accepts %d of %d; "
                  "max slice calls %llu within 10n^2d=%s",
                  agree, total, rate, false_reject, positives, false_accept, negatives,
                  static_cast<unsigned long long>(worst_calls), budget_ok ? "yes" : "no");
    return {rate >= 0.99 && sides_ok && budget_ok && positives > 50 && negatives > 50, buf};
}

std::vector<std::vector<Matrix>> noncommuting_families() {
    std::mt19937_64 g(5005);
    std::vector<std::vector<Matrix>> out;
    for (int k = 0; k < 20; ++k) {
        std::size_t size = static_cast<std::size_t>(2 + k % 9);
        std::size_t n = static_cast<std::size_t>(2 + k % 5);
        std::vector<Matrix> fam;
        if (k % 4 == 0) {
            // commuting diagonal family plus a single offending matrix
            for (std::size_t i = 0; i + 1 < size; ++i) {
                Vector dvec = random_int_vector(g, n, -3, 3);
                fam.push_back(Matrix::diagonal(dvec));
            }
            Matrix e(n, n);
            e(0, 1) = Rational{1};
            fam.push_back(e);
            fam.front()(0, 0) += Rational{1};  // make sure the diagonal part separates e1 and e2
            fam.front()(1, 1) -= Rational{1};
        } else {
            for (std::size_t i = 0; i < size; ++i) fam.push_back(random_int_matrix(g, n, n, -2, 2));
        }
        out.push_back(std::move(fam));
    }
    return out;
}

bool pairwise_commute(const std::vector<Matrix>& fam) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (!commutes(fam[i], fam[j])) return false;
    return true;
}

// 5. Randomized family commutativity test.
Outcome commutativity_lemma() {
    auto t0 = std::chrono::steady_clock::now();
    const int trials = 10000;
    const std::uint64_t set_size = 100;
    const double p = 2.0 / set_size, limit = p + 3.0 * std::sqrt(p * (1 - p) / trials);
    double worst = 0.0;
    bool all_noncommuting = true;
    for (const auto& fam : noncommuting_families()) {
        all_noncommuting = all_noncommuting && !pairwise_commute(fam);
        RandomStream rng(5, RandomStream::id(RandomStream::Combine, 0));
        int accepts = 0;
        for (int t = 0; t < trials; ++t) accepts += family_commutes_randomized(fam, set_size, rng);
        worst = std::max(worst, static_cast<double>(accepts) / trials);
    }
    std::mt19937_64 g(5006);
    int false_rejects = 0;
    for (int k = 0; k < 20; ++k) {
        std::size_t n = static_cast<std::size_t>(2 + k % 5);
        Matrix base = random_int_matrix(g, n, n, -2, 2);
        std::vector<Matrix> fam;
        Matrix power = Matrix::identity(n);
        for (int j = 0; j < 2 + k % 9; ++j) {
            fam.push_back(Rational{uniform_int(g, -3, 3)} * power);
            power = power * base;
        }
        RandomStream rng(6, RandomStream::id(RandomStream::Combine, static_cast<std::uint64_t>(k)));
        for (int t = 0; t < 1000; ++t) false_rejects += !family_commutes_randomized(fam, set_size, rng);
    }
    double secs = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof buf, "worst false-accept rate %.4f (limit %.4f) over 20 families x %d trials; "
                  "false rejects on commuting families %d; time=%.1fs",
                  worst, limit, trials, false_rejects, secs);
    return {all_noncommuting && worst <= limit && false_rejects == 0, buf};
}

// 6. Variable minimization.
Outcome variable_minimization() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 g(6006);
    int count_ok = 0, accepted = 0, total = 0;
    for (int k = 0; k < 100; ++k) {
        std::size_t r = static_cast<std::size_t>(1 + k % 4);
        std::size_t n = r + 3;
        unsigned d = static_cast<unsigned>(3 + (k / 4) % 3);
        Matrix forms = random_int_matrix(g, r, n, -5, 5);
        while (rank(forms) < r) forms = random_int_matrix(g, r, n, -5, 5);
        std::vector<Rational> alphas;
        for (std::size_t i = 0; i < r; ++i) alphas.emplace_back(uniform_int(g, 1, 9) * (uniform_int(g, 0, 1) ? 1 : -1), uniform_int(g, 1, 4));
        Oracle o = from_power_sum(alphas, rows_of(forms), d);
        FieldMode mode = k % 2 ? FieldMode::Real : FieldMode::Complex;
        auto rep = decide_waring(o, mode, seeded(static_cast<std::uint64_t>(k)));
        count_ok += rep.essential_count == r;
        accepted += rep.accepted;
        ++total;
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "essential_count correct %d/%d, accepted %d/%d (need >= 99%%) time=%.1fs", count_ok, total,
                  accepted, total, secs);
    return {count_ok >= 99 && accepted >= 99 && secs < 60.0, buf};
}

// 7. Exact linear algebra properties.
Outcome exact_linear_algebra() {
    std::mt19937_64 g(7007);
    int ch_ok = 0, inv_ok = 0, inv_total = 0;
    for (int k = 0; k < 200; ++k) {
        std::size_t n = static_cast<std::size_t>(1 + k % 6);
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(uniform_int(g, -9, 9), uniform_int(g, 1, 6));
        ch_ok += eval_at_matrix(charpoly(m), m).is_zero();
        if (!det(m).is_zero()) {
            ++inv_total;
            inv_ok += invert(m) * m == Matrix::identity(n);
        }
    }
    int sf_ok = 0;
    for (int k = 0; k < 50; ++k) {
        UniPoly p{Rational{1}};
        for (long f = 0; f < 1 + k % 6; ++f) p = p * UniPoly{Rational{uniform_int(g, -3, 3)}, Rational{1}};
        UniPoly s = squarefree_part(p);
        sf_ok += gcd(s, s.derivative()) == UniPoly{Rational{1}};
    }
    int diag_ok = 0;
    auto corpus = diagonalizability_corpus();
    for (const auto& c : corpus)
        diag_ok += is_diagonalizable(c.m, FieldMode::Complex) == c.complex_diag &&
                   is_diagonalizable(c.m, FieldMode::Real) == c.real_diag;
    int sturm_ok = 0;
    auto polys = factored_corpus(g, 50);
    for (const auto& f : polys) sturm_ok += sturm_count(f.p) == f.real_roots && grid_sign_changes(f.p) == f.real_roots;
    char buf[220];
    std::snprintf(buf, sizeof buf, "cayley-hamilton %d/200, inverse %d/%d, squarefree %d/50, diagonalizable %d/%zu, sturm %d/%zu",
                  ch_ok, inv_ok, inv_total, sf_ok, diag_ok, corpus.size(), sturm_ok, polys.size());
    return {ch_ok == 200 && inv_ok == inv_total && sf_ok == 50 && diag_ok == static_cast<int>(corpus.size()) &&
                corpus.size() == 30 && sturm_ok == static_cast<int>(polys.size()),
            buf};
}

// 8. Bit growth on n = 6, d = 8 with 16-bit integer coefficients and form entries.
Outcome bit_growth() {
    std::mt19937_64 g(8008);
    double worst_secs = 0.0;
    std::size_t worst_bits = 0;
    bool all_accepted = true;
    for (int k = 0; k < 3; ++k) {
        const std::size_t n = 6;
        const unsigned d = 8;
        Matrix forms = random_int_matrix(g, n, n, -32768, 32767);
        while (det(forms).is_zero()) forms = random_int_matrix(g, n, n, -32768, 32767);
        std::vector<Rational> alphas;
        for (std::size_t i = 0; i < n; ++i) alphas.emplace_back(uniform_int(g, 1, 32767) * (uniform_int(g, 0, 1) ? 1 : -1));
        Oracle o = from_power_sum(alphas, rows_of(forms), d);
        auto t0 = std::chrono::steady_clock::now();
        BitTracker::instance().enable();
        bool acc = decide_equiv(o, FieldMode::Real, seeded(static_cast<std::uint64_t>(k))).accepted;
        BitTracker::instance().disable();
        worst_secs = std::max(worst_secs, seconds_since(t0));
        worst_bits = std::max(worst_bits, BitTracker::instance().max_bits());
        all_accepted = all_accepted && acc;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "accepted=%d slowest decision %.2fs (limit 10s), largest intermediate %zu bits (limit 1e6)",
                  all_accepted, worst_secs, worst_bits);
    return {all_accepted && worst_secs < 10.0 && worst_bits < 1000000, buf};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 paper example", paper_example},
        {"2 positive rate", positive_rate},
        {"3 negative rate", negative_rate},
        {"4 oracle agreement", oracle_agreement},
        {"5 commutativity lemma", commutativity_lemma},
        {"6 variable minimization", variable_minimization},
        {"7 exact linear algebra", exact_linear_algebra},
        {"8 bit growth", bit_growth},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
