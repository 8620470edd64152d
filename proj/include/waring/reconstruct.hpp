#ifndef WARING_RECONSTRUCT_HPP
#define WARING_RECONSTRUCT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "decide.hpp"
#include "interp.hpp"
#include "oracle.hpp"
#include "randcheck.hpp"

namespace waring {

using Complex = std::complex<double>;
using FloatMatrix = Eigen::MatrixXcd;
using FloatVector = Eigen::VectorXcd;

class DegenerateSpectrum : public std::runtime_error {
public:
    explicit DegenerateSpectrum(double gap)
        : std::runtime_error("eigenvalues are not separated (relative gap " + std::to_string(gap) + ")"), gap_(gap) {}
    double gap() const { return gap_; }

private:
    double gap_;
};

struct ReconstructOptions {
    double gap_tol = 1e-8;
    double res_tol = 1e-6;
    unsigned retry_max = 3;
    std::size_t verify_points = 20;
    double imag_tol = 1e-8;
};

struct Eigendecomposition {
    FloatMatrix vectors;  // columns are eigenvectors
    FloatVector values;
};

inline Eigen::MatrixXd to_float(const Matrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_double();
    return out;
}

/*
 * Numeric eigendecomposition of an exact matrix. Throws DegenerateSpectrum when two
 * eigenvalues are closer than gap_tol relative to their magnitude.
 */
inline Eigendecomposition eigendecompose(const Matrix& m, double gap_tol = 1e-8) {
    if (!m.is_square()) throw DimensionError("eigendecompose: matrix must be square");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_float(m));
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecompose: eigensolver did not converge");
    Eigendecomposition out{solver.eigenvectors(), solver.eigenvalues()};
    const auto n = out.values.size();
    double worst = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double scale = std::max({std::abs(out.values[i]), std::abs(out.values[j]), 1e-300});
            worst = std::min(worst, std::abs(out.values[i] - out.values[j]) / scale);
        }
    if (worst < gap_tol) throw DegenerateSpectrum(worst);
    return out;
}

/*
 * o at a complex point a + i b. Since o only takes rationals, read g(s) = o(a + s b)
 * at s = 0..d with a, b converted exactly from doubles, interpolate, and sum the
 * real and imaginary parts of g(i) exactly before rounding.
 */
inline Complex eval_complex(const Oracle& o, const FloatVector& v) {
    const std::size_t n = o.nvars();
    Vector re(n), im(n);
    bool real = true;
    for (std::size_t k = 0; k < n; ++k) {
        re[k] = Rational::from_double(v[static_cast<Eigen::Index>(k)].real());
        im[k] = Rational::from_double(v[static_cast<Eigen::Index>(k)].imag());
        real = real && im[k].is_zero();
    }
    if (real) return {o(re).to_double(), 0.0};
    UniPoly g = restrict_to_line(o, re, im);
    Rational real_part, imag_part;
    for (std::size_t k = 0; k < g.coefficients().size(); ++k) {
        const Rational& c = g.coefficients()[k];
        switch (k % 4) {
        case 0: real_part += c; break;
        case 1: imag_part += c; break;
        case 2: real_part -= c; break;
        case 3: imag_part -= c; break;
        }
    }
    return {real_part.to_double(), imag_part.to_double()};
}

struct DecompositionTerm {
    Complex alpha;
    std::vector<Complex> form;
};

struct Decomposition {
    std::vector<DecompositionTerm> terms;
    double residual = 0.0;
    bool real = false;  // every alpha and form is real
    unsigned attempts = 1;
    DecisionReport decision;
};

// sum_i alpha_i <l_i, v>^d
inline Complex evaluate_terms(const std::vector<DecompositionTerm>& terms, const std::vector<double>& v, unsigned d) {
    Complex acc{0.0, 0.0};
    for (const auto& t : terms) {
        Complex dot{0.0, 0.0};
        for (std::size_t k = 0; k < v.size(); ++k) dot += t.form[k] * v[k];
        acc += t.alpha * std::pow(dot, static_cast<int>(d));
    }
    return acc;
}

/*
 * max_v |f(v) - sum alpha_i <l_i, v>^d| / max_v |f(v)| over random rational points
 * p/q with |p| <= 9, 1 <= q <= 5, drawn from stream (Verify, 0).
 */
inline double residual(const Oracle& o, const std::vector<DecompositionTerm>& terms, std::size_t npoints,
                       std::uint64_t seed) {
    RandomStream rng(seed, RandomStream::id(RandomStream::Verify, 0));
    const std::size_t n = o.nvars();
    double worst = 0.0, scale = 0.0;
    for (std::size_t p = 0; p < npoints; ++p) {
        Vector v(n);
        std::vector<double> vf(n);
        for (std::size_t k = 0; k < n; ++k) {
            long num = static_cast<long>(rng.below(19)) - 9;
            long den = static_cast<long>(rng.below(5)) + 1;
            v[k] = Rational(num, den);
            vf[k] = v[k].to_double();
        }
        double exact = o(v).to_double();
        scale = std::max(scale, std::abs(exact));
        worst = std::max(worst, std::abs(Complex{exact, 0.0} - evaluate_terms(terms, vf, o.degree())));
    }
    return scale > 0.0 ? worst / scale : worst;
}

namespace detail {

// Scale each form so its first significant coordinate is 1; alpha absorbs c^d.
inline void normalize_terms(std::vector<DecompositionTerm>& terms, unsigned d) {
    for (auto& t : terms) {
        double mx = 0.0;
        for (const auto& x : t.form) mx = std::max(mx, std::abs(x));
        if (mx == 0.0) continue;
        for (const auto& x : t.form) {
            if (std::abs(x) > 1e-8 * mx) {
                Complex c = x;
                for (auto& y : t.form) y /= c;
                t.alpha *= std::pow(c, static_cast<int>(d));
                break;
            }
        }
    }
}

inline bool lex_less(const DecompositionTerm& a, const DecompositionTerm& b) {
    for (std::size_t k = 0; k < a.form.size(); ++k) {
        if (a.form[k].real() != b.form[k].real()) return a.form[k].real() < b.form[k].real();
        if (a.form[k].imag() != b.form[k].imag()) return a.form[k].imag() < b.form[k].imag();
    }
    return false;
}

inline bool nearly_real(Complex z, double tol) { return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z)); }

} // namespace detail

/*
 * Terms from an accepted trial: with T1^{-1}T2 = P diag P^{-1} the forms are the rows
 * of (R P)^{-1} and alpha_i = o(R P e_i).
 */
inline std::vector<DecompositionTerm> terms_from_pencil(const Oracle& o, const Matrix& change, const Matrix& pencil,
                                                        double gap_tol) {
    auto eig = eigendecompose(pencil, gap_tol);
    FloatMatrix q = to_float(change).cast<Complex>() * eig.vectors;
    FloatMatrix forms = q.inverse();
    const auto n = q.rows();
    std::vector<DecompositionTerm> terms(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        auto& t = terms[static_cast<std::size_t>(i)];
        t.alpha = eval_complex(o, q.col(i));
        t.form.resize(static_cast<std::size_t>(n));
        for (Eigen::Index k = 0; k < n; ++k) t.form[static_cast<std::size_t>(k)] = forms(i, k);
    }
    detail::normalize_terms(terms, o.degree());
    return terms;
}

enum class ReconstructStatus { Decomposed, Rejected, Failed };

struct ReconstructOutcome {
    ReconstructStatus status = ReconstructStatus::Rejected;
    DecisionReport decision;
    std::optional<Decomposition> decomposition;
    std::string failure;
};

/*
 * Decides and, on acceptance, recovers f = sum alpha_i l_i^d. Attempt k uses stream
 * (ChangeOfBasis, k); the first attempt is the decision. Later attempts are fresh
 * draws of R after a degenerate spectrum or a residual above res_tol.
 */
inline ReconstructOutcome reconstruct(const Oracle& o, FieldMode mode, const SampleConfig& cfg = {},
                                      const ReconstructOptions& opts = {}) {
    cfg.validate();
    detail::check_decidable(o);
    const std::uint64_t calls_before = o.calls();
    ReconstructOutcome out;
    out.decision = detail::make_report(o, mode, cfg);

    for (unsigned attempt = 0; attempt <= opts.retry_max; ++attempt) {
        RandomStream rng(cfg.seed, RandomStream::id(RandomStream::ChangeOfBasis, attempt));
        auto trial = detail::decision_trial(o, mode, cfg.set_size, rng);
        if (attempt == 0) {
            out.decision.trial_stages = {trial.stage};
            out.decision.stage = trial.stage;
            out.decision.accepted = trial.stage == Stage::Accepted;
            if (!out.decision.accepted) {
                out.status = ReconstructStatus::Rejected;
                out.decision.oracle_calls = o.calls() - calls_before;
                return out;
            }
        }
        if (trial.stage != Stage::Accepted) {
            out.failure = "retry rejected at stage " + std::string(to_string(trial.stage));
            continue;
        }
        std::vector<DecompositionTerm> terms;
        try {
            terms = terms_from_pencil(o, trial.change, trial.pencil, opts.gap_tol);
        } catch (const DegenerateSpectrum& e) {
            out.failure = e.what();
            continue;
        }
        double res = residual(o, terms, opts.verify_points, cfg.seed);
        if (!(res <= opts.res_tol)) {
            out.failure = "residual " + std::to_string(res) + " above tolerance";
            continue;
        }
        Decomposition dec;
        dec.real = std::all_of(terms.begin(), terms.end(), [&](const DecompositionTerm& t) {
            return detail::nearly_real(t.alpha, opts.imag_tol) &&
                   std::all_of(t.form.begin(), t.form.end(), [&](Complex z) { return detail::nearly_real(z, opts.imag_tol); });
        });
        if (mode == FieldMode::Real && dec.real) {
            for (auto& t : terms) {
                t.alpha = {t.alpha.real(), 0.0};
                for (auto& z : t.form) z = {z.real(), 0.0};
            }
        }
        std::sort(terms.begin(), terms.end(), detail::lex_less);
        dec.terms = std::move(terms);
        dec.residual = res;
        dec.attempts = attempt + 1;
        out.status = ReconstructStatus::Decomposed;
        out.failure.clear();
        out.decision.oracle_calls = o.calls() - calls_before;
        dec.decision = out.decision;
        out.decomposition = std::move(dec);
        return out;
    }
    out.status = ReconstructStatus::Failed;
    out.decision.oracle_calls = o.calls() - calls_before;
    return out;
}

} // namespace waring

#endif
