#ifndef WARING_IO_HPP
#define WARING_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "decide.hpp"
#include "minvars.hpp"
#include "poly.hpp"
#include "reconstruct.hpp"

namespace waring {

using json = nlohmann::ordered_json;

/*
 * Structured coefficient-map format:
 *   {"nvars": 2, "terms": [{"exponents": [3, 0], "coeff": "2"},
 *                          {"exponents": [1, 2], "coeff": "12"}]}
 * Coefficients are rational strings "a" or "a/b".
 */
inline json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m.exponents()}, {"coeff", c.to_string()}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

inline Poly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
        throw std::invalid_argument("structured polynomial needs 'nvars' and 'terms'");
    const auto n = j.at("nvars").get<std::size_t>();
    Poly p(n);
    for (const auto& t : j.at("terms")) {
        auto exps = t.at("exponents").get<std::vector<unsigned>>();
        if (exps.size() != n) throw DimensionError("structured polynomial: exponent vector has wrong length");
        const auto& c = t.at("coeff");
        Rational coeff = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>());
        p.add_term(Monomial(std::move(exps)), coeff);
    }
    return p;
}

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

inline json report_to_json(const DecisionReport& r) {
    json stages = json::array();
    for (auto s : r.trial_stages) stages.push_back(to_string(s));
    json j{
        {"verdict", r.accepted ? "accept" : "reject"},
        {"stage", to_string(r.stage)},
        {"mode", to_string(r.mode)},
        {"nvars", r.nvars},
        {"degree", r.degree},
        {"seed", r.cfg.seed},
        {"set_size", r.cfg.set_size},
        {"trials", r.cfg.trials},
        {"bounds", {{"positive", r.error_bound_positive}, {"negative", r.error_bound_negative}}},
        {"calls", r.oracle_calls},
        {"trial_stages", stages},
    };
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline json report_to_json(const MinvarsReport& r) {
    json j{
        {"verdict", r.accepted ? "accept" : "reject"},
        {"stage", r.inner ? std::string(to_string(r.inner->stage)) : std::string("accepted")},
        {"mode", to_string(r.mode)},
        {"nvars", r.nvars},
        {"degree", r.degree},
        {"seed", r.cfg.seed},
        {"set_size", r.cfg.set_size},
        {"trials", r.cfg.trials},
        {"essential_count", r.essential_count},
        {"change_matrix", matrix_to_json(r.change)},
        {"bounds", {{"rank", r.error_bound_rank}}},
        {"calls", r.oracle_calls},
    };
    if (r.inner) j["inner"] = report_to_json(*r.inner);
    return j;
}

inline json decomposition_terms_to_json(const std::vector<DecompositionTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms) {
        json form = json::array();
        for (auto z : t.form) form.push_back(complex_to_json(z));
        out.push_back({{"alpha", complex_to_json(t.alpha)}, {"form", form}});
    }
    return out;
}

inline json report_to_json(const ReconstructOutcome& r) {
    json j = report_to_json(r.decision);
    switch (r.status) {
    case ReconstructStatus::Decomposed:
        j["terms"] = decomposition_terms_to_json(r.decomposition->terms);
        j["residual"] = r.decomposition->residual;
        j["real"] = r.decomposition->real;
        j["attempts"] = r.decomposition->attempts;
        break;
    case ReconstructStatus::Failed:
        j["verdict"] = "reject";
        j["stage"] = "reconstruction_failed";
        j["failure"] = r.failure;
        j["terms"] = json::array();
        break;
    case ReconstructStatus::Rejected: j["terms"] = json::array(); break;
    }
    return j;
}

} // namespace waring

#endif
