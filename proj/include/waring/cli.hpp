#ifndef WARING_CLI_HPP
#define WARING_CLI_HPP

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "waring.hpp"

namespace waring::cli {

enum class Format { Human, Json };

struct RunConfig {
    std::string command;            // decide | minvars | reconstruct | selftest
    std::string expression;         // inline input
    std::string input_path;         // file input, expression or structured JSON
    std::optional<std::size_t> nvars;
    std::optional<unsigned> degree; // declared degree; needed for the zero polynomial
    FieldMode mode = FieldMode::Complex;
    std::uint64_t set_size = std::uint64_t{1} << 31;
    std::uint64_t seed = 0;
    unsigned trials = 1;
    Format format = Format::Human;
};

enum ExitCode : int { Accept = 0, Reject = 1, UsageError = 2 };

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Poly load_input(const RunConfig& cfg) {
    std::string text = cfg.expression;
    if (!cfg.input_path.empty()) {
        std::ifstream in(cfg.input_path);
        if (!in) throw InputError("cannot open input file '" + cfg.input_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InputError("empty input");
    if (text[first] == '{') {
        try {
            return poly_from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw InputError(std::string("malformed structured input: ") + e.what());
        }
    }
    return parse_poly(text, cfg.nvars);
}

inline Oracle homogeneous_oracle(const RunConfig& cfg, const Poly& p) {
    unsigned d = cfg.degree ? *cfg.degree : p.degree();
    if (p.is_zero() && !cfg.degree) throw InputError("zero polynomial needs --degree");
    if (!p.is_homogeneous(d)) throw InputError("input is not homogeneous of degree " + std::to_string(d));
    if (d < 3) throw InputError("degree must be at least 3");
    if (p.nvars() == 0) throw InputError("input has no variables");
    return from_poly(p, d);
}

// Human format: one "key: value" line per top-level field of the structured report.
inline void print_human(std::ostream& out, const json& report, const std::string& indent = "") {
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            print_human(out, value, indent + "  ");
        } else if (key == "terms" && value.is_array()) {
            out << indent << "terms:" << (value.empty() ? " none" : "") << "\n";
            for (const auto& t : value) out << indent << "  " << t.dump() << "\n";
        } else if (value.is_string()) {
            out << indent << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << indent << key << ": " << value.dump() << "\n";
        }
    }
}

inline void emit(std::ostream& out, const RunConfig& cfg, json report) {
    if (cfg.format == Format::Json) {
        out << report.dump(2) << "\n";
    } else {
        print_human(out, report);
    }
}

struct SelftestCase {
    std::string name;
    std::function<bool()> check;
};

inline std::vector<SelftestCase> selftest_cases(const SampleConfig& sc) {
    auto accepts = [sc](const char* expr, FieldMode mode) {
        return decide_equiv(from_poly(parse_poly(expr)), mode, sc).accepted;
    };
    return {
        {"sum of cubes accepted", [=] { return accepts("x1^3 + x2^3 + x3^3", FieldMode::Complex); }},
        {"2*x1^3 + 12*x1*x2^2 accepted over R", [=] { return accepts("2*x1^3 + 12*x1*x2^2", FieldMode::Real); }},
        {"2*x1^3 + 12*x1*x2^2 accepted over C", [=] { return accepts("2*x1^3 + 12*x1*x2^2", FieldMode::Complex); }},
        {"x1^2*x2 rejected", [=] { return !accepts("x1^2*x2", FieldMode::Complex); }},
        {"x1^3 - 3*x1*x2^2 rejected over R only",
         [=] { return accepts("x1^3 - 3*x1*x2^2", FieldMode::Complex) && !accepts("x1^3 - 3*x1*x2^2", FieldMode::Real); }},
        {"x1^2*x2 + x2^2*x3 + x3^2*x1 agrees with full slices",
         [=] {
             Poly p = parse_poly("x1^2*x2 + x2^2*x3 + x3^2*x1");
             return decide_equiv(from_poly(p), FieldMode::Complex, sc).accepted ==
                    decide_full_slices(p, FieldMode::Complex).accepted;
         }},
        {"reconstruct 2*x1^3 + 12*x1*x2^2",
         [=] {
             auto r = reconstruct(from_poly(parse_poly("2*x1^3 + 12*x1*x2^2")), FieldMode::Real, sc);
             return r.status == ReconstructStatus::Decomposed && r.decomposition->residual < 1e-9;
         }},
        {"essential variables of (x1+x2)^3 in 3 variables",
         [=] { return essential_count_and_basis(from_poly(parse_poly("(x1+x2)^3", 3)), sc).count == 1; }},
    };
}

/*
 * Runs one command. Exit status: 0 accept/success, 1 reject, 2 usage or input error.
 * Errors are written to `err`; the report goes to `out`.
 */
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SampleConfig sc{cfg.set_size, cfg.seed, cfg.trials};
    try {
        sc.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    }

    if (cfg.command == "selftest") {
        bool all = true;
        json results = json::array();
        for (const auto& c : selftest_cases(sc)) {
            bool ok = false;
            try {
                ok = c.check();
            } catch (const std::exception&) {
                ok = false;
            }
            all = all && ok;
            results.push_back({{"case", c.name}, {"pass", ok}});
        }
        if (cfg.format == Format::Json) {
            out << json{{"verdict", all ? "pass" : "fail"}, {"seed", sc.seed}, {"cases", results}}.dump(2) << "\n";
        } else {
            for (const auto& r : results)
                out << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["case"].get<std::string>() << "\n";
        }
        return all ? Accept : Reject;
    }

    std::optional<Oracle> loaded;
    try {
        loaded = homogeneous_oracle(cfg, load_input(cfg));
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return UsageError;
    }
    const Oracle& oracle = *loaded;

    if (cfg.command == "decide") {
        auto report = decide_equiv(oracle, cfg.mode, sc);
        emit(out, cfg, report_to_json(report));
        return report.accepted ? Accept : Reject;
    }
    if (cfg.command == "minvars") {
        auto report = decide_waring(oracle, cfg.mode, sc);
        emit(out, cfg, report_to_json(report));
        return report.accepted ? Accept : Reject;
    }
    if (cfg.command == "reconstruct") {
        auto outcome = reconstruct(oracle, cfg.mode, sc);
        emit(out, cfg, report_to_json(outcome));
        return outcome.status == ReconstructStatus::Decomposed ? Accept : Reject;
    }
    err << "error: unknown command '" << cfg.command << "'\n";
    return UsageError;
}

} // namespace waring::cli

#endif
