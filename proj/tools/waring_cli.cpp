#include <iostream>
#include <utility>

#include <CLI11.hpp>

#include <waring/cli.hpp>

namespace {

void add_common(CLI::App* sub, waring::cli::RunConfig& cfg, bool with_input) {
    sub->add_option_function<std::string>(
           "--mode", [&cfg](const std::string& m) { cfg.mode = m == "real" ? waring::FieldMode::Real : waring::FieldMode::Complex; },
           "field: complex or real")
        ->check(CLI::IsMember({"complex", "real"}));
    sub->add_option("--set-size", cfg.set_size, "sample set {1..N}")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "independent trials (majority vote)")->check(CLI::PositiveNumber);
    sub->add_option_function<std::string>(
           "--format", [&cfg](const std::string& f) { cfg.format = f == "json" ? waring::cli::Format::Json : waring::cli::Format::Human; },
           "output format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    if (!with_input) return;
    auto* expr = sub->add_option("expression", cfg.expression, "polynomial, e.g. \"x1^3 + x2^3\"");
    auto* file = sub->add_option("--input", cfg.input_path, "file with an expression or a structured coefficient map");
    expr->excludes(file);
    sub->add_option("--nvars", cfg.nvars, "ambient variable count (default: largest index)");
    sub->add_option("--degree", cfg.degree, "declared degree (needed for the zero polynomial)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide and reconstruct Waring decompositions of homogeneous polynomials"};
    app.require_subcommand(1);
    waring::cli::RunConfig cfg;
    const std::pair<const char*, const char*> commands[] = {
        {"decide", "test whether f is a sum of n d-th powers of independent linear forms"},
        {"minvars", "find the essential variable count and a change of variables exposing it"},
        {"reconstruct", "decide, then recover the linear forms and coefficients"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, cfg, true);
        sub->callback([&cfg, name] { cfg.command = name; });
    }
    auto* selftest = app.add_subcommand("selftest", "run the built-in sanity corpus");
    add_common(selftest, cfg, false);
    selftest->callback([&cfg] { cfg.command = "selftest"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return waring::cli::UsageError;
    }
    if (cfg.command != "selftest" && cfg.expression.empty() && cfg.input_path.empty()) {
        std::cerr << "error: an expression or --input FILE is required\n";
        return waring::cli::UsageError;
    }
    return waring::cli::run(cfg, std::cout, std::cerr);
}
