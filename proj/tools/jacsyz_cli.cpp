// jacsyz: Milnor algebra, syzygy and saturation invariants of a homogeneous
// polynomial.
//
//   jacsyz analyze --poly "x^2*y^2 + z^4" --vars x,y,z
//   jacsyz corpus --filter xpyq

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "jacsyz/analyzer.hpp"
#include "jacsyz/corpus.hpp"
#include "jacsyz/errors.hpp"
#include "jacsyz/poly.hpp"

namespace {

using namespace jacsyz;

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::uint64_t seed_or_random(std::optional<std::uint64_t> seed) {
    return seed ? *seed : std::random_device{}();
}

int run_analyze(const std::string& poly, const std::string& var_list, const std::string& field,
                std::optional<int> kmax, const std::string& json_path, const std::string& csv_path,
                const std::vector<int>& ci_degrees, std::optional<std::uint64_t> seed) {
    std::mt19937_64 rng(seed_or_random(seed));
    AnalyzeOptions options;
    options.field = parse_field(field, rng);
    options.kmax = kmax;
    if (!ci_degrees.empty()) options.ci_degrees = ci_degrees;

    const auto vars = parse_vars(var_list);
    const auto f = parse_poly(poly, vars);
    const auto report = analyze(f, vars, options);

    const std::string json = to_json(report).dump(2) + "\n";
    if (json_path.empty() || json_path == "-")
        std::cout << json;
    else
        write_file(json_path, json);
    if (!csv_path.empty()) {
        if (csv_path == "-")
            std::cout << to_csv(report);
        else
            write_file(csv_path, to_csv(report));
    }
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    return exit_code(report);
}

int run_corpus_command(const std::string& filter, const std::string& field, std::optional<std::uint64_t> seed) {
    std::mt19937_64 rng(seed_or_random(seed));
    AnalyzeOptions options;
    options.field = parse_field(field, rng);
    const auto summary = jacsyz::run_corpus(filter, options);
    if (summary.outcomes.empty()) {
        std::cerr << "no corpus entry matches '" << filter << "'\n";
        return 1;
    }
    for (const auto& o : summary.outcomes) {
        const int code = exit_code(o.report);
        const char* status = code == 3 ? "NON-ISOLATED" : code != 0 ? "IDENTITY-FAIL"
                             : o.mismatches.empty() ? "ok" : "GOLDEN-FAIL";
        std::cout << o.name << ": " << status << "\n";
        for (const auto& c : o.report.checks)
            if (!c.conjecture && c.pass == false)
                std::cout << "  identity " << c.name << ": " << c.lhs.dump() << " != " << c.rhs.dump() << "\n";
        for (const auto& m : o.mismatches)
            std::cout << "  " << m.field << ": expected " << m.expected.dump() << ", got " << m.got.dump() << "\n";
    }
    if (summary.modular) std::cout << "field " << options.field.name() << ": golden mismatches are not fatal\n";
    return summary.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian ideal invariants of homogeneous polynomials"};
    app.require_subcommand(1);

    std::string poly, vars, field = "exact", json_path, csv_path, filter;
    std::optional<int> kmax;
    std::optional<std::uint64_t> seed;
    std::vector<int> ci_degrees;

    auto* analyze_cmd = app.add_subcommand("analyze", "Compute every invariant of one polynomial");
    analyze_cmd->add_option("--poly", poly, "Homogeneous polynomial, e.g. \"x^2*y^2 + z^4\"")->required();
    analyze_cmd->add_option("--vars", vars, "Comma-separated variables, e.g. x,y,z")->required();
    analyze_cmd->add_option("--field", field, "exact, mod:<prime> or mod:random");
    analyze_cmd->add_option("--kmax", kmax, "Largest degree to tabulate (default T + 2n + 4)");
    analyze_cmd->add_option("--json", json_path, "Write the JSON report here (default: stdout)");
    analyze_cmd->add_option("--csv", csv_path, "Write the per-degree table here ('-' for stdout)");
    analyze_cmd->add_option("--ci-degrees", ci_degrees, "Candidate complete-intersection degrees")->delimiter(',');
    analyze_cmd->add_option("--seed", seed, "Seed for mod:random");

    auto* corpus_cmd = app.add_subcommand("corpus", "Run the built-in examples against their expected values");
    corpus_cmd->add_option("--filter", filter, "Only entries whose name contains this");
    corpus_cmd->add_option("--field", field, "exact, mod:<prime> or mod:random");
    corpus_cmd->add_option("--seed", seed, "Seed for mod:random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze_cmd) return run_analyze(poly, vars, field, kmax, json_path, csv_path, ci_degrees, seed);
        return run_corpus_command(filter, field, seed);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << " at position " << e.position() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}
