// covmat — covering rough set approximations, set-theoretically and via
// Boolean characteristic-matrix formulas.
//
// Exit codes: 0 success; 1 identity verification failure; 2 parse or
// validation error; 3 route/scheme mismatch.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covmat/covering_io.hpp"
#include "covmat/format.hpp"
#include "covmat/matrix_route.hpp"
#include "covmat/operators.hpp"
#include "covmat/random_covering.hpp"

namespace {

using namespace covmat;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitRouteMismatch = 3;

struct RouteMismatch {
    std::string message;
};

enum class Bound { Lower, Upper };
enum class Route { Oracle, Matrix, Legacy, Both };

OperatorScheme parse_scheme(const std::string& s) {
    if (s == "second") return OperatorScheme::Second;
    if (s == "fifth") return OperatorScheme::Fifth;
    if (s == "sixth") return OperatorScheme::Sixth;
    return OperatorScheme::SixthDual;  // "sixth-dual", guarded by CLI11 IsMember
}

Bound parse_bound(const std::string& s) { return s == "lower" ? Bound::Lower : Bound::Upper; }

Route parse_route(const std::string& s) {
    if (s == "oracle") return Route::Oracle;
    if (s == "matrix") return Route::Matrix;
    if (s == "legacy") return Route::Legacy;
    return Route::Both;
}

// SH/SL/IH/IL/XH/XL plus the dual pair; the customary operator symbols.
std::string operator_label(OperatorScheme scheme, Bound bound, bool legacy) {
    if (legacy) return "XL_legacy";
    switch (scheme) {
        case OperatorScheme::Second:
            return bound == Bound::Upper ? "SH" : "SL";
        case OperatorScheme::Fifth:
            return bound == Bound::Upper ? "IH" : "IL";
        case OperatorScheme::Sixth:
            return bound == Bound::Upper ? "XH" : "XL";
        case OperatorScheme::SixthDual:
            return bound == Bound::Upper ? "XH^d" : "XL^d";
    }
    return "?";
}

MatrixFormula formula_for(OperatorScheme scheme, Bound bound) {
    switch (scheme) {
        case OperatorScheme::Second:
            return bound == Bound::Upper ? MatrixFormula::SecondUpper : MatrixFormula::SecondLower;
        case OperatorScheme::Fifth:
            return bound == Bound::Upper ? MatrixFormula::FifthUpper : MatrixFormula::FifthLower;
        case OperatorScheme::Sixth:
            return bound == Bound::Upper ? MatrixFormula::SixthUpper
                                         : MatrixFormula::SixthLowerCorrected;
        case OperatorScheme::SixthDual:
            return bound == Bound::Upper ? MatrixFormula::SixthDualUpper
                                         : MatrixFormula::SixthDualLower;
    }
    throw Error("unreachable scheme");
}

void require_legacy_shape(OperatorScheme scheme, Bound bound) {
    if (scheme != OperatorScheme::Sixth || bound != Bound::Lower)
        throw RouteMismatch{"route 'legacy' applies only to --scheme sixth --bound lower"};
}

void warn_legacy() {
    std::cerr << "WARNING: the legacy formula computes the dual lower approximation XL^d(X), "
                 "not XL(X); use --route matrix for the corrected result\n";
}

ElementSet route_result(const Covering& cov, const CharacteristicMatrices& cm,
                        const ElementSet& x, OperatorScheme scheme, Bound bound, Route route) {
    switch (route) {
        case Route::Oracle:
            return bound == Bound::Upper ? upper_approx(cov, x, scheme)
                                         : lower_approx(cov, x, scheme);
        case Route::Matrix:
            return approx_by_matrix(cm, x, formula_for(scheme, bound));
        case Route::Legacy:
            return approx_by_matrix(cm, x, MatrixFormula::SixthLowerLegacyWrong);
        case Route::Both:
            break;
    }
    throw Error("route 'both' has no single result");
}

void dump_matrices(const CharacteristicMatrices& cm) {
    const auto& m = cm.membership();
    std::cout << "M_C " << m.rows() << "x" << m.cols() << "\n" << m.debug_string();
    std::cout << "Gamma " << cm.gamma().rows() << "x" << cm.gamma().cols() << "\n"
              << cm.gamma().debug_string();
    std::cout << "Pi " << cm.pi().rows() << "x" << cm.pi().cols() << "\n"
              << cm.pi().debug_string();
}

int cmd_compute(const std::string& covering_path, const std::string& set_spec,
                const std::string& scheme_s, const std::string& bound_s,
                const std::string& route_s, bool dump) {
    const auto scheme = parse_scheme(scheme_s);
    const auto bound = parse_bound(bound_s);
    const auto route = parse_route(route_s);
    if (route == Route::Legacy) {
        require_legacy_shape(scheme, bound);
        warn_legacy();
    }

    const Covering cov = parse_covering_file(covering_path);
    const CharacteristicMatrices cm(cov);
    const ElementSet x = parse_set_spec(cov.universe(), set_spec);

    if (dump) dump_matrices(cm);
    const ElementSet result = route_result(cov, cm, x, scheme, bound, route);
    if (route != Route::Oracle) std::cout << format_vector(from_set(result)) << "\n";
    std::cout << format_set(result) << "\n";
    return kExitOk;
}

std::vector<ElementSet> load_sets_file(const UniversePtr& universe, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open sets file '" + path + "'");
    std::vector<ElementSet> sets;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string stripped;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') stripped += c;
        if (stripped.empty() || stripped[0] == '#') continue;
        try {
            sets.push_back(parse_set_spec(universe, line));
        } catch (const Error& e) {
            throw CoveringParseError(line_number, e.what());
        }
    }
    return sets;
}

int cmd_table(const std::string& covering_path, const std::string& sets_path,
              const std::string& scheme_s, const std::string& bound_s,
              const std::string& route_s) {
    const auto scheme = parse_scheme(scheme_s);
    const auto bound = parse_bound(bound_s);
    const auto route = parse_route(route_s);
    const bool legacy = route == Route::Legacy;
    if (legacy) {
        require_legacy_shape(scheme, bound);
        warn_legacy();
    }

    const Covering cov = parse_covering_file(covering_path);
    const CharacteristicMatrices cm(cov);
    const auto sets = load_sets_file(cov.universe(), sets_path);

    const std::string label = operator_label(scheme, bound, legacy);
    if (route == Route::Both) {
        std::cout << "X\tvector\t" << label << "(X) [matrix]\t" << label << "(X) [oracle]\tDIFF\n";
        for (const auto& x : sets) {
            const auto by_matrix = route_result(cov, cm, x, scheme, bound, Route::Matrix);
            const auto by_oracle = route_result(cov, cm, x, scheme, bound, Route::Oracle);
            std::cout << format_set(x) << "\t" << format_vector(from_set(by_matrix)) << "\t"
                      << format_set(by_matrix) << "\t" << format_set(by_oracle) << "\t"
                      << (by_matrix == by_oracle ? "-" : "!=") << "\n";
        }
        return kExitOk;
    }

    std::cout << "X\tvector\t" << label << "(X)\n";
    for (const auto& x : sets) {
        const auto result = route_result(cov, cm, x, scheme, bound, route);
        std::cout << format_set(x) << "\t" << format_vector(from_set(result)) << "\t"
                  << format_set(result) << "\n";
    }
    return kExitOk;
}

int report_identities(const IdentityReport& report, const std::string& context) {
    for (const auto& identity : report.identities) {
        std::cout << (identity.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(28)
                  << identity.id << " " << identity.description << "\n";
        if (!identity.pass)
            std::cout << "      counterexample" << context << ": X = " << *identity.counterexample
                      << "\n";
    }
    if (report.legacy_corrected_diffs > 0)
        std::cout << "legacy!=corrected witness: " << *report.legacy_corrected_witness << " ("
                  << report.legacy_corrected_diffs << "/" << report.subsets_checked
                  << " subsets differ)\n";
    else
        std::cout << "legacy!=corrected witness: none in probe set\n";
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_file(const std::string& covering_path, bool exhaustive, std::uint64_t seed) {
    const Covering cov = parse_covering_file(covering_path);
    VerifyOptions options;
    options.exhaustive = exhaustive;
    options.seed = seed;
    const auto report = verify_identities(cov, options);

    std::cout << "covering: " << cov.universe()->size() << " elements, " << cov.block_count()
              << " blocks\n";
    std::cout << "subsets checked: " << report.subsets_checked
              << (report.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
    const int rc = report_identities(report, "");
    std::cout << (rc == kExitOk ? "result: all identities hold\n"
                                : "result: identity violation detected\n");
    return rc;
}

int cmd_verify_random(std::size_t n, std::size_t m, std::size_t trials, bool exhaustive,
                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    VerifyOptions options;
    options.exhaustive = exhaustive || n <= options.exhaustive_limit;
    if (exhaustive && n > options.exhaustive_limit) {
        // Surface the limit violation instead of silently sampling.
        VerifyOptions strict;
        strict.exhaustive = true;
        verify_identities(random_covering(n, m, rng), strict);
    }
    options.seed = seed;

    IdentityReport merged;
    std::optional<std::string> failing_covering;
    for (std::size_t t = 0; t < trials; ++t) {
        const Covering cov = random_covering(n, m, rng);
        const auto report = verify_identities(cov, options);
        if (merged.identities.empty()) merged.identities = report.identities;
        for (std::size_t c = 0; c < report.identities.size(); ++c) {
            merged.identities[c].checked += report.identities[c].checked;
            if (!report.identities[c].pass && merged.identities[c].pass) {
                merged.identities[c].pass = false;
                merged.identities[c].counterexample = report.identities[c].counterexample;
                if (!failing_covering) failing_covering = print_covering(cov);
            }
        }
        merged.subsets_checked += report.subsets_checked;
        merged.legacy_corrected_diffs += report.legacy_corrected_diffs;
        if (!merged.legacy_corrected_witness && report.legacy_corrected_witness)
            merged.legacy_corrected_witness =
                "trial " + std::to_string(t) + ", " + *report.legacy_corrected_witness;
    }

    std::cout << "random coverings: " << trials << " trials, n=" << n << ", m=" << m
              << ", seed=" << seed << "\n";
    std::cout << "subsets checked: " << merged.subsets_checked << "\n";
    const int rc = report_identities(merged, "");
    if (failing_covering)
        std::cout << "failing covering:\n" << *failing_covering;
    std::cout << (rc == kExitOk ? "result: all identities hold\n"
                                : "result: identity violation detected\n");
    return rc;
}

int cmd_gen(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto blocks = random_blocks(n, m, rng);
    const auto& universe = blocks.front().universe();

    const auto& elements = universe->elements();
    for (std::size_t i = 0; i < elements.size(); ++i)
        std::cout << (i ? " " : "") << elements[i];
    std::cout << "\n";
    for (const auto& block : blocks) {
        const auto names = block.names();
        for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? " " : "") << names[i];
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering rough set approximations via Boolean characteristic matrices"};
    app.require_subcommand(1);

    const std::vector<std::string> schemes{"second", "fifth", "sixth", "sixth-dual"};
    const std::vector<std::string> bounds{"lower", "upper"};

    // compute
    auto* compute = app.add_subcommand("compute", "approximate one set");
    std::string covering_path, set_spec, scheme_s, bound_s;
    std::string route_s = "oracle";
    bool dump = false;
    compute->add_option("covering", covering_path, "covering file")->required();
    compute->add_option("--set", set_spec, "comma-separated element names ('' = empty set)")
        ->required();
    compute->add_option("--scheme", scheme_s)->required()->check(CLI::IsMember(schemes));
    compute->add_option("--bound", bound_s)->required()->check(CLI::IsMember(bounds));
    compute->add_option("--route", route_s)
        ->check(CLI::IsMember({"oracle", "matrix", "legacy"}));
    compute->add_flag("--dump-matrices", dump, "print M_C, Gamma, Pi before the result");

    // table
    auto* table = app.add_subcommand("table", "approximate every set listed in a file");
    std::string t_covering, t_sets, t_scheme, t_bound;
    std::string t_route = "matrix";
    table->add_option("covering", t_covering, "covering file")->required();
    table->add_option("sets", t_sets, "file with one set spec per line")->required();
    table->add_option("--scheme", t_scheme)->required()->check(CLI::IsMember(schemes));
    table->add_option("--bound", t_bound)->required()->check(CLI::IsMember(bounds));
    table->add_option("--route", t_route)
        ->check(CLI::IsMember({"oracle", "matrix", "legacy", "both"}));

    // verify
    auto* verify = app.add_subcommand("verify", "check the operator identities");
    std::string v_covering;
    std::vector<std::uint64_t> v_random;
    std::uint64_t v_seed = 0;
    bool v_exhaustive = false;
    verify->add_option("covering", v_covering, "covering file");
    verify->add_option("--random", v_random, "N M TRIALS: verify random coverings")
        ->expected(3);
    verify->add_option("--seed", v_seed);
    verify->add_flag("--exhaustive", v_exhaustive, "enumerate all subsets (universe <= 10)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a random covering in the text format");
    std::uint64_t g_n = 0, g_m = 0, g_seed = 0;
    gen->add_option("n", g_n, "universe size")->required()->check(CLI::PositiveNumber);
    gen->add_option("m", g_m, "block count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", g_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (compute->parsed())
            return cmd_compute(covering_path, set_spec, scheme_s, bound_s, route_s, dump);
        if (table->parsed()) return cmd_table(t_covering, t_sets, t_scheme, t_bound, t_route);
        if (verify->parsed()) {
            const bool have_file = !v_covering.empty();
            const bool have_random = !v_random.empty();
            if (have_file == have_random)
                throw Error("verify needs exactly one of a covering file or --random N M TRIALS");
            if (have_file) return cmd_verify_file(v_covering, v_exhaustive, v_seed);
            if (v_random[0] == 0 || v_random[1] == 0)
                throw Error("--random needs n >= 1 and m >= 1");
            return cmd_verify_random(v_random[0], v_random[1], v_random[2], v_exhaustive, v_seed);
        }
        if (gen->parsed()) return cmd_gen(g_n, g_m, g_seed);
    } catch (const RouteMismatch& e) {
        std::cerr << "covmat: " << e.message << "\n";
        return kExitRouteMismatch;
    } catch (const Error& e) {
        std::cerr << "covmat: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
