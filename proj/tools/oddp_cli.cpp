// Command-line front end: algebra ingestion, catalog access, expression
// evaluation, verification suites, and report emission.
//
// Exit codes: 0 every check passed, 1 at least one mathematical check
// failed (JSON witness on stdout), 2 input or parse error (stderr).

#include <oddp/catalog.hpp>
#include <oddp/io_json.hpp>
#include <oddp/parser.hpp>
#include <oddp/run_report.hpp>
#include <oddp/version.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace {

oddp::StructureConstants resolve_algebra(const std::string& name_or_path) {
    for (const auto& name : oddp::catalog_names())
        if (name_or_path == name)
            return oddp::catalog(name_or_path);
    if (name_or_path.rfind("zero(", 0) == 0)
        return oddp::catalog(name_or_path);
    if (std::filesystem::exists(name_or_path))
        return oddp::load_algebra_file(name_or_path);
    throw std::invalid_argument("unknown algebra '" + name_or_path +
                                "': not a catalog name and no such file");
}

void emit(const oddp::OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

oddp::BracketKind bracket_kind_by_name(const std::string& name,
                                       const oddp::StructureConstants& sc) {
    if (name == "linear-odd")
        return oddp::BracketKind::linear_odd(sc);
    if (name == "linear-even")
        return oddp::BracketKind::linear_even(sc);
    if (name == "canonical-odd")
        return oddp::BracketKind::canonical_odd(sc.dim());
    if (name == "canonical-even")
        return oddp::BracketKind::canonical_even(sc.dim());
    throw std::invalid_argument("unknown bracket '" + name +
                                "' (linear-odd, linear-even, canonical-odd, canonical-even)");
}

struct Options {
    std::string algebra = "so3";
    std::string algebra2;
    std::string bracket;
    std::string format = "json";
    int samples = 200;
    std::uint64_t seed = 0;
    std::vector<std::string> expressions;
};

int run_validate(const Options& opt) {
    const auto sc = resolve_algebra(opt.algebra);
    const auto report = oddp::validate(sc);
    if (opt.format == "markdown") {
        std::cout << "validate " << opt.algebra << ": "
                  << (report.ok() ? "valid"
                                  : std::to_string(report.total_violations) + " violation(s)")
                  << "\n";
    } else {
        emit(oddp::to_json(report));
    }
    return report.ok() ? 0 : 1;
}

int run_killing(const Options& opt) {
    const auto sc = resolve_algebra(opt.algebra);
    const auto km = oddp::killing(sc);
    if (opt.format == "markdown") {
        std::cout << "killing metric of " << opt.algebra << " ("
                  << (km.invertible() ? "invertible" : "degenerate") << ")\n";
        for (int a = 0; a < km.dim(); ++a) {
            for (int b = 0; b < km.dim(); ++b)
                std::cout << km.g().at(a, b).to_string() << (b + 1 < km.dim() ? "  " : "");
            std::cout << "\n";
        }
        if (km.invertible())
            std::cout << "dimension invariant: " << oddp::dimension_invariant(km).to_string()
                      << "\n";
    } else {
        emit(oddp::killing_to_json(km));
    }
    return 0;
}

int run_axioms(const Options& opt) {
    const auto sc = resolve_algebra(opt.algebra);
    std::vector<std::string> kinds;
    if (opt.bracket.empty())
        kinds = {"linear-odd", "linear-even", "canonical-odd", "canonical-even"};
    else
        kinds = {opt.bracket};
    oddp::OrderedJson out = oddp::OrderedJson::array();
    bool all_ok = true;
    for (const auto& name : kinds) {
        const auto report =
            oddp::check_axioms(bracket_kind_by_name(name, sc), opt.samples, opt.seed);
        all_ok = all_ok && report.all_passed();
        if (opt.format == "markdown")
            std::cout << name << ": " << (report.all_passed() ? "pass" : "FAIL") << "\n";
        else
            out.push_back(oddp::to_json(report));
    }
    if (opt.format != "markdown")
        emit(out);
    return all_ok ? 0 : 1;
}

int run_superalgebra(const Options& opt) {
    const auto sc = resolve_algebra(opt.algebra);
    const auto km = oddp::killing(sc);
    const auto report = oddp::verify_superalgebra(sc, km);
    if (opt.format == "markdown") {
        for (const auto& c : report.checks)
            std::cout << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
    } else {
        emit(oddp::to_json(report));
    }
    return report.all_passed() ? 0 : 1;
}

int run_degenerate(const Options& opt) {
    const auto sc = resolve_algebra(opt.algebra);
    const auto report = oddp::verify_degenerate(sc);
    if (opt.format == "markdown") {
        for (const auto& c : report.checks)
            std::cout << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
    } else {
        emit(oddp::to_json(report));
    }
    return report.all_passed() ? 0 : 1;
}

int run_compat(const Options& opt) {
    if (opt.algebra2.empty())
        throw std::invalid_argument("compat needs --algebra2");
    const auto sc1 = resolve_algebra(opt.algebra);
    const auto sc2 = resolve_algebra(opt.algebra2);
    const auto report = oddp::verify_compatibility(sc1, sc2);
    if (opt.format == "markdown") {
        std::cout << "tensor condition: " << (report.tensor_compatible ? "compatible" : "violated")
                  << "\n"
                  << "delta-1 operators anticommute: "
                  << (report.operators_anticommute ? "yes" : "no") << "\n"
                  << "verdicts agree: " << (report.agree() ? "yes" : "NO") << "\n";
    } else {
        emit(oddp::to_json(report));
    }
    return report.agree() ? 0 : 1;
}

int run_eval(const Options& opt) {
    const auto sc = resolve_algebra(opt.algebra);
    if (opt.expressions.empty())
        throw std::invalid_argument("eval needs at least one expression");
    const auto first = oddp::parse_expression(opt.expressions[0], sc.dim());
    oddp::SuperPolynomial result;
    if (!opt.bracket.empty()) {
        if (opt.expressions.size() != 2)
            throw std::invalid_argument("eval --bracket needs exactly two expressions");
        const auto second = oddp::parse_expression(opt.expressions[1], sc.dim());
        result = oddp::bracket(bracket_kind_by_name(opt.bracket, sc), first, second);
    } else {
        if (opt.expressions.size() != 1)
            throw std::invalid_argument("eval without --bracket takes one expression");
        result = first;
    }
    if (result.max_even_degree() > 8)
        std::cerr << "warning: result has even degree " << result.max_even_degree()
                  << " (> 8); expect large outputs\n";
    if (opt.format == "markdown") {
        std::cout << result.to_string() << "\n";
    } else {
        oddp::OrderedJson j;
        j["result"] = result.to_string();
        emit(j);
    }
    return 0;
}

int run_report(const Options& opt) {
    const auto sc = resolve_algebra(opt.algebra);
    const auto run = oddp::make_run_report(sc, opt.algebra, opt.samples, opt.seed);
    if (opt.format == "markdown")
        std::cout << oddp::render_markdown(run, sc);
    else
        emit(oddp::to_json(run));
    return run.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oddp: exact workbench for linear odd Poisson brackets on Grassmann algebras"};
    app.set_version_flag("--version", oddp::kVersion);
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&opt](CLI::App* cmd, bool with_samples) {
        cmd->add_option("--algebra", opt.algebra, "catalog name or JSON file path")
            ->default_str("so3");
        cmd->add_option("--format", opt.format, "json or markdown")
            ->check(CLI::IsMember({"json", "markdown"}))
            ->default_str("json");
        if (with_samples) {
            cmd->add_option("--samples", opt.samples, "random triples per axiom")
                ->check(CLI::PositiveNumber)
                ->default_str("200");
            cmd->add_option("--seed", opt.seed, "base seed for sample streams")->default_str("0");
        }
    };

    auto* validate_cmd = app.add_subcommand("validate", "check antisymmetry and Jacobi");
    add_common(validate_cmd, false);

    auto* killing_cmd = app.add_subcommand("killing", "Killing metric, inverse, lowered tensor");
    add_common(killing_cmd, false);

    auto* axioms_cmd = app.add_subcommand("bracket-axioms", "run the bracket axiom suite");
    add_common(axioms_cmd, true);
    axioms_cmd->add_option("--bracket", opt.bracket, "restrict to one bracket kind");

    auto* super_cmd = app.add_subcommand("superalgebra", "verify the eleven operator identities");
    add_common(super_cmd, false);

    auto* degen_cmd = app.add_subcommand("degenerate", "verify the degenerate-metric case");
    add_common(degen_cmd, false);

    auto* compat_cmd = app.add_subcommand("compat", "compatibility of two tables");
    add_common(compat_cmd, false);
    compat_cmd->add_option("--algebra2", opt.algebra2, "second catalog name or JSON path");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate expressions, optionally a bracket");
    add_common(eval_cmd, false);
    eval_cmd->add_option("--bracket", opt.bracket, "bracket kind for two expressions");
    eval_cmd->add_option("expressions", opt.expressions, "expression(s) in the grammar");

    auto* report_cmd = app.add_subcommand("report", "full verification report");
    add_common(report_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return run_validate(opt);
        if (app.got_subcommand(killing_cmd)) return run_killing(opt);
        if (app.got_subcommand(axioms_cmd)) return run_axioms(opt);
        if (app.got_subcommand(super_cmd)) return run_superalgebra(opt);
        if (app.got_subcommand(degen_cmd)) return run_degenerate(opt);
        if (app.got_subcommand(compat_cmd)) return run_compat(opt);
        if (app.got_subcommand(eval_cmd)) return run_eval(opt);
        if (app.got_subcommand(report_cmd)) return run_report(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
