/*
 * run_report.hpp
 * --------------
 * The combined verification report the `report` command emits: validation,
 * Killing machinery, the bracket axiom suites, and either the full
 * superalgebra checks or the degenerate-case checks.  Output embeds the
 * algebra hash, seed, and tool version; a fixed configuration renders to a
 * byte-identical document.
 */
#pragma once

#include <oddp/catalog.hpp>
#include <oddp/io_json.hpp>
#include <oddp/version.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace oddp {

struct RunReport {
    std::string algebra;
    std::string hash;
    std::uint64_t seed = 0;
    int samples = 0;
    ValidationReport validation;
    ValidationReport total_antisymmetry;
    bool invertible = false;
    std::vector<AxiomReport> axiom_reports;
    SuperalgebraReport algebra_report;  // superalgebra or degenerate checks
    bool degenerate_path = false;
    std::string brst_ratio;  // empty when not computed

    bool all_passed() const {
        if (!validation.ok() || !total_antisymmetry.ok())
            return false;
        for (const auto& r : axiom_reports)
            if (!r.all_passed())
                return false;
        return algebra_report.all_passed();
    }
};

inline RunReport make_run_report(const StructureConstants& sc, const std::string& label,
                                 int samples, std::uint64_t seed) {
    RunReport run;
    run.algebra = label;
    run.hash = algebra_hash(sc);
    run.seed = seed;
    run.samples = samples;
    run.validation = validate(sc);
    const KillingMetric km = killing(sc);
    run.total_antisymmetry = check_total_antisymmetry(km);
    run.invertible = km.invertible();
    run.axiom_reports.push_back(check_axioms(BracketKind::linear_odd(sc), samples, seed));
    run.axiom_reports.push_back(check_axioms(BracketKind::linear_even(sc), samples, seed));
    run.axiom_reports.push_back(check_axioms(BracketKind::canonical_odd(sc.dim()), samples, seed));
    run.axiom_reports.push_back(check_axioms(BracketKind::canonical_even(sc.dim()), samples, seed));
    if (!run.validation.ok())
        return run;
    if (km.invertible()) {
        run.algebra_report = verify_superalgebra(sc, km);
        const auto q = build_brst(sc, km, build_generators(sc));
        const auto d_p1 = build_delta(sc, km, DeltaKind::Plus1);
        if (!d_p1.is_zero()) {
            const auto& [key, coeff] = *d_p1.terms().begin();
            const auto it = q.terms().find(key);
            if (it != q.terms().end() && q == d_p1 * (it->second / coeff))
                run.brst_ratio = (it->second / coeff).to_string();
        }
    } else {
        run.algebra_report = verify_degenerate(sc);
        run.degenerate_path = true;
    }
    return run;
}

inline OrderedJson to_json(const RunReport& run) {
    OrderedJson j;
    j["tool"] = "oddp";
    j["version"] = kVersion;
    j["algebra"] = run.algebra;
    j["algebra_hash"] = run.hash;
    j["seed"] = run.seed;
    j["samples"] = run.samples;
    j["all_passed"] = run.all_passed();
    j["validation"] = to_json(run.validation);
    j["total_antisymmetry"] = to_json(run.total_antisymmetry);
    j["metric_invertible"] = run.invertible;
    OrderedJson axioms = OrderedJson::array();
    for (const auto& r : run.axiom_reports)
        axioms.push_back(to_json(r));
    j["axioms"] = std::move(axioms);
    j[run.degenerate_path ? "degenerate" : "superalgebra"] = to_json(run.algebra_report);
    if (!run.brst_ratio.empty())
        j["brst_ratio"] = run.brst_ratio;
    return j;
}

namespace detail {

/// Name a graded bracket of two named operators if it matches one of the
/// superalgebra's right-hand sides; fall back to the raw normal form.
inline std::string describe_bracket_cell(const GrassmannOperator& result,
                                         const GrassmannOperator& z,
                                         const GrassmannOperator& n_minus_3z,
                                         const std::vector<GrassmannOperator>& deltas,
                                         const std::vector<std::string>& delta_labels) {
    if (result.is_zero())
        return "0";
    if (result == z)
        return "Z";
    if (result == n_minus_3z)
        return "N - 3Z";
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        for (const int lambda : {-3, -1, 1, 3}) {
            if (result == deltas[i] * Scalar(lambda)) {
                const std::string mag = std::to_string(lambda);
                return (lambda == 1 ? "" : mag + " ") + delta_labels[i];
            }
        }
    }
    return result.to_string();
}

}  // namespace detail

/// Markdown rendering with the commutation table over
/// {d-3, d-1, d+1, d+3, D, Z, S_a}.
inline std::string render_markdown(const RunReport& run, const StructureConstants& sc) {
    std::string out;
    out += "# oddp report: " + run.algebra + "\n\n";
    out += "- tool version: " + std::string(kVersion) + "\n";
    out += "- algebra hash: " + run.hash + "\n";
    out += "- seed: " + std::to_string(run.seed) + "\n";
    out += "- samples: " + std::to_string(run.samples) + "\n";
    out += "- overall: " + std::string(run.all_passed() ? "pass" : "FAIL") + "\n\n";

    out += "## Validation\n\n";
    out += "- structure constants: " +
           std::string(run.validation.ok() ? "valid" : "violations found") + "\n";
    out += "- lowered tensor total antisymmetry: " +
           std::string(run.total_antisymmetry.ok() ? "pass" : "FAIL") + "\n";
    out += "- Killing metric invertible: " + std::string(run.invertible ? "yes" : "no") + "\n\n";

    out += "## Bracket axioms\n\n";
    out += "| bracket | bilinearity | parity-shift | graded-symmetry | jacobi | leibniz |\n";
    out += "|---|---|---|---|---|---|\n";
    for (const auto& r : run.axiom_reports) {
        out += "| " + r.bracket + " |";
        for (const auto& c : r.checks)
            out += std::string(c.failures.empty() ? " pass |" : " FAIL |");
        out += "\n";
    }
    out += "\n";

    out += std::string("## ") + (run.degenerate_path ? "Degenerate checks" : "Superalgebra checks") +
           "\n\n";
    for (const auto& c : run.algebra_report.checks) {
        out += "- " + c.name + ": " + (c.passed ? "pass" : "FAIL") + "\n";
        if (!c.passed && !c.witness.empty())
            out += "  - witness: " + c.witness + "\n";
    }
    out += "\n";
    if (!run.brst_ratio.empty())
        out += "BRST charge over the S representation equals (" + run.brst_ratio +
               ") times d+1, and squares to zero.\n\n";

    if (run.invertible && run.validation.ok()) {
        const KillingMetric km = killing(sc);
        const auto d_m3 = build_delta(sc, km, DeltaKind::Minus3);
        const auto d_m1 = build_delta(sc, km, DeltaKind::Minus1);
        const auto d_p1 = build_delta(sc, km, DeltaKind::Plus1);
        const auto d_p3 = build_delta(sc, km, DeltaKind::Plus3);
        const auto dil = build_auxiliary(sc, km, AuxOperator::Dilatation);
        const auto z = build_auxiliary(sc, km, AuxOperator::Z);
        const auto n_minus_3z =
            build_auxiliary(sc, km, AuxOperator::NConst) - z * Scalar(3);
        const auto gens = build_generators(sc);

        const std::vector<GrassmannOperator> deltas = {d_m3, d_m1, d_p1, d_p3};
        const std::vector<std::string> delta_labels = {"d-3", "d-1", "d+1", "d+3"};

        // One row per family member; S_a rows are summarized by their
        // verified right-hand sides.
        out += "## Commutation table\n\n";
        out += "Graded brackets (anticommutator for odd-odd rows, commutator otherwise):\n\n";
        out += "| | d-3 | d-1 | d+1 | d+3 | D | Z | S_a |\n";
        out += "|---|---|---|---|---|---|---|---|\n";
        std::vector<std::pair<std::string, const GrassmannOperator*>> family = {
            {"d-3", &d_m3}, {"d-1", &d_m1}, {"d+1", &d_p1}, {"d+3", &d_p3},
            {"D", &dil},    {"Z", &z}};
        for (const auto& [row_name, row_op] : family) {
            out += "| **" + row_name + "** |";
            for (const auto& [col_name, col_op] : family) {
                const auto cell = graded_bracket(*row_op, *col_op);
                out += " " + detail::describe_bracket_cell(cell, z, n_minus_3z, deltas,
                                                           delta_labels) +
                       " |";
            }
            // the S_a column collapses since [S_a, x] = 0 for every family member
            bool all_zero = true;
            for (const auto& gen : gens)
                if (!graded_bracket(gen, *row_op).is_zero())
                    all_zero = false;
            out += all_zero ? " 0 |\n" : " nonzero |\n";
        }
        // S_a row:
        out += "| **S_a** |";
        for (const auto& [col_name, col_op] : family) {
            bool all_zero = true;
            for (const auto& gen : gens)
                if (!graded_bracket(gen, *col_op).is_zero())
                    all_zero = false;
            out += all_zero ? " 0 |" : " nonzero |";
        }
        // [S_a, S_b] = c_{ab}^g S_g, verified before rendering
        bool closes = true;
        for (int a = 1; a <= sc.dim() && closes; ++a)
            for (int b = 1; b <= sc.dim() && closes; ++b) {
                GrassmannOperator rhs(sc.dim());
                for (int g = 1; g <= sc.dim(); ++g)
                    rhs += gens[static_cast<std::size_t>(g - 1)] * sc.at(a, b, g);
                if (graded_bracket(gens[static_cast<std::size_t>(a - 1)],
                                   gens[static_cast<std::size_t>(b - 1)]) != rhs)
                    closes = false;
            }
        out += closes ? " c_ab^g S_g |\n" : " does not close |\n";
    }
    return out;
}

}  // namespace oddp
