/*
 * io_json.hpp
 * -----------
 * Algebra files and report serialization.
 *
 * Algebra schema:
 *   { "dim": N, "scalar": "q23",
 *     "entries": [ {"a":1, "b":2, "c":3, "value":"1/1"}, ... ],
 *     "half": true|false }
 *
 * With "half": true only a < b entries are given and the other half is
 * filled by antisymmetry; a full table is stored as-is and the validate
 * pass cross-checks it.  Ordered JSON everywhere so a fixed input produces
 * byte-identical output.
 */
#pragma once

#include <oddp/brackets.hpp>
#include <oddp/delta_operators.hpp>
#include <oddp/lie_algebra.hpp>

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace oddp {

using OrderedJson = nlohmann::ordered_json;

inline StructureConstants algebra_from_json(const OrderedJson& j, const std::string& name) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("algebra json: missing integer field 'dim'");
    if (j.contains("scalar") && j["scalar"].get<std::string>() != "q23")
        throw std::invalid_argument("algebra json: unsupported scalar field '" +
                                    j["scalar"].get<std::string>() + "' (expected \"q23\")");
    StructureConstants sc(j["dim"].get<int>(), name);
    const bool half = j.value("half", false);
    if (j.contains("entries")) {
        if (!j["entries"].is_array())
            throw std::invalid_argument("algebra json: 'entries' must be an array");
        for (const auto& e : j["entries"]) {
            if (!e.contains("a") || !e.contains("b") || !e.contains("c") || !e.contains("value"))
                throw std::invalid_argument("algebra json: entry needs fields a, b, c, value");
            const int a = e["a"].get<int>();
            const int b = e["b"].get<int>();
            const int c = e["c"].get<int>();
            if (half && a >= b)
                throw std::invalid_argument(
                    "algebra json: half tables may only list a < b entries");
            sc.set(a, b, c, Scalar::parse(e["value"].get<std::string>()));
        }
    }
    if (half)
        sc.complete_by_antisymmetry();
    return sc;
}

inline OrderedJson algebra_to_json(const StructureConstants& sc) {
    OrderedJson j;
    j["dim"] = sc.dim();
    j["scalar"] = "q23";
    OrderedJson entries = OrderedJson::array();
    for (const auto& [key, v] : sc.entries()) {
        OrderedJson e;
        e["a"] = key[0];
        e["b"] = key[1];
        e["c"] = key[2];
        e["value"] = v.to_string();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    j["half"] = false;
    return j;
}

inline StructureConstants load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open algebra file '" + path + "'");
    OrderedJson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("algebra file '" + path + "': " + e.what());
    }
    return algebra_from_json(j, path);
}

/// FNV-1a over the canonical serialization; pins the algebra a report
/// talks about.
inline std::string algebra_hash(const StructureConstants& sc) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const std::string& s) {
        for (const unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    mix(std::to_string(sc.dim()));
    for (const auto& [key, v] : sc.entries()) {
        mix("|" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
            std::to_string(key[2]) + "=" + v.to_string());
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

inline OrderedJson to_json(const ValidationReport& report) {
    OrderedJson j;
    j["total_violations"] = report.total_violations;
    OrderedJson listed = OrderedJson::array();
    for (const auto& v : report.listed) {
        OrderedJson e;
        e["law"] = v.law;
        e["indices"] = v.indices;
        e["residual"] = v.residual.to_string();
        listed.push_back(std::move(e));
    }
    j["listed"] = std::move(listed);
    return j;
}

inline OrderedJson to_json(const AxiomReport& report) {
    OrderedJson j;
    j["bracket"] = report.bracket;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : report.checks) {
        OrderedJson e;
        e["axiom"] = c.axiom;
        e["samples"] = c.samples;
        OrderedJson failures = OrderedJson::array();
        for (const auto& f : c.failures) {
            OrderedJson fe;
            fe["inputs"] = f.inputs;
            fe["lhs"] = f.lhs;
            fe["rhs"] = f.rhs;
            failures.push_back(std::move(fe));
        }
        e["failures"] = std::move(failures);
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

inline OrderedJson to_json(const SuperalgebraReport& report) {
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : report.checks) {
        OrderedJson e;
        e["name"] = c.name;
        e["status"] = c.passed ? "pass" : "fail";
        e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    OrderedJson j;
    j["checks"] = std::move(checks);
    return j;
}

inline OrderedJson to_json(const CompatibilityReport& report) {
    OrderedJson j;
    j["tensor_compatible"] = report.tensor_compatible;
    j["operators_anticommute"] = report.operators_anticommute;
    j["verdicts_agree"] = report.agree();
    j["tensor_witness"] = report.tensor_witness;
    j["operator_witness"] = report.operator_witness;
    return j;
}

inline OrderedJson killing_to_json(const KillingMetric& km) {
    const int n = km.dim();
    OrderedJson j;
    OrderedJson g = OrderedJson::array();
    for (int a = 0; a < n; ++a) {
        OrderedJson row = OrderedJson::array();
        for (int b = 0; b < n; ++b)
            row.push_back(km.g().at(a, b).to_string());
        g.push_back(std::move(row));
    }
    j["g"] = std::move(g);
    j["invertible"] = km.invertible();
    if (km.invertible()) {
        OrderedJson gi = OrderedJson::array();
        for (int a = 0; a < n; ++a) {
            OrderedJson row = OrderedJson::array();
            for (int b = 0; b < n; ++b)
                row.push_back(km.g_inv().at(a, b).to_string());
            gi.push_back(std::move(row));
        }
        j["g_inv"] = std::move(gi);
        j["dimension_invariant"] = dimension_invariant(km).to_string();
    }
    OrderedJson low = OrderedJson::array();
    for (const auto& [key, v] : km.lowered_entries()) {
        OrderedJson e;
        e["a"] = key[0];
        e["b"] = key[1];
        e["c"] = key[2];
        e["value"] = v.to_string();
        low.push_back(std::move(e));
    }
    j["c_lowered"] = std::move(low);
    return j;
}

}  // namespace oddp
