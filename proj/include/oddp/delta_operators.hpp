/*
 * delta_operators.hpp
 * -------------------
 * The four nilpotent Delta operators of a linear odd bracket, the algebra
 * generators S_a, the dilatation D, the second-order piece K, the central
 * element Z = D - K, the BRST charge, and the verifier that proves the
 * whole finite-dimensional superalgebra as exact normal-form identities.
 *
 *   Delta_{+3} = (1/sqrt6) T^a T^b T^c c_abc          (multiplication)
 *   Delta_{+1} = (1/sqrt2) T^a T^b c_{ab}^g d_{T^g}
 *   Delta_{-1} = (1/sqrt2) T_g c_{ab}^g d_a d_b
 *   Delta_{-3} = (1/sqrt6) c_abc d_a d_b d_c
 *
 * Operators store lowered-index data only; raised indices are expanded
 * through the inverse metric at build time, so the "+" variants need a
 * non-degenerate Killing form and the "-" variants never do.
 */
#pragma once

#include <oddp/grassmann_operator.hpp>
#include <oddp/lie_algebra.hpp>

#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <vector>

namespace oddp {

enum class DeltaKind { Plus3, Plus1, Minus1, Minus3 };

inline const char* delta_name(DeltaKind k) {
    switch (k) {
        case DeltaKind::Plus3: return "delta+3";
        case DeltaKind::Plus1: return "delta+1";
        case DeltaKind::Minus1: return "delta-1";
        case DeltaKind::Minus3: return "delta-3";
    }
    return "?";
}

inline int delta_weight(DeltaKind k) {
    switch (k) {
        case DeltaKind::Plus3: return 3;
        case DeltaKind::Plus1: return 1;
        case DeltaKind::Minus1: return -1;
        case DeltaKind::Minus3: return -3;
    }
    return 0;
}

namespace detail {

inline Scalar inv_sqrt2() { return Scalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)); }
inline Scalar inv_sqrt6() { return Scalar(Rational(0), Rational(0), Rational(0), Rational(1, 6)); }

/// c_abg with the first index raised: out[a][b][g] = g^{ax} c_xbg.
inline std::vector<Scalar> raise_first_index(const KillingMetric& km,
                                             const std::vector<Scalar>& t) {
    const int n = km.dim();
    const ScalarMatrix& gi = km.g_inv();
    std::vector<Scalar> out(t.size());
    const std::size_t stride = t.size() / static_cast<std::size_t>(n);
    for (int a = 0; a < n; ++a)
        for (std::size_t rest = 0; rest < stride; ++rest) {
            Scalar s;
            for (int x = 0; x < n; ++x) {
                const Scalar& v = t[static_cast<std::size_t>(x) * stride + rest];
                if (!v.is_zero())
                    s += gi.at(a, x) * v;
            }
            out[static_cast<std::size_t>(a) * stride + rest] = s;
        }
    return out;
}

inline std::vector<Scalar> dense_lowered(const KillingMetric& km) {
    const int n = km.dim();
    std::vector<Scalar> low(static_cast<std::size_t>(n) * n * n);
    for (const auto& [key, v] : km.lowered_entries())
        low[static_cast<std::size_t>(key[0] - 1) * n * n + (key[1] - 1) * n + (key[2] - 1)] = v;
    return low;
}

/// Swap tensor slots so raise_first_index can reach any position:
/// out[b][c][a] = in[a][b][c] for a rank-3 tensor.
inline std::vector<Scalar> rotate3(int n, const std::vector<Scalar>& t) {
    std::vector<Scalar> out(t.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                out[static_cast<std::size_t>(b) * n * n + c * n + a] =
                    t[static_cast<std::size_t>(a) * n * n + b * n + c];
    return out;
}

}  // namespace detail

/// Build one of the four Delta operators; Plus3/Plus1 raise indices through
/// the inverse metric and fail on a degenerate algebra.
inline GrassmannOperator build_delta(const StructureConstants& sc, const KillingMetric& km,
                                     DeltaKind which) {
    const int n = sc.dim();
    GrassmannOperator op(n);
    switch (which) {
        case DeltaKind::Minus1: {
            const Scalar norm = detail::inv_sqrt2();
            for (const auto& [key, v] : sc.entries())
                op.add_product_term(norm * v, {key[2]}, {key[0], key[1]});
            break;
        }
        case DeltaKind::Minus3: {
            const Scalar norm = detail::inv_sqrt6();
            for (const auto& [key, v] : km.lowered_entries())
                op.add_product_term(norm * v, {}, {key[0], key[1], key[2]});
            break;
        }
        case DeltaKind::Plus1: {
            // T^a T^b c_{ab}^g d_{T^g} = T^a T^b c_abg d_g: raise a and b.
            const Scalar norm = detail::inv_sqrt2();
            auto t = detail::dense_lowered(km);
            t = detail::raise_first_index(km, t);
            t = detail::raise_first_index(km, detail::rotate3(n, t));
            // slot order is now (b, g, a); two rotations restore (a, b, g)
            t = detail::rotate3(n, detail::rotate3(n, t));
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int g = 1; g <= n; ++g) {
                        const Scalar& v =
                            t[static_cast<std::size_t>(a - 1) * n * n + (b - 1) * n + (g - 1)];
                        if (!v.is_zero())
                            op.add_product_term(norm * v, {a, b}, {g});
                    }
            break;
        }
        case DeltaKind::Plus3: {
            const Scalar norm = detail::inv_sqrt6();
            auto t = detail::dense_lowered(km);
            for (int slot = 0; slot < 3; ++slot)
                t = detail::rotate3(n, detail::raise_first_index(km, t));
            // three rotations restore (a, b, c) order
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int c = 1; c <= n; ++c) {
                        const Scalar& v =
                            t[static_cast<std::size_t>(a - 1) * n * n + (b - 1) * n + (c - 1)];
                        if (!v.is_zero())
                            op.add_product_term(norm * v, {a, b, c}, {});
                    }
            break;
        }
    }
    return op;
}

/// S_a = T_g c_{ab}^g d_b; the adjoint action on the Grassmann sector.
inline std::vector<GrassmannOperator> build_generators(const StructureConstants& sc) {
    const int n = sc.dim();
    std::vector<GrassmannOperator> gens(static_cast<std::size_t>(n), GrassmannOperator(n));
    for (const auto& [key, v] : sc.entries())
        gens[static_cast<std::size_t>(key[0] - 1)].add_product_term(v, {key[2]}, {key[1]});
    return gens;
}

enum class AuxOperator { Dilatation, K, Z, NConst };

inline GrassmannOperator build_auxiliary(const StructureConstants& sc, const KillingMetric& km,
                                         AuxOperator which) {
    const int n = sc.dim();
    switch (which) {
        case AuxOperator::Dilatation: {
            // T^a d_{T^a}: metric and inverse cancel, no invertibility needed.
            GrassmannOperator op(n);
            for (int a = 1; a <= n; ++a)
                op.add_product_term(Scalar(1), {a}, {a});
            return op;
        }
        case AuxOperator::K: {
            // (1/2) T^a T^b c_{ab}^l c_lgd d_g d_d
            const ScalarMatrix& gi = km.g_inv();  // throws when degenerate
            GrassmannOperator op(n);
            // m[x][y][g][d] = sum_l c_{xy}^l c_lgd, staged sparsely.
            std::map<std::array<int, 4>, Scalar> m;
            for (const auto& [ckey, cv] : sc.entries())
                for (const auto& [lkey, lv] : km.lowered_entries()) {
                    if (lkey[0] != ckey[2])
                        continue;
                    const std::array<int, 4> key{ckey[0], ckey[1], lkey[1], lkey[2]};
                    auto [it, inserted] = m.emplace(key, cv * lv);
                    if (!inserted)
                        it->second += cv * lv;
                }
            // raise x and y through the inverse metric
            std::map<std::array<int, 4>, Scalar> raised;
            for (const auto& [key, v] : m) {
                if (v.is_zero())
                    continue;
                for (int a = 1; a <= n; ++a) {
                    const Scalar& ga = gi.at(a - 1, key[0] - 1);
                    if (ga.is_zero())
                        continue;
                    for (int b = 1; b <= n; ++b) {
                        const Scalar& gb = gi.at(b - 1, key[1] - 1);
                        if (gb.is_zero())
                            continue;
                        const std::array<int, 4> rk{a, b, key[2], key[3]};
                        const Scalar add = ga * gb * v;
                        auto [it, inserted] = raised.emplace(rk, add);
                        if (!inserted)
                            it->second += add;
                    }
                }
            }
            const Scalar half(Rational(1, 2));
            for (const auto& [key, v] : raised)
                op.add_product_term(half * v, {key[0], key[1]}, {key[2], key[3]});
            return op;
        }
        case AuxOperator::Z: {
            return build_auxiliary(sc, km, AuxOperator::Dilatation) -
                   build_auxiliary(sc, km, AuxOperator::K);
        }
        case AuxOperator::NConst: {
            return GrassmannOperator::identity(n) * Scalar(n);
        }
    }
    throw std::logic_error("unreachable");
}

/// BRST charge Q = T^a G_a - (1/2) T^a T^b c_{ab}^g d_{T^g} for the given
/// generator representation.
inline GrassmannOperator build_brst(const StructureConstants& sc, const KillingMetric& km,
                                    const std::vector<GrassmannOperator>& generators) {
    const int n = sc.dim();
    if (static_cast<int>(generators.size()) != n)
        throw std::invalid_argument("build_brst: need exactly dim generators");
    const ScalarMatrix& gi = km.g_inv();  // throws when degenerate
    GrassmannOperator q(n);
    for (int a = 1; a <= n; ++a) {
        // T^a = g^{ax} T_x
        for (int x = 1; x <= n; ++x) {
            const Scalar& coeff = gi.at(a - 1, x - 1);
            if (coeff.is_zero())
                continue;
            q += compose(GrassmannOperator::theta(n, x),
                         generators[static_cast<std::size_t>(a - 1)]) *
                 coeff;
        }
    }
    // (1/2) T^a T^b c_{ab}^g d_{T^g} = (sqrt2/2) Delta_{+1}
    q -= build_delta(sc, km, DeltaKind::Plus1) * detail::inv_sqrt2();
    return q;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // offending normal-form difference when failed
};

struct SuperalgebraReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

namespace detail {

inline CheckResult op_vanishes(const std::string& name, const GrassmannOperator& op) {
    return {name, op.is_zero(), op.is_zero() ? "" : op.to_string()};
}

inline CheckResult ops_equal(const std::string& name, const GrassmannOperator& got,
                             const GrassmannOperator& want) {
    const GrassmannOperator diff = got - want;
    return {name, diff.is_zero(), diff.is_zero() ? "" : diff.to_string()};
}

}  // namespace detail

/// The eleven exact checks of the superalgebra for a semi-simple algebra.
inline SuperalgebraReport verify_superalgebra(const StructureConstants& sc,
                                              const KillingMetric& km) {
    const int n = sc.dim();
    const auto rep = validate(sc);
    if (!rep.ok())
        throw std::invalid_argument("verify_superalgebra: structure constants are invalid");
    const ScalarMatrix& gi = km.g_inv();  // throws when degenerate

    const GrassmannOperator d_p3 = build_delta(sc, km, DeltaKind::Plus3);
    const GrassmannOperator d_p1 = build_delta(sc, km, DeltaKind::Plus1);
    const GrassmannOperator d_m1 = build_delta(sc, km, DeltaKind::Minus1);
    const GrassmannOperator d_m3 = build_delta(sc, km, DeltaKind::Minus3);
    const GrassmannOperator dil = build_auxiliary(sc, km, AuxOperator::Dilatation);
    const GrassmannOperator z = build_auxiliary(sc, km, AuxOperator::Z);
    const GrassmannOperator n_const = build_auxiliary(sc, km, AuxOperator::NConst);
    const std::vector<GrassmannOperator> gens = build_generators(sc);

    const struct {
        DeltaKind kind;
        const GrassmannOperator* op;
    } deltas[] = {{DeltaKind::Minus3, &d_m3},
                  {DeltaKind::Minus1, &d_m1},
                  {DeltaKind::Plus1, &d_p1},
                  {DeltaKind::Plus3, &d_p3}};

    // The checks only read the shared immutable operators, so they run as
    // independent tasks; results are collected in a fixed order.
    std::vector<std::function<CheckResult()>> tasks;

    tasks.emplace_back([&]() -> CheckResult {
        // (i) contraction identities: the quadratic and cubic Theta
        // contractions as vanishing polynomials in the raised variables,
        // their derivative counterparts as vanishing lowered operators.
        bool ok = true;
        std::string witness;
        std::vector<Scalar> inner(static_cast<std::size_t>(n) * n * n * n);
        const auto c = detail::dense_table(sc);
        auto cidx = [n](int a, int b, int g) {
            return static_cast<std::size_t>(a) * n * n + static_cast<std::size_t>(b) * n + g;
        };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int g = 0; g < n; ++g)
                    for (int d = 0; d < n; ++d) {
                        Scalar s;
                        for (int l = 0; l < n; ++l) {
                            s += c[cidx(a, b, l)] * c[cidx(l, g, d)];
                            s += Scalar(2) * (c[cidx(g, a, l)] * c[cidx(l, b, d)]);
                        }
                        inner[(static_cast<std::size_t>(a) * n * n * n) + b * n * n + g * n + d] = s;
                    }
        // quadratic derivative contraction: inner_{abgd} d_a d_b = 0 per (g, d)
        for (int g = 1; g <= n && ok; ++g)
            for (int d = 1; d <= n && ok; ++d) {
                GrassmannOperator op(n);
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b) {
                        const Scalar& v = inner[(static_cast<std::size_t>(a - 1) * n * n * n) +
                                                (b - 1) * n * n + (g - 1) * n + (d - 1)];
                        if (!v.is_zero())
                            op.add_product_term(v, {}, {a, b});
                    }
                if (!op.is_zero()) {
                    ok = false;
                    witness = "quadratic derivative contraction at (g,d)=(" + std::to_string(g) + "," + std::to_string(d) +
                              "): " + op.to_string();
                }
            }
        // quadratic Theta contraction: T^a T^b inner_{abgd} = 0, a and b raised
        for (int g = 1; g <= n && ok; ++g)
            for (int d = 1; d <= n && ok; ++d) {
                SuperPolynomial p;
                for (int a = 1; a <= n; ++a)
                    for (int b = 1; b <= n; ++b) {
                        Scalar v;
                        for (int x = 1; x <= n; ++x)
                            for (int y = 1; y <= n; ++y) {
                                const Scalar& w =
                                    inner[(static_cast<std::size_t>(x - 1) * n * n * n) +
                                          (y - 1) * n * n + (g - 1) * n + (d - 1)];
                                if (!w.is_zero())
                                    v += gi.at(a - 1, x - 1) * gi.at(b - 1, y - 1) * w;
                            }
                        if (!v.is_zero()) {
                            GrassmannOperator tmp(n);
                            tmp.add_product_term(v, {a, b}, {});
                            p += tmp.as_polynomial();
                        }
                    }
                if (!p.is_zero()) {
                    ok = false;
                    witness = "quadratic Theta contraction at (g,d)=(" + std::to_string(g) + "," + std::to_string(d) +
                              "): " + p.to_string();
                }
            }
        // inner3_{abg}^d = sum_l c_{ab}^l c_{lg}^d feeds the cubic contractions
        for (int d = 1; d <= n && ok; ++d) {
            GrassmannOperator op(n);
            SuperPolynomial poly;
            std::vector<Scalar> inner3(static_cast<std::size_t>(n) * n * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int g = 0; g < n; ++g) {
                        Scalar s;
                        for (int l = 0; l < n; ++l)
                            s += c[cidx(a, b, l)] * c[cidx(l, g, d - 1)];
                        inner3[cidx(a, b, g)] = s;
                    }
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int g = 1; g <= n; ++g) {
                        const Scalar& v = inner3[cidx(a - 1, b - 1, g - 1)];
                        if (!v.is_zero())
                            op.add_product_term(v, {}, {a, b, g});
                    }
            if (!op.is_zero()) {
                ok = false;
                witness = "cubic derivative contraction at d=" + std::to_string(d) + ": " + op.to_string();
                break;
            }
            // cubic Theta contraction needs all three indices raised
            auto raised = inner3;
            for (int slot = 0; slot < 3; ++slot)
                raised = detail::rotate3(n, detail::raise_first_index(km, raised));
            GrassmannOperator mult(n);
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int g = 1; g <= n; ++g) {
                        const Scalar& v = raised[cidx(a - 1, b - 1, g - 1)];
                        if (!v.is_zero())
                            mult.add_product_term(v, {a, b, g}, {});
                    }
            poly = mult.as_polynomial();
            if (!poly.is_zero()) {
                ok = false;
                witness = "cubic Theta contraction at d=" + std::to_string(d) + ": " + poly.to_string();
                break;
            }
        }
        return {"contraction-identities", ok, witness};
    });

    tasks.emplace_back([&]() -> CheckResult {
        // (ii) nilpotency of all four Delta operators
        bool ok = true;
        std::string witness;
        for (const auto& [kind, op] : deltas) {
            const GrassmannOperator sq = compose(*op, *op);
            if (!sq.is_zero()) {
                ok = false;
                witness = std::string(delta_name(kind)) + " squared: " + sq.to_string();
                break;
            }
        }
        return {"nilpotency", ok, witness};
    });

    tasks.emplace_back([&] {
        return detail::ops_equal("anticommutator-dm1-dp1-is-Z", anticommutator(d_m1, d_p1), z);
    });
    tasks.emplace_back([&] {
        return detail::ops_equal("anticommutator-dm3-dp3-is-N-minus-3Z",
                                 anticommutator(d_m3, d_p3), n_const - z * Scalar(3));
    });

    tasks.emplace_back([&]() -> CheckResult {
        // (v) Z is central among the Deltas
        bool ok = true;
        std::string witness;
        for (const auto& [kind, op] : deltas) {
            const GrassmannOperator comm = commutator(z, *op);
            if (!comm.is_zero()) {
                ok = false;
                witness = std::string("[Z, ") + delta_name(kind) + "]: " + comm.to_string();
                break;
            }
        }
        return {"Z-commutes-with-deltas", ok, witness};
    });

    tasks.emplace_back([&]() -> CheckResult {
        // (vi) D grades the Deltas by their weight
        bool ok = true;
        std::string witness;
        for (const auto& [kind, op] : deltas) {
            const GrassmannOperator diff =
                commutator(dil, *op) - *op * Scalar(delta_weight(kind));
            if (!diff.is_zero()) {
                ok = false;
                witness = std::string("[D, ") + delta_name(kind) + "] - lambda*delta: " +
                          diff.to_string();
                break;
            }
        }
        return {"D-grades-deltas", ok, witness};
    });

    tasks.emplace_back(
        [&] { return detail::op_vanishes("Z-commutes-with-D", commutator(z, dil)); });

    tasks.emplace_back([&]() -> CheckResult {
        // (viii) every S_a commutes with the Deltas, Z and D
        bool ok = true;
        std::string witness;
        for (int a = 0; a < n && ok; ++a) {
            for (const auto& [kind, op] : deltas) {
                const GrassmannOperator comm = commutator(gens[static_cast<std::size_t>(a)], *op);
                if (!comm.is_zero()) {
                    ok = false;
                    witness = "[S_" + std::to_string(a + 1) + ", " + delta_name(kind) +
                              "]: " + comm.to_string();
                    break;
                }
            }
            if (!ok)
                break;
            const GrassmannOperator cz = commutator(gens[static_cast<std::size_t>(a)], z);
            const GrassmannOperator cd = commutator(gens[static_cast<std::size_t>(a)], dil);
            if (!cz.is_zero() || !cd.is_zero()) {
                ok = false;
                witness = "[S_" + std::to_string(a + 1) + ", Z or D] nonzero";
            }
        }
        return {"generators-commute-with-algebra", ok, witness};
    });

    tasks.emplace_back([&]() -> CheckResult {
        // (ix) Z equals the quadratic Casimir S_a S_b g^{ab}
        GrassmannOperator casimir(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Scalar& coeff = gi.at(a, b);
                if (coeff.is_zero())
                    continue;
                casimir += compose(gens[static_cast<std::size_t>(a)],
                                   gens[static_cast<std::size_t>(b)]) *
                           coeff;
            }
        return detail::ops_equal("Z-is-quadratic-casimir", casimir, z);
    });

    tasks.emplace_back([&]() -> CheckResult {
        // (x) anticommutators the superalgebra does not list must vanish;
        // a nonzero one is reported as a finding.
        bool ok = true;
        std::string witness;
        const std::pair<const GrassmannOperator*, const GrassmannOperator*> unlisted[] = {
            {&d_p1, &d_p3}, {&d_m1, &d_m3}, {&d_m1, &d_p3}, {&d_p1, &d_m3}};
        const char* labels[] = {"{d+1,d+3}", "{d-1,d-3}", "{d-1,d+3}", "{d+1,d-3}"};
        for (std::size_t i = 0; i < 4; ++i) {
            const GrassmannOperator anti = anticommutator(*unlisted[i].first, *unlisted[i].second);
            if (!anti.is_zero()) {
                ok = false;
                witness = std::string("finding: ") + labels[i] + " = " + anti.to_string();
                break;
            }
        }
        return {"unlisted-anticommutators-vanish", ok, witness};
    });

    tasks.emplace_back([&]() -> CheckResult {
        // (xi) divergence identity d_a (S_a A) = -sqrt2 Delta_{-1} A on the
        // whole monomial basis
        bool ok = true;
        std::string witness;
        const Scalar minus_sqrt2 = -Scalar::sqrt2();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && ok; ++mask) {
            SuperMonomial m;
            m.theta = mask;
            SuperPolynomial basis;
            basis.add_term(m, Scalar(1));
            SuperPolynomial lhs;
            for (int a = 1; a <= n; ++a)
                lhs += left_deriv_odd(gens[static_cast<std::size_t>(a - 1)].apply(basis),
                                      var_theta(a));
            const SuperPolynomial rhs = d_m1.apply(basis) * minus_sqrt2;
            if (lhs != rhs) {
                ok = false;
                witness = "basis mask " + std::to_string(mask) + ": lhs = " + lhs.to_string() +
                          ", rhs = " + rhs.to_string();
            }
        }
        return {"divergence-identity", ok, witness};
    });

    std::vector<std::future<CheckResult>> futures;
    futures.reserve(tasks.size());
    for (auto& task : tasks)
        futures.push_back(std::async(std::launch::async, task));
    SuperalgebraReport report;
    for (auto& f : futures)
        report.checks.push_back(f.get());
    return report;
}

/// Degenerate-metric case: only the two lowered-index operators exist and
/// they anticommute trivially.
inline SuperalgebraReport verify_degenerate(const StructureConstants& sc) {
    const KillingMetric km = killing(sc);
    if (km.invertible())
        throw std::invalid_argument(
            "verify_degenerate: the Killing form of '" + sc.name() +
            "' is invertible; use the full superalgebra verification instead");
    const GrassmannOperator d_m1 = build_delta(sc, km, DeltaKind::Minus1);
    const GrassmannOperator d_m3 = build_delta(sc, km, DeltaKind::Minus3);
    SuperalgebraReport report;
    report.checks.push_back(
        detail::op_vanishes("delta-1-squared", compose(d_m1, d_m1)));
    report.checks.push_back(
        detail::op_vanishes("delta-3-squared", compose(d_m3, d_m3)));
    report.checks.push_back(
        detail::op_vanishes("anticommutator-dm1-dm3", anticommutator(d_m1, d_m3)));
    return report;
}

struct CompatibilityReport {
    bool tensor_compatible = false;
    bool operators_anticommute = false;
    std::string tensor_witness;
    std::string operator_witness;

    bool agree() const { return tensor_compatible == operators_anticommute; }
};

/// Compare the symmetrized cyclic mixed-Jacobi condition on a pair of
/// tables with the anticommutator of their Delta_{-1} operators.
inline CompatibilityReport verify_compatibility(const StructureConstants& sc1,
                                                const StructureConstants& sc2) {
    if (sc1.dim() != sc2.dim())
        throw std::invalid_argument("verify_compatibility: dimension mismatch");
    const int n = sc1.dim();
    CompatibilityReport report;
    report.tensor_compatible = true;
    // sum over cyclic (a,b,g), symmetrized over the two table labels
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int g = 1; g <= n; ++g)
                for (int d = 1; d <= n; ++d) {
                    Scalar s;
                    const int cyc[3][3] = {{a, b, g}, {b, g, a}, {g, a, b}};
                    for (const auto& t : cyc)
                        for (int l = 1; l <= n; ++l) {
                            s += sc1.at(t[0], t[1], l) * sc2.at(l, t[2], d);
                            s += sc2.at(t[0], t[1], l) * sc1.at(l, t[2], d);
                        }
                    if (!s.is_zero()) {
                        if (report.tensor_compatible) {
                            report.tensor_compatible = false;
                            report.tensor_witness =
                                "residual at (a,b,g,d)=(" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(g) + "," +
                                std::to_string(d) + "): " + s.to_string();
                        }
                    }
                }
    const KillingMetric km1 = killing(sc1);
    const KillingMetric km2 = killing(sc2);
    const GrassmannOperator anti = anticommutator(build_delta(sc1, km1, DeltaKind::Minus1),
                                                  build_delta(sc2, km2, DeltaKind::Minus1));
    report.operators_anticommute = anti.is_zero();
    if (!anti.is_zero())
        report.operator_witness = anti.to_string();
    return report;
}

}  // namespace oddp
