/*
 * brackets.hpp
 * ------------
 * The four Poisson brackets and their executable axiom suite.
 *
 *   canonical even   {A,B}_0 = sum_a (dA/dq^a dB/dp_a - dA/dp_a dB/dq^a)
 *   canonical odd    {A,B}_1 = sum_a (dA/dq^a d^L B/dth_a - A d^R/dth_a dB/dq^a)
 *   linear even      {A,B}_0 = (dA/dX_a) c_{ab}^g X_g (dB/dX_b)
 *   linear odd       {A,B}_1 = (A d^R/dT_a) c_{ab}^g T_g (d^L B/dT_b)
 *
 * The linear brackets are computed term-by-term from the derivative
 * formulas, never by bilinear extension from generators, so the generator
 * relation {T_a, T_b}_1 = c_{ab}^g T_g stays an independently testable
 * consequence.
 */
#pragma once

#include <oddp/lie_algebra.hpp>
#include <oddp/random_poly.hpp>
#include <oddp/superpoly.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddp {

enum class BracketTag { CanonicalEven, CanonicalOdd, LinearEven, LinearOdd };

inline const char* bracket_name(BracketTag tag) {
    switch (tag) {
        case BracketTag::CanonicalEven: return "canonical-even";
        case BracketTag::CanonicalOdd: return "canonical-odd";
        case BracketTag::LinearEven: return "linear-even";
        case BracketTag::LinearOdd: return "linear-odd";
    }
    return "?";
}

class BracketKind {
public:
    static BracketKind canonical_even(int dim) { return {BracketTag::CanonicalEven, dim, {}}; }
    static BracketKind canonical_odd(int dim) { return {BracketTag::CanonicalOdd, dim, {}}; }
    static BracketKind linear_even(StructureConstants sc) {
        const int n = sc.dim();
        return {BracketTag::LinearEven, n, std::move(sc)};
    }
    static BracketKind linear_odd(StructureConstants sc) {
        const int n = sc.dim();
        return {BracketTag::LinearOdd, n, std::move(sc)};
    }

    BracketTag tag() const { return tag_; }
    int dim() const { return dim_; }
    bool odd() const { return tag_ == BracketTag::CanonicalOdd || tag_ == BracketTag::LinearOdd; }

    const StructureConstants& sc() const {
        if (!sc_)
            throw std::logic_error("bracket kind carries no structure constants");
        return *sc_;
    }

private:
    BracketKind(BracketTag tag, int dim, std::optional<StructureConstants> sc)
        : tag_(tag), dim_(dim), sc_(std::move(sc)) {}

    BracketTag tag_;
    int dim_;
    std::optional<StructureConstants> sc_;
};

namespace detail {

inline void require_operand(const BracketKind& kind, const SuperPolynomial& p,
                            const char* side) {
    for (const auto& [m, c] : p.terms()) {
        int max_odd_index = 0;
        if (m.theta != 0)
            max_odd_index = 64 - std::countl_zero(m.theta);
        if (m.small_theta != 0)
            max_odd_index = std::max(max_odd_index, 64 - std::countl_zero(m.small_theta));
        switch (kind.tag()) {
            case BracketTag::LinearOdd:
                if (!m.even.empty() || m.small_theta != 0)
                    throw std::invalid_argument(std::string("linear-odd bracket: ") + side +
                                                " operand must use only T variables");
                break;
            case BracketTag::LinearEven:
                if (m.theta != 0 || m.small_theta != 0)
                    throw std::invalid_argument(std::string("linear-even bracket: ") + side +
                                                " operand must use only X variables");
                for (const auto& [v, e] : m.even)
                    if (v.family != Family::X)
                        throw std::invalid_argument(std::string("linear-even bracket: ") + side +
                                                    " operand must use only X variables");
                break;
            case BracketTag::CanonicalOdd:
                if (m.theta != 0)
                    throw std::invalid_argument(std::string("canonical-odd bracket: ") + side +
                                                " operand must use q and th variables");
                for (const auto& [v, e] : m.even)
                    if (v.family != Family::Q)
                        throw std::invalid_argument(std::string("canonical-odd bracket: ") + side +
                                                    " operand must use q and th variables");
                break;
            case BracketTag::CanonicalEven:
                if (m.theta != 0 || m.small_theta != 0)
                    throw std::invalid_argument(std::string("canonical-even bracket: ") + side +
                                                " operand must use q and p variables");
                for (const auto& [v, e] : m.even)
                    if (v.family != Family::Q && v.family != Family::P)
                        throw std::invalid_argument(std::string("canonical-even bracket: ") + side +
                                                    " operand must use q and p variables");
                break;
        }
        for (const auto& [v, e] : m.even)
            if (v.index > kind.dim())
                throw std::invalid_argument(std::string(side) + " operand index " +
                                            variable_name(v) + " exceeds dimension " +
                                            std::to_string(kind.dim()));
        if (max_odd_index > kind.dim())
            throw std::invalid_argument(std::string(side) + " operand odd index exceeds dimension " +
                                        std::to_string(kind.dim()));
    }
}

}  // namespace detail

/// Exact bracket of two polynomials under the given kind.
inline SuperPolynomial bracket(const BracketKind& kind, const SuperPolynomial& a,
                               const SuperPolynomial& b) {
    detail::require_operand(kind, a, "left");
    detail::require_operand(kind, b, "right");
    SuperPolynomial result;
    switch (kind.tag()) {
        case BracketTag::CanonicalEven: {
            for (int i = 1; i <= kind.dim(); ++i) {
                result += deriv_even(a, var_q(i)) * deriv_even(b, var_p(i));
                result -= deriv_even(a, var_p(i)) * deriv_even(b, var_q(i));
            }
            break;
        }
        case BracketTag::CanonicalOdd: {
            for (int i = 1; i <= kind.dim(); ++i) {
                result += deriv_even(a, var_q(i)) * left_deriv_odd(b, var_small_theta(i));
                result -= right_deriv_odd(a, var_small_theta(i)) * deriv_even(b, var_q(i));
            }
            break;
        }
        case BracketTag::LinearEven: {
            for (const auto& [key, v] : kind.sc().entries()) {
                const auto da = deriv_even(a, var_x(key[0]));
                if (da.is_zero())
                    continue;
                const auto db = deriv_even(b, var_x(key[1]));
                if (db.is_zero())
                    continue;
                result += da * (SuperPolynomial::variable(var_x(key[2])) * v) * db;
            }
            break;
        }
        case BracketTag::LinearOdd: {
            for (const auto& [key, v] : kind.sc().entries()) {
                const auto da = right_deriv_odd(a, var_theta(key[0]));
                if (da.is_zero())
                    continue;
                const auto db = left_deriv_odd(b, var_theta(key[1]));
                if (db.is_zero())
                    continue;
                result += da * (SuperPolynomial::variable(var_theta(key[2])) * v) * db;
            }
            break;
        }
    }
    return result;
}

struct AxiomFailure {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct AxiomCheck {
    std::string axiom;
    int samples = 0;
    std::vector<AxiomFailure> failures;
};

struct AxiomReport {
    std::string bracket;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.failures.empty())
                return false;
        return true;
    }
};

namespace detail {

inline RandomPolySource poly_source_for(const BracketKind& kind) {
    switch (kind.tag()) {
        case BracketTag::CanonicalEven:
            return RandomPolySource(kind.dim(), {Family::Q, Family::P}, {});
        case BracketTag::CanonicalOdd:
            return RandomPolySource(kind.dim(), {Family::Q}, {Family::SmallTheta});
        case BracketTag::LinearEven:
            return RandomPolySource(kind.dim(), {Family::X}, {});
        case BracketTag::LinearOdd:
            return RandomPolySource(kind.dim(), {}, {Family::Theta});
    }
    throw std::logic_error("unreachable");
}

inline int parity_bit_of(const SuperPolynomial& p) {
    return p.parity() == Parity::Odd ? 1 : 0;
}

inline void record_failure(AxiomCheck& check, const SuperPolynomial& a,
                           const SuperPolynomial& b, const SuperPolynomial* c,
                           const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
    AxiomFailure f;
    f.inputs = "A = " + a.to_string() + "; B = " + b.to_string();
    if (c != nullptr)
        f.inputs += "; C = " + c->to_string();
    f.lhs = lhs.to_string();
    f.rhs = rhs.to_string();
    check.failures.push_back(std::move(f));
}

}  // namespace detail

/// Verify the five bracket laws on `samples` random homogeneous triples.
/// The shift in the parity and sign rules is 1 for the odd brackets and 0
/// for the even ones; failures are reported verbatim.
inline AxiomReport check_axioms(const BracketKind& kind, int samples, std::uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("check_axioms: samples must be >= 1");
    const RandomPolySource source = detail::poly_source_for(kind);
    const int shift = kind.odd() ? 1 : 0;

    AxiomReport report;
    report.bracket = bracket_name(kind.tag());
    report.seed = seed;
    report.samples = samples;
    AxiomCheck bilinearity{"bilinearity", samples, {}};
    AxiomCheck parity_shift{"parity-shift", samples, {}};
    AxiomCheck symmetry{"graded-symmetry", samples, {}};
    AxiomCheck jacobi{"jacobi", samples, {}};
    AxiomCheck leibniz{"leibniz", samples, {}};

    for (int i = 0; i < samples; ++i) {
        auto rng = sample_stream(seed, static_cast<std::uint64_t>(i));
        const SuperPolynomial a = source.sample(rng);
        const SuperPolynomial b = source.sample(rng);
        const SuperPolynomial c = source.sample(rng);
        const int ga = detail::parity_bit_of(a);
        const int gb = detail::parity_bit_of(b);
        const int gc = detail::parity_bit_of(c);

        {
            const auto lhs = bracket(kind, a, b + c);
            const auto rhs = bracket(kind, a, b) + bracket(kind, a, c);
            if (lhs != rhs)
                detail::record_failure(bilinearity, a, b, &c, lhs, rhs);
        }
        {
            // Parity is stated for homogeneous arguments; decompose first.
            bool bad = false;
            SuperPolynomial witness;
            for (int pa = 0; pa <= 1 && !bad; ++pa)
                for (int pb = 0; pb <= 1 && !bad; ++pb) {
                    const auto part = bracket(kind, a.homogeneous_part(pa),
                                              b.homogeneous_part(pb));
                    if (part.is_zero())
                        continue;
                    const int expect = (pa + pb + shift) & 1;
                    const Parity got = part.parity();
                    if (got == Parity::Mixed ||
                        (got == Parity::Odd ? 1 : 0) != expect) {
                        bad = true;
                        witness = part;
                    }
                }
            if (bad)
                detail::record_failure(parity_shift, a, b, nullptr, witness, witness);
        }
        {
            const auto lhs = bracket(kind, a, b);
            auto rhs = bracket(kind, b, a);
            const int sign_exp = (ga + shift) * (gb + shift);
            if ((sign_exp & 1) == 0)
                rhs = -rhs;
            if (lhs != rhs)
                detail::record_failure(symmetry, a, b, nullptr, lhs, rhs);
        }
        {
            auto term = [&](const SuperPolynomial& x, const SuperPolynomial& y,
                            const SuperPolynomial& z, int gx, int gz) {
                auto t = bracket(kind, x, bracket(kind, y, z));
                if ((((gx + shift) * (gz + shift)) & 1) != 0)
                    t = -t;
                return t;
            };
            const auto lhs = term(a, b, c, ga, gc) + term(b, c, a, gb, ga) +
                             term(c, a, b, gc, gb);
            if (!lhs.is_zero())
                detail::record_failure(jacobi, a, b, &c, lhs, SuperPolynomial::zero());
        }
        {
            const auto lhs = bracket(kind, a, b * c);
            auto second = b * bracket(kind, a, c);
            if ((((ga + shift) * gb) & 1) != 0)
                second = -second;
            const auto rhs = bracket(kind, a, b) * c + second;
            if (lhs != rhs)
                detail::record_failure(leibniz, a, b, &c, lhs, rhs);
        }
    }
    report.checks = {std::move(bilinearity), std::move(parity_shift), std::move(symmetry),
                     std::move(jacobi), std::move(leibniz)};
    return report;
}

enum class RealizationKind { Even, Odd };

/// The bilinear composites X_a = c_{ab}^g q^b p_g (even) or
/// T_a = c_{ab}^g q^b th_g (odd) that reduce the canonical bracket to the
/// linear one.
inline std::vector<SuperPolynomial> bilinear_realization(RealizationKind which,
                                                         const StructureConstants& sc) {
    const int n = sc.dim();
    std::vector<SuperPolynomial> out(static_cast<std::size_t>(n));
    for (const auto& [key, v] : sc.entries()) {
        const auto q_factor = SuperPolynomial::variable(var_q(key[1]));
        const auto second = (which == RealizationKind::Even)
                                ? SuperPolynomial::variable(var_p(key[2]))
                                : SuperPolynomial::variable(var_small_theta(key[2]));
        out[static_cast<std::size_t>(key[0] - 1)] += q_factor * second * v;
    }
    return out;
}

/// C = X_a X_b g^{ab}; annihilates the linear even bracket.
inline SuperPolynomial even_casimir(const StructureConstants& sc, const KillingMetric& km) {
    const ScalarMatrix& gi = km.g_inv();  // throws when degenerate
    const int n = sc.dim();
    SuperPolynomial c;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const Scalar& coeff = gi.at(a - 1, b - 1);
            if (coeff.is_zero())
                continue;
            c += SuperPolynomial::variable(var_x(a)) * SuperPolynomial::variable(var_x(b)) * coeff;
        }
    return c;
}

}  // namespace oddp
