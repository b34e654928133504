/*
 * superpoly.hpp
 * -------------
 * Canonical-form supercommutative polynomials over even variables
 * (q^a, p_a, X_a) and odd variables (T_a for capital Theta, th_a for small
 * theta), with left/right Grassmann derivatives and even partials.
 *
 * Representation.  A monomial keeps its even part as a sorted
 * (variable, exponent) vector and each odd family as a bitmask, so odd
 * products and derivatives are popcount arithmetic.  The canonical factor
 * order is (family, index) ascending with the Theta family before the
 * small-theta family; every constructor sign-normalizes into that order.
 * A polynomial is a map monomial -> nonzero coefficient, so structural
 * equality is exactly mathematical equality.
 */
#pragma once

#include <oddp/scalar.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddp {

enum class Family : std::uint8_t { Q, P, X, Theta, SmallTheta };

constexpr bool family_is_odd(Family f) {
    return f == Family::Theta || f == Family::SmallTheta;
}

constexpr const char* family_prefix(Family f) {
    switch (f) {
        case Family::Q: return "q";
        case Family::P: return "p";
        case Family::X: return "X";
        case Family::Theta: return "T";
        case Family::SmallTheta: return "th";
    }
    return "?";
}

/// Odd indices live in bitmasks, one bit per index starting at 1.
inline constexpr int kMaxOddIndex = 32;

struct VariableId {
    Family family;
    std::int32_t index;  // 1-based

    int parity() const { return family_is_odd(family) ? 1 : 0; }

    auto operator<=>(const VariableId&) const = default;
};

inline VariableId var_q(int i) { return {Family::Q, i}; }
inline VariableId var_p(int i) { return {Family::P, i}; }
inline VariableId var_x(int i) { return {Family::X, i}; }
inline VariableId var_theta(int i) { return {Family::Theta, i}; }
inline VariableId var_small_theta(int i) { return {Family::SmallTheta, i}; }

inline std::string variable_name(VariableId v) {
    return std::string(family_prefix(v.family)) + std::to_string(v.index);
}

namespace detail {

inline std::uint64_t bit_of(int index) { return std::uint64_t{1} << (index - 1); }

/// Bits strictly below `index`'s bit.
inline std::uint64_t below(int index) { return bit_of(index) - 1; }

/// Bits strictly above `index`'s bit.
inline std::uint64_t above(int index) { return ~(bit_of(index) | below(index)); }

inline int popcount(std::uint64_t m) { return std::popcount(m); }

/// Transpositions needed to merge canonical lists A,B into one canonical
/// list, with all Theta factors preceding all small-theta factors.
inline int merge_swaps(std::uint64_t a_theta, std::uint64_t a_small,
                       std::uint64_t b_theta, std::uint64_t b_small) {
    int swaps = 0;
    for (std::uint64_t m = b_theta; m != 0; m &= m - 1) {
        const int idx = std::countr_zero(m) + 1;
        swaps += popcount(a_theta & above(idx)) + popcount(a_small);
    }
    for (std::uint64_t m = b_small; m != 0; m &= m - 1) {
        const int idx = std::countr_zero(m) + 1;
        swaps += popcount(a_small & above(idx));
    }
    return swaps;
}

}  // namespace detail

struct SuperMonomial {
    /// Sorted by variable, exponents > 0, even families only.
    std::vector<std::pair<VariableId, int>> even;
    std::uint64_t theta = 0;        // capital Theta factors
    std::uint64_t small_theta = 0;  // small theta factors

    int parity() const {
        return (detail::popcount(theta) + detail::popcount(small_theta)) & 1;
    }

    int odd_degree() const {
        return detail::popcount(theta) + detail::popcount(small_theta);
    }

    int even_degree() const {
        int d = 0;
        for (const auto& [v, e] : even) d += e;
        return d;
    }

    bool is_unit() const { return even.empty() && theta == 0 && small_theta == 0; }

    auto operator<=>(const SuperMonomial&) const = default;
};

enum class Parity { Even, Odd, Mixed };

class SuperPolynomial {
public:
    using TermMap = std::map<SuperMonomial, Scalar>;

    SuperPolynomial() = default;

    static SuperPolynomial zero() { return {}; }

    static SuperPolynomial constant(Scalar s) {
        SuperPolynomial p;
        if (!s.is_zero())
            p.terms_.emplace(SuperMonomial{}, std::move(s));
        return p;
    }

    static SuperPolynomial variable(VariableId v) {
        SuperMonomial m;
        if (family_is_odd(v.family)) {
            if (v.index < 1 || v.index > kMaxOddIndex)
                throw std::invalid_argument("odd variable index out of range: " +
                                            variable_name(v));
            (v.family == Family::Theta ? m.theta : m.small_theta) = detail::bit_of(v.index);
        } else {
            if (v.index < 1)
                throw std::invalid_argument("variable index must be >= 1");
            m.even.emplace_back(v, 1);
        }
        SuperPolynomial p;
        p.terms_.emplace(std::move(m), Scalar(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a monomial (zero if absent).
    Scalar coefficient(const SuperMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const SuperMonomial& m, const Scalar& coeff) {
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    SuperPolynomial operator-() const {
        SuperPolynomial r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    SuperPolynomial operator+(const SuperPolynomial& o) const {
        SuperPolynomial r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }

    SuperPolynomial operator-(const SuperPolynomial& o) const {
        SuperPolynomial r = *this;
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }

    SuperPolynomial operator*(const Scalar& s) const {
        SuperPolynomial r;
        if (s.is_zero())
            return r;
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, c * s);
        return r;
    }

    /// Graded-commutative product: odd factors merge with the sign of the
    /// sorting permutation and annihilate on repetition.
    SuperPolynomial operator*(const SuperPolynomial& o) const {
        SuperPolynomial r;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                if ((ma.theta & mb.theta) != 0 || (ma.small_theta & mb.small_theta) != 0)
                    continue;  // repeated odd factor
                const int swaps = detail::merge_swaps(ma.theta, ma.small_theta,
                                                      mb.theta, mb.small_theta);
                SuperMonomial m;
                m.theta = ma.theta | mb.theta;
                m.small_theta = ma.small_theta | mb.small_theta;
                m.even = merge_even(ma.even, mb.even);
                Scalar c = ca * cb;
                if (swaps & 1)
                    c = -c;
                r.add_term(m, c);
            }
        }
        return r;
    }

    SuperPolynomial& operator+=(const SuperPolynomial& o) { return *this = *this + o; }
    SuperPolynomial& operator-=(const SuperPolynomial& o) { return *this = *this - o; }
    SuperPolynomial& operator*=(const SuperPolynomial& o) { return *this = *this * o; }

    bool operator==(const SuperPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SuperPolynomial& o) const { return !(*this == o); }

    /// Parity of the zero polynomial is Even by convention.
    Parity parity() const {
        if (terms_.empty())
            return Parity::Even;
        const int p = terms_.begin()->first.parity();
        for (const auto& [m, c] : terms_)
            if (m.parity() != p)
                return Parity::Mixed;
        return p == 0 ? Parity::Even : Parity::Odd;
    }

    /// Terms of the requested parity.
    SuperPolynomial homogeneous_part(int parity_bit) const {
        SuperPolynomial r;
        for (const auto& [m, c] : terms_)
            if (m.parity() == parity_bit)
                r.terms_.emplace(m, c);
        return r;
    }

    int max_even_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.even_degree());
        return d;
    }

    std::string to_string() const;

private:
    static std::vector<std::pair<VariableId, int>> merge_even(
        const std::vector<std::pair<VariableId, int>>& a,
        const std::vector<std::pair<VariableId, int>>& b) {
        std::vector<std::pair<VariableId, int>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first < b[j].first) {
                out.push_back(a[i++]);
            } else if (b[j].first < a[i].first) {
                out.push_back(b[j++]);
            } else {
                out.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) out.push_back(b[j]);
        return out;
    }

    TermMap terms_;
};

inline SuperPolynomial operator*(const Scalar& s, const SuperPolynomial& p) { return p * s; }

/// Left Grassmann derivative: on T_{i1}...T_{ik} removing the m-th factor
/// costs (-1)^(m-1).
inline SuperPolynomial left_deriv_odd(const SuperPolynomial& p, VariableId v) {
    if (!family_is_odd(v.family))
        throw std::invalid_argument("left_deriv_odd: even variable " + variable_name(v));
    const std::uint64_t bit = detail::bit_of(v.index);
    SuperPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        const std::uint64_t mask = (v.family == Family::Theta) ? m.theta : m.small_theta;
        if ((mask & bit) == 0)
            continue;
        int before;
        if (v.family == Family::Theta) {
            before = detail::popcount(m.theta & detail::below(v.index));
        } else {
            before = detail::popcount(m.theta) +
                     detail::popcount(m.small_theta & detail::below(v.index));
        }
        SuperMonomial out = m;
        (v.family == Family::Theta ? out.theta : out.small_theta) &= ~bit;
        r.add_term(out, (before & 1) ? -c : c);
    }
    return r;
}

/// Right Grassmann derivative: removing the m-th of k factors costs (-1)^(k-m).
inline SuperPolynomial right_deriv_odd(const SuperPolynomial& p, VariableId v) {
    if (!family_is_odd(v.family))
        throw std::invalid_argument("right_deriv_odd: even variable " + variable_name(v));
    const std::uint64_t bit = detail::bit_of(v.index);
    SuperPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        const std::uint64_t mask = (v.family == Family::Theta) ? m.theta : m.small_theta;
        if ((mask & bit) == 0)
            continue;
        int after;
        if (v.family == Family::Theta) {
            after = detail::popcount(m.theta & detail::above(v.index)) +
                    detail::popcount(m.small_theta);
        } else {
            after = detail::popcount(m.small_theta & detail::above(v.index));
        }
        SuperMonomial out = m;
        (v.family == Family::Theta ? out.theta : out.small_theta) &= ~bit;
        r.add_term(out, (after & 1) ? -c : c);
    }
    return r;
}

/// Even partial derivative; passes through odd factors without signs.
inline SuperPolynomial deriv_even(const SuperPolynomial& p, VariableId v) {
    if (family_is_odd(v.family))
        throw std::invalid_argument("deriv_even: odd variable " + variable_name(v));
    SuperPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.even.size(); ++i) {
            if (m.even[i].first != v)
                continue;
            SuperMonomial out = m;
            const int e = out.even[i].second;
            if (e == 1)
                out.even.erase(out.even.begin() + static_cast<std::ptrdiff_t>(i));
            else
                out.even[i].second = e - 1;
            r.add_term(out, c * Scalar(e));
            break;
        }
    }
    return r;
}

inline std::string SuperPolynomial::to_string() const {
    if (terms_.empty())
        return "0/1";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coeff = c.to_string();
        const bool composite = coeff.find(' ') != std::string::npos;
        std::string term;
        if (composite) {
            term = "(" + coeff + ")";
        } else if (!out.empty() && coeff[0] == '-') {
            term = coeff.substr(1);
        } else {
            term = coeff;
        }
        const bool negative_join = !out.empty() && !composite && coeff[0] == '-';
        for (const auto& [v, e] : m.even)
            for (int k = 0; k < e; ++k)
                term += " * " + variable_name(v);
        for (std::uint64_t mask = m.theta; mask != 0; mask &= mask - 1)
            term += " * T" + std::to_string(std::countr_zero(mask) + 1);
        for (std::uint64_t mask = m.small_theta; mask != 0; mask &= mask - 1)
            term += " * th" + std::to_string(std::countr_zero(mask) + 1);
        if (out.empty())
            out = term;
        else
            out += (negative_join ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace oddp
