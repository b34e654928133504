/*
 * grassmann_operator.hpp
 * ----------------------
 * Normal-ordered differential operators on the Grassmann sector: finite
 * sums  c * T_{i1}..T_{ik} d_{j1}..d_{jl}  with every multiplication left
 * of every derivative and both index lists ascending.  The normal form is
 * the canonical representation, so operator equality is map equality;
 * extensional agreement on the 2^N monomial basis is a cross-check the
 * test suite performs, not the definition.
 *
 * Composition moves one derivative at a time across the other factor's
 * multiplication prefix with
 *
 *     d_j T_B = [j in B] (-1)^{#(B below j)} T_{B\j} + (-1)^{|B|} T_B d_j
 *
 * which is the operator form of d_a T_b + T_b d_a = delta_ab.
 */
#pragma once

#include <oddp/superpoly.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddp {

namespace detail {

/// Inversions of an explicit index sequence relative to ascending order;
/// nullopt when an index repeats (the product of odd factors vanishes).
inline std::optional<std::pair<std::uint64_t, int>> mask_of_sequence(
    const std::vector<int>& indices) {
    std::uint64_t mask = 0;
    int inversions = 0;
    for (int idx : indices) {
        const std::uint64_t bit = bit_of(idx);
        if (mask & bit)
            return std::nullopt;
        inversions += popcount(mask & above(idx));
        mask |= bit;
    }
    return std::make_pair(mask, (inversions & 1) ? -1 : 1);
}

/// Swaps needed to merge two ascending masks (first block, then second).
inline int merge_swaps_single(std::uint64_t a, std::uint64_t b) {
    int swaps = 0;
    for (std::uint64_t m = b; m != 0; m &= m - 1)
        swaps += popcount(a & above(std::countr_zero(m) + 1));
    return swaps;
}

}  // namespace detail

class GrassmannOperator {
public:
    /// (multiplication mask, derivative mask) -> coefficient.
    using Key = std::pair<std::uint64_t, std::uint64_t>;
    using TermMap = std::map<Key, Scalar>;

    explicit GrassmannOperator(int dim) : dim_(dim) {
        if (dim < 1 || dim > kMaxOddIndex)
            throw std::invalid_argument("GrassmannOperator: dim must be in 1..32");
    }

    static GrassmannOperator zero(int dim) { return GrassmannOperator(dim); }

    static GrassmannOperator identity(int dim) {
        GrassmannOperator op(dim);
        op.add_term(0, 0, Scalar(1));
        return op;
    }

    /// Multiplication by T_index.
    static GrassmannOperator theta(int dim, int index) {
        GrassmannOperator op(dim);
        op.check_index(index);
        op.add_term(detail::bit_of(index), 0, Scalar(1));
        return op;
    }

    /// Left derivative d/dT_index.
    static GrassmannOperator deriv(int dim, int index) {
        GrassmannOperator op(dim);
        op.check_index(index);
        op.add_term(0, detail::bit_of(index), Scalar(1));
        return op;
    }

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::uint64_t theta_mask, std::uint64_t deriv_mask, const Scalar& coeff) {
        if (coeff.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(Key{theta_mask, deriv_mask}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Term from explicit factor sequences, canonicalized with the
    /// permutation signs; a repeated factor kills the term.
    void add_product_term(const Scalar& coeff, const std::vector<int>& theta_seq,
                          const std::vector<int>& deriv_seq) {
        const auto t = detail::mask_of_sequence(theta_seq);
        if (!t)
            return;
        const auto d = detail::mask_of_sequence(deriv_seq);
        if (!d)
            return;
        Scalar c = coeff;
        if (t->second * d->second < 0)
            c = -c;
        add_term(t->first, d->first, c);
    }

    GrassmannOperator operator-() const {
        GrassmannOperator r(dim_);
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, -c);
        return r;
    }

    GrassmannOperator operator+(const GrassmannOperator& o) const {
        require_same_dim(o);
        GrassmannOperator r = *this;
        for (const auto& [k, c] : o.terms_)
            r.add_term(k.first, k.second, c);
        return r;
    }

    GrassmannOperator operator-(const GrassmannOperator& o) const {
        require_same_dim(o);
        GrassmannOperator r = *this;
        for (const auto& [k, c] : o.terms_)
            r.add_term(k.first, k.second, -c);
        return r;
    }

    GrassmannOperator operator*(const Scalar& s) const {
        GrassmannOperator r(dim_);
        if (s.is_zero())
            return r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, c * s);
        return r;
    }

    GrassmannOperator& operator+=(const GrassmannOperator& o) { return *this = *this + o; }
    GrassmannOperator& operator-=(const GrassmannOperator& o) { return *this = *this - o; }

    bool operator==(const GrassmannOperator& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }
    bool operator!=(const GrassmannOperator& o) const { return !(*this == o); }

    /// Parity of a homogeneous operator; nullopt for a mixed sum.  The zero
    /// operator is even.
    std::optional<int> parity() const {
        if (terms_.empty())
            return 0;
        const auto bit = [](const Key& k) {
            return (detail::popcount(k.first) + detail::popcount(k.second)) & 1;
        };
        const int p = bit(terms_.begin()->first);
        for (const auto& [k, c] : terms_)
            if (bit(k) != p)
                return std::nullopt;
        return p;
    }

    /// A pure multiplication operator viewed as the polynomial it
    /// multiplies by; throws if any term carries derivatives.
    SuperPolynomial as_polynomial() const {
        SuperPolynomial p;
        for (const auto& [k, c] : terms_) {
            if (k.second != 0)
                throw std::logic_error("as_polynomial: operator has derivative terms");
            SuperMonomial m;
            m.theta = k.first;
            p.add_term(m, c);
        }
        return p;
    }

    /// Apply to a polynomial in the T variables: derivatives right-to-left,
    /// then the multiplication prefix.
    SuperPolynomial apply(const SuperPolynomial& p) const {
        SuperPolynomial out;
        for (const auto& [mono, pc] : p.terms()) {
            if (!mono.even.empty() || mono.small_theta != 0)
                throw std::invalid_argument("GrassmannOperator: argument must use only T variables");
            if (mono.theta >> dim_)
                throw std::invalid_argument("GrassmannOperator: argument index exceeds dimension " +
                                            std::to_string(dim_));
            for (const auto& [k, oc] : terms_) {
                std::uint64_t current = mono.theta;
                int sign = 1;
                bool dead = false;
                // Descending scan applies the rightmost derivative first.
                for (std::uint64_t d = k.second; d != 0;) {
                    const int j = 64 - std::countl_zero(d);
                    const std::uint64_t bit = detail::bit_of(j);
                    d &= ~bit;
                    if (!(current & bit)) {
                        dead = true;
                        break;
                    }
                    if (detail::popcount(current & detail::below(j)) & 1)
                        sign = -sign;
                    current &= ~bit;
                }
                if (dead || (k.first & current))
                    continue;
                if (detail::merge_swaps_single(k.first, current) & 1)
                    sign = -sign;
                SuperMonomial m;
                m.theta = k.first | current;
                Scalar c = oc * pc;
                out.add_term(m, sign < 0 ? -c : c);
            }
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += "(" + c.to_string() + ")";
            for (std::uint64_t m = k.first; m != 0; m &= m - 1)
                out += " T" + std::to_string(std::countr_zero(m) + 1);
            for (std::uint64_t m = k.second; m != 0; m &= m - 1)
                out += " dT" + std::to_string(std::countr_zero(m) + 1);
        }
        return out;
    }

private:
    void check_index(int index) const {
        if (index < 1 || index > dim_)
            throw std::invalid_argument("GrassmannOperator: index out of range 1.." +
                                        std::to_string(dim_));
    }

    void require_same_dim(const GrassmannOperator& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("GrassmannOperator: dimension mismatch (" +
                                        std::to_string(dim_) + " vs " + std::to_string(o.dim_) + ")");
    }

    int dim_;
    TermMap terms_;
};

inline GrassmannOperator operator*(const Scalar& s, const GrassmannOperator& op) { return op * s; }

namespace detail {

/// Normal-order d_D T_B into sum coeff * T_B' d_D'.
inline void normalize_across(std::uint64_t deriv_mask, std::uint64_t theta_mask, int sign,
                             std::uint64_t moved_derivs,
                             std::vector<std::tuple<int, std::uint64_t, std::uint64_t>>& out) {
    if (deriv_mask == 0) {
        out.emplace_back(sign, theta_mask, moved_derivs);
        return;
    }
    const int j = 64 - std::countl_zero(deriv_mask);  // rightmost factor in composition order
    const std::uint64_t bit = bit_of(j);
    const std::uint64_t rest = deriv_mask & ~bit;
    if (theta_mask & bit) {
        const int s = (popcount(theta_mask & below(j)) & 1) ? -sign : sign;
        normalize_across(rest, theta_mask & ~bit, s, moved_derivs, out);
    }
    const int s = (popcount(theta_mask) & 1) ? -sign : sign;
    // j exceeds every remaining derivative index, so appending keeps the
    // moved block ascending with no extra sign.
    normalize_across(rest, theta_mask, s, moved_derivs | bit, out);
}

}  // namespace detail

/// Operator product in normal form.
inline GrassmannOperator compose(const GrassmannOperator& a, const GrassmannOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("compose: dimension mismatch (" + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()) + ")");
    GrassmannOperator out(a.dim());
    std::vector<std::tuple<int, std::uint64_t, std::uint64_t>> pieces;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            pieces.clear();
            detail::normalize_across(ka.second, kb.first, 1, 0, pieces);
            const Scalar cab = ca * cb;
            for (const auto& [sign, theta_mid, deriv_mid] : pieces) {
                if (ka.first & theta_mid)
                    continue;  // repeated multiplication factor
                if (deriv_mid & kb.second)
                    continue;  // repeated derivative factor
                int s = sign;
                if (detail::merge_swaps_single(ka.first, theta_mid) & 1)
                    s = -s;
                if (detail::merge_swaps_single(deriv_mid, kb.second) & 1)
                    s = -s;
                out.add_term(ka.first | theta_mid, deriv_mid | kb.second, s < 0 ? -cab : cab);
            }
        }
    }
    return out;
}

/// ab - (-1)^{g(a)g(b)} ba: anticommutator for odd-odd pairs, commutator
/// otherwise.  Operands must be parity-homogeneous.
inline GrassmannOperator graded_bracket(const GrassmannOperator& a, const GrassmannOperator& b) {
    const auto ga = a.parity();
    const auto gb = b.parity();
    if (!ga || !gb)
        throw std::invalid_argument("graded_bracket: mixed-parity operand");
    if ((*ga & *gb) != 0)
        return compose(a, b) + compose(b, a);
    return compose(a, b) - compose(b, a);
}

/// Plain commutator ab - ba.
inline GrassmannOperator commutator(const GrassmannOperator& a, const GrassmannOperator& b) {
    return compose(a, b) - compose(b, a);
}

/// Plain anticommutator ab + ba.
inline GrassmannOperator anticommutator(const GrassmannOperator& a, const GrassmannOperator& b) {
    return compose(a, b) + compose(b, a);
}

}  // namespace oddp
