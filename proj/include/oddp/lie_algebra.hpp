/*
 * lie_algebra.hpp
 * ---------------
 * Structure-constant tables c_{ab}^g, their validation (antisymmetry in the
 * lower pair and the Jacobi condition), and the Cartan-Killing machinery:
 * the metric g_ab by double contraction, its exact inverse when the rank is
 * full, the lowered tensor c_abg, and the dimension invariant
 * -c^{abg} c_{abg} = N.
 *
 * Degeneracy is decided by exact rank during Gauss-Jordan elimination over
 * the scalar field; there is no threshold anywhere.
 */
#pragma once

#include <oddp/scalar.hpp>

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddp {

/// Dense N x N matrix of exact scalars.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    explicit ScalarMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * n_ + c]; }

    static ScalarMatrix identity(int n) {
        ScalarMatrix m(n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = Scalar(1);
        return m;
    }

    bool operator==(const ScalarMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

    ScalarMatrix operator*(const ScalarMatrix& o) const {
        ScalarMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                if (at(i, k).is_zero())
                    continue;
                for (int j = 0; j < n_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    /// Exact Gauss-Jordan inverse; empty when the matrix is singular.
    std::optional<ScalarMatrix> inverse() const {
        ScalarMatrix a = *this;
        ScalarMatrix inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r) {
                if (!a.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0)
                return std::nullopt;  // rank deficient
            if (pivot != col) {
                for (int c = 0; c < n_; ++c) {
                    std::swap(a.at(pivot, c), a.at(col, c));
                    std::swap(inv.at(pivot, c), inv.at(col, c));
                }
            }
            const Scalar scale = a.at(col, col).inverse();
            for (int c = 0; c < n_; ++c) {
                a.at(col, c) *= scale;
                inv.at(col, c) *= scale;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || a.at(r, col).is_zero())
                    continue;
                const Scalar f = a.at(r, col);
                for (int c = 0; c < n_; ++c) {
                    a.at(r, c) -= f * a.at(col, c);
                    inv.at(r, c) -= f * inv.at(col, c);
                }
            }
        }
        return inv;
    }

private:
    int n_ = 0;
    std::vector<Scalar> data_;
};

struct TableEntry {
    int a, b, c;  // 1-based indices of c_{ab}^c
    Scalar value;
};

/// Sparse c_{ab}^g table for an N-dimensional algebra.  Only nonzero values
/// are stored; `at` returns zero for absent triples.
class StructureConstants {
public:
    explicit StructureConstants(int dim, std::string name = "")
        : dim_(dim), name_(std::move(name)) {
        if (dim < 1 || dim > 32)
            throw std::invalid_argument("StructureConstants: dim must be in 1..32");
    }

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    void set(int a, int b, int c, const Scalar& v) {
        check_index(a);
        check_index(b);
        check_index(c);
        const std::array<int, 3> key{a, b, c};
        if (v.is_zero())
            table_.erase(key);
        else
            table_[key] = v;
    }

    Scalar at(int a, int b, int c) const {
        auto it = table_.find({a, b, c});
        return it == table_.end() ? Scalar() : it->second;
    }

    const std::map<std::array<int, 3>, Scalar>& entries() const { return table_; }

    /// Fill the a > b half from antisymmetry.  Entries with a == b stay as
    /// given and are caught by validate().
    void complete_by_antisymmetry() {
        auto half = table_;
        for (const auto& [key, v] : half) {
            if (key[0] < key[1])
                set(key[1], key[0], key[2], -v);
        }
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > dim_)
            throw std::invalid_argument("StructureConstants: index out of range 1.." +
                                        std::to_string(dim_));
    }

    int dim_;
    std::string name_;
    std::map<std::array<int, 3>, Scalar> table_;
};

struct Violation {
    std::string law;           // "antisymmetry" or "jacobi"
    std::vector<int> indices;  // the offending tuple
    Scalar residual;
};

struct ValidationReport {
    std::size_t total_violations = 0;
    std::vector<Violation> listed;  // capped
    static constexpr std::size_t kMaxListed = 100;

    bool ok() const { return total_violations == 0; }

    void record(Violation v) {
        ++total_violations;
        if (listed.size() < kMaxListed)
            listed.push_back(std::move(v));
    }
};

namespace detail {

/// Dense c_{ab}^g lookup (index 0-based) for the contraction loops.
inline std::vector<Scalar> dense_table(const StructureConstants& sc) {
    const int n = sc.dim();
    std::vector<Scalar> t(static_cast<std::size_t>(n) * n * n);
    for (const auto& [key, v] : sc.entries())
        t[static_cast<std::size_t>(key[0] - 1) * n * n + (key[1] - 1) * n + (key[2] - 1)] = v;
    return t;
}

}  // namespace detail

/// Check antisymmetry of the lower pair and the Jacobi condition; every
/// violated tuple is data in the report, not an error.
inline ValidationReport validate(const StructureConstants& sc) {
    const int n = sc.dim();
    const auto c = detail::dense_table(sc);
    auto idx = [n](int a, int b, int g) {
        return static_cast<std::size_t>(a) * n * n + static_cast<std::size_t>(b) * n + g;
    };
    ValidationReport report;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                const Scalar r = c[idx(a, b, g)] + c[idx(b, a, g)];
                if (!r.is_zero())
                    report.record({"antisymmetry", {a + 1, b + 1, g + 1}, r});
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g)
                for (int d = 0; d < n; ++d) {
                    Scalar r;
                    for (int l = 0; l < n; ++l) {
                        r += c[idx(a, l, d)] * c[idx(b, g, l)];
                        r += c[idx(b, l, d)] * c[idx(g, a, l)];
                        r += c[idx(g, l, d)] * c[idx(a, b, l)];
                    }
                    if (!r.is_zero())
                        report.record({"jacobi", {a + 1, b + 1, g + 1, d + 1}, r});
                }
    return report;
}

/// Killing metric, optional inverse, and the lowered tensor c_abg.
class KillingMetric {
public:
    KillingMetric(ScalarMatrix g, std::optional<ScalarMatrix> g_inv,
                  std::map<std::array<int, 3>, Scalar> c_low)
        : g_(std::move(g)), g_inv_(std::move(g_inv)), c_low_(std::move(c_low)) {}

    int dim() const { return g_.size(); }
    const ScalarMatrix& g() const { return g_; }
    bool invertible() const { return g_inv_.has_value(); }

    const ScalarMatrix& g_inv() const {
        if (!g_inv_)
            throw std::domain_error("KillingMetric: metric is degenerate, no inverse");
        return *g_inv_;
    }

    Scalar lowered(int a, int b, int c) const {
        auto it = c_low_.find({a, b, c});
        return it == c_low_.end() ? Scalar() : it->second;
    }

    const std::map<std::array<int, 3>, Scalar>& lowered_entries() const { return c_low_; }

private:
    ScalarMatrix g_;
    std::optional<ScalarMatrix> g_inv_;
    std::map<std::array<int, 3>, Scalar> c_low_;
};

/// g_ab = c_{ag}^l c_{bl}^g by direct double contraction, exact inverse when
/// the rank is full, and c_abg = c_{ab}^d g_dg.
inline KillingMetric killing(const StructureConstants& sc) {
    const int n = sc.dim();
    const auto c = detail::dense_table(sc);
    auto idx = [n](int a, int b, int g) {
        return static_cast<std::size_t>(a) * n * n + static_cast<std::size_t>(b) * n + g;
    };
    ScalarMatrix g(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar s;
            for (int gi = 0; gi < n; ++gi)
                for (int l = 0; l < n; ++l)
                    s += c[idx(a, gi, l)] * c[idx(b, l, gi)];
            g.at(a, b) = s;
        }
    std::map<std::array<int, 3>, Scalar> c_low;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int gi = 0; gi < n; ++gi) {
                Scalar s;
                for (int d = 0; d < n; ++d)
                    s += c[idx(a, b, d)] * g.at(d, gi);
                if (!s.is_zero())
                    c_low[{a + 1, b + 1, gi + 1}] = s;
            }
    auto g_inv = g.inverse();
    return KillingMetric(std::move(g), std::move(g_inv), std::move(c_low));
}

/// c_abg = -c_agb for all triples; holds in the degenerate case too.
inline ValidationReport check_total_antisymmetry(const KillingMetric& km) {
    const int n = km.dim();
    ValidationReport report;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c) {
                const Scalar r = km.lowered(a, b, c) + km.lowered(a, c, b);
                if (!r.is_zero())
                    report.record({"total-antisymmetry", {a, b, c}, r});
            }
    return report;
}

/// -c^{abg} c_{abg} with all three indices raised through the inverse
/// metric; equals the dimension N for a semi-simple algebra.
inline Scalar dimension_invariant(const KillingMetric& km) {
    const int n = km.dim();
    const ScalarMatrix& gi = km.g_inv();  // throws when degenerate
    // Raise one index at a time to keep the contraction count at O(N^4).
    auto raise_first = [&](const std::vector<Scalar>& t) {
        std::vector<Scalar> out(t.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    Scalar s;
                    for (int x = 0; x < n; ++x) {
                        const Scalar& v = t[static_cast<std::size_t>(x) * n * n + b * n + c];
                        if (!v.is_zero())
                            s += gi.at(a, x) * v;
                    }
                    out[static_cast<std::size_t>(a) * n * n + b * n + c] = s;
                }
        return out;
    };
    auto rotate = [&](const std::vector<Scalar>& t) {
        // (a,b,c) -> (b,c,a) so raise_first can hit each slot in turn.
        std::vector<Scalar> out(t.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    out[static_cast<std::size_t>(b) * n * n + c * n + a] =
                        t[static_cast<std::size_t>(a) * n * n + b * n + c];
        return out;
    };
    std::vector<Scalar> low(static_cast<std::size_t>(n) * n * n);
    for (const auto& [key, v] : km.lowered_entries())
        low[static_cast<std::size_t>(key[0] - 1) * n * n + (key[1] - 1) * n + (key[2] - 1)] = v;
    // Raise a, then b, then c by cycling the slots; three rotations restore
    // the original index order.
    std::vector<Scalar> raised = raise_first(low);
    raised = raise_first(rotate(raised));
    raised = raise_first(rotate(raised));
    raised = rotate(raised);
    Scalar total;
    for (std::size_t i = 0; i < raised.size(); ++i)
        total += raised[i] * low[i];
    return -total;
}

}  // namespace oddp
