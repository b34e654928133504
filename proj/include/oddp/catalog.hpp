/*
 * catalog.hpp
 * -----------
 * Built-in structure-constant tables.
 *
 * so3, sl2, heisenberg, e2 and zero(N) are written down directly.  sl3 and
 * so5 are generated from Chevalley-basis matrices of the defining
 * representations: the table entry c_{ab}^g is read off by exactly
 * expanding the commutator [T_a, T_b] back in the basis, and the expansion
 * is verified by recombination, so a typo in the matrices cannot survive.
 * All generated constants are integers.
 */
#pragma once

#include <oddp/lie_algebra.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddp {

namespace detail {

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix rm_zero(int n) {
    return RatMatrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
}

inline RatMatrix rm_unit(int n, int r, int c, long long v = 1) {
    RatMatrix m = rm_zero(n);
    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Rational(v);
    return m;
}

inline RatMatrix rm_add(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            out[i][j] += b[i][j];
    return out;
}

inline RatMatrix rm_scale(const RatMatrix& a, long long s) {
    RatMatrix out = a;
    for (auto& row : out)
        for (auto& x : row)
            x *= Rational(s);
    return out;
}

inline RatMatrix rm_commutator(const RatMatrix& a, const RatMatrix& b) {
    const std::size_t n = a.size();
    RatMatrix out = rm_zero(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero() && b[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] += a[i][k] * b[k][j];
                out[i][j] -= b[i][k] * a[k][j];
            }
        }
    return out;
}

/// Solve sum_k x_k basis[k] = target exactly; throws when target is outside
/// the span.  The result is re-verified by recombination.
inline std::vector<Rational> rm_expand(const std::vector<RatMatrix>& basis,
                                       const RatMatrix& target) {
    const std::size_t n = basis.front().size();
    const std::size_t rows = n * n;
    const std::size_t cols = basis.size();
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
    for (std::size_t k = 0; k < cols; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                aug[i * n + j][k] = basis[k][i][j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            aug[i * n + j][cols] = target[i][j];

    std::vector<std::size_t> pivot_row_of_col(cols, rows);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t pr = rows;
        for (std::size_t r = next_row; r < rows; ++r)
            if (!aug[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr == rows)
            continue;
        std::swap(aug[pr], aug[next_row]);
        const Rational inv = aug[next_row][col].inverse();
        for (auto& x : aug[next_row])
            x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || aug[r][col].is_zero())
                continue;
            const Rational f = aug[r][col];
            for (std::size_t cc = col; cc <= cols; ++cc)
                aug[r][cc] -= f * aug[next_row][cc];
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }
    std::vector<Rational> x(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_row_of_col[col] == rows)
            throw std::logic_error("catalog: basis matrices are linearly dependent");
        x[col] = aug[pivot_row_of_col[col]][cols];
    }
    // Recombine as a hard consistency check.
    RatMatrix rec = rm_zero(static_cast<int>(n));
    for (std::size_t k = 0; k < cols; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rec[i][j] += x[k] * basis[k][i][j];
    if (rec != target)
        throw std::logic_error("catalog: commutator left the span of the basis");
    return x;
}

inline StructureConstants from_matrix_basis(const std::vector<RatMatrix>& basis,
                                            std::string name) {
    const int dim = static_cast<int>(basis.size());
    StructureConstants sc(dim, std::move(name));
    for (int a = 1; a <= dim; ++a)
        for (int b = a + 1; b <= dim; ++b) {
            const RatMatrix comm = rm_commutator(basis[static_cast<std::size_t>(a - 1)],
                                                 basis[static_cast<std::size_t>(b - 1)]);
            const std::vector<Rational> coeff = rm_expand(basis, comm);
            for (int g = 1; g <= dim; ++g) {
                const Rational& v = coeff[static_cast<std::size_t>(g - 1)];
                if (v.is_zero())
                    continue;
                sc.set(a, b, g, Scalar(v));
                sc.set(b, a, g, Scalar(-v));
            }
        }
    return sc;
}

inline StructureConstants make_so3() {
    StructureConstants sc(3, "so3");
    // c_{ab}^g = epsilon_{abg}
    sc.set(1, 2, 3, Scalar(1));
    sc.set(2, 1, 3, Scalar(-1));
    sc.set(2, 3, 1, Scalar(1));
    sc.set(3, 2, 1, Scalar(-1));
    sc.set(3, 1, 2, Scalar(1));
    sc.set(1, 3, 2, Scalar(-1));
    return sc;
}

inline StructureConstants make_sl2() {
    // Basis order (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    StructureConstants sc(3, "sl2");
    sc.set(1, 2, 3, Scalar(1));
    sc.set(2, 1, 3, Scalar(-1));
    sc.set(3, 1, 1, Scalar(2));
    sc.set(1, 3, 1, Scalar(-2));
    sc.set(3, 2, 2, Scalar(-2));
    sc.set(2, 3, 2, Scalar(2));
    return sc;
}

inline StructureConstants make_sl3() {
    // Chevalley basis of 3x3 traceless matrices:
    // (e1, e2, e3, f1, f2, f3, h1, h2) with e3 = [e1, e2].
    std::vector<RatMatrix> basis;
    basis.push_back(rm_unit(3, 0, 1));                                    // e1
    basis.push_back(rm_unit(3, 1, 2));                                    // e2
    basis.push_back(rm_unit(3, 0, 2));                                    // e3
    basis.push_back(rm_unit(3, 1, 0));                                    // f1
    basis.push_back(rm_unit(3, 2, 1));                                    // f2
    basis.push_back(rm_unit(3, 2, 0));                                    // f3
    basis.push_back(rm_add(rm_unit(3, 0, 0), rm_unit(3, 1, 1, -1)));      // h1
    basis.push_back(rm_add(rm_unit(3, 1, 1), rm_unit(3, 2, 2, -1)));      // h2
    return from_matrix_basis(basis, "sl3");
}

inline StructureConstants make_so5() {
    // Chevalley basis of so(5) in the split defining representation with
    // coordinate order (v0, v1, v2, v-1, v-2); row/column indices 0..4.
    // Simple roots: a1 = eps1 - eps2 (long), a2 = eps2 (short); positive
    // roots a1, a2, a1+a2 = eps1, a1+2a2 = eps1+eps2.
    auto unit = [](int r, int c, long long v = 1) { return rm_unit(5, r, c, v); };
    std::vector<RatMatrix> basis;
    basis.push_back(rm_add(unit(1, 2), unit(4, 3, -1)));      // e_{a1}
    basis.push_back(rm_add(unit(2, 0, 2), unit(0, 4, -1)));   // e_{a2}
    basis.push_back(rm_add(unit(1, 0, 2), unit(0, 3, -1)));   // e_{a1+a2}
    basis.push_back(rm_add(unit(1, 4), unit(2, 3, -1)));      // e_{a1+2a2}
    basis.push_back(rm_add(unit(2, 1), unit(3, 4, -1)));      // f_{a1}
    basis.push_back(rm_add(unit(0, 2), unit(4, 0, -2)));      // f_{a2}
    basis.push_back(rm_add(unit(0, 1), unit(3, 0, -2)));      // f_{a1+a2}
    basis.push_back(rm_add(unit(4, 1), unit(3, 2, -1)));      // f_{a1+2a2}
    basis.push_back(rm_add(rm_add(unit(1, 1), unit(2, 2, -1)),
                           rm_add(unit(3, 3, -1), unit(4, 4))));  // h_{a1}
    basis.push_back(rm_add(unit(2, 2, 2), unit(4, 4, -2)));       // h_{a2}
    return from_matrix_basis(basis, "so5");
}

inline StructureConstants make_heisenberg() {
    // [x, y] = z; the Killing form vanishes identically.
    StructureConstants sc(3, "heisenberg");
    sc.set(1, 2, 3, Scalar(1));
    sc.set(2, 1, 3, Scalar(-1));
    return sc;
}

inline StructureConstants make_e2() {
    // Euclidean algebra of the plane, basis (J, P1, P2):
    // [J, P1] = P2, [J, P2] = -P1; degenerate Killing form.
    StructureConstants sc(3, "e2");
    sc.set(1, 2, 3, Scalar(1));
    sc.set(2, 1, 3, Scalar(-1));
    sc.set(1, 3, 2, Scalar(-1));
    sc.set(3, 1, 2, Scalar(1));
    return sc;
}

}  // namespace detail

/// Names: so3, sl2, sl3, so5, heisenberg, e2, zero(N).
inline StructureConstants catalog(const std::string& name) {
    if (name == "so3") return detail::make_so3();
    if (name == "sl2") return detail::make_sl2();
    if (name == "sl3") return detail::make_sl3();
    if (name == "so5") return detail::make_so5();
    if (name == "heisenberg") return detail::make_heisenberg();
    if (name == "e2") return detail::make_e2();
    if (name.size() > 6 && name.rfind("zero(", 0) == 0 && name.back() == ')') {
        const std::string num = name.substr(5, name.size() - 6);
        for (char ch : num)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("catalog: bad dimension in '" + name + "'");
        const int n = std::atoi(num.c_str());
        if (n < 1 || n > 32)
            throw std::invalid_argument("catalog: zero(N) needs N in 1..32");
        return StructureConstants(n, name);
    }
    throw std::invalid_argument(
        "catalog: unknown algebra '" + name +
        "' (known: so3, sl2, sl3, so5, heisenberg, e2, zero(N))");
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"so3", "sl2", "sl3",
                                                   "so5", "heisenberg", "e2"};
    return names;
}

}  // namespace oddp
