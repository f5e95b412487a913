#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "toricfan/errors.hpp"

namespace toricfan {

/// All lattice arithmetic is exact: 64-bit values, 128-bit intermediates,
/// and any overflow aborts the computation instead of wrapping.
using Int = std::int64_t;
using Wide = __int128;

using Vec = std::vector<Int>;
using IntMatrix = std::vector<Vec>;

namespace detail {
constexpr Wide kWideLimit = (Wide{1} << 96);  // generous guard for intermediates

inline Wide checked_mul(Wide a, Wide b) {
    if (a == 0 || b == 0) return 0;
    Wide hi = a < 0 ? -a : a, lo = b < 0 ? -b : b;
    if (hi > kWideLimit / lo) throw OverflowError("integer overflow in multiplication");
    return a * b;
}

inline Int narrow(Wide x, const char* what) {
    if (x > Wide{INT64_MAX} || x < Wide{INT64_MIN}) throw OverflowError(what);
    return static_cast<Int>(x);
}
}  // namespace detail

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int dot(const Vec& a, const Vec& b) {
    Wide acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += detail::checked_mul(a[i], b[i]);
    return detail::narrow(acc, "integer overflow in dot product");
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
    return r;
}

inline Vec scale(Int c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
    return r;
}

inline Vec negate(const Vec& a) { return scale(-1, a); }

inline bool is_zero(const Vec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline Int vec_gcd(const Vec& a) {
    Int g = 0;
    for (Int x : a) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

/// Divide by the gcd of the entries; the zero vector stays zero.
inline Vec primitive(const Vec& a) {
    Int g = vec_gcd(a);
    if (g <= 1) return a;
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

/// Exact determinant via fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    Wide prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (detail::checked_mul(a[i][j], a[k][k]) -
                           detail::checked_mul(a[i][k], a[k][j])) /
                          prev;
        prev = a[k][k];
    }
    return detail::narrow(sign * a[n - 1][n - 1], "integer overflow in determinant");
}

/// Determinant of the matrix whose columns are the given vectors.
inline Int det_columns(const std::vector<Vec>& cols) {
    size_t n = cols.size();
    IntMatrix m(n, Vec(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
    return det(m);
}

/// Solve A x = b by Cramer's rule for square A with det(A) = ±1,
/// where A is given column-wise.  Throws if A is not unimodular.
inline Vec solve_unimodular_columns(const std::vector<Vec>& cols, const Vec& b) {
    size_t n = cols.size();
    Int d = det_columns(cols);
    if (d != 1 && d != -1)
        throw NotSmooth("cone generators have determinant " + std::to_string(d));
    Vec x(n);
    std::vector<Vec> work = cols;
    for (size_t j = 0; j < n; ++j) {
        work[j] = b;
        x[j] = checked_mul(det_columns(work), d);  // det/d with d = ±1
        work[j] = cols[j];
    }
    return x;
}

/// Rank of a set of vectors (rows), by fraction-free elimination.
inline int rank_of(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    std::vector<std::vector<Wide>> a;
    a.reserve(rows.size());
    for (const Vec& r : rows) a.emplace_back(r.begin(), r.end());
    int rank = 0;
    size_t col = 0;
    for (size_t row = 0; row < a.size() && col < n; ++col) {
        size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        for (size_t i = row + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            Wide f1 = a[row][col], f2 = a[i][col];
            for (size_t j = col; j < n; ++j)
                a[i][j] = detail::checked_mul(a[i][j], f1) - detail::checked_mul(a[row][j], f2);
        }
        ++row;
        ++rank;
    }
    return rank;
}

/// Generalized cross product: an integer normal to n-1 vectors in Z^n,
/// zero when they are linearly dependent.
inline Vec cross_normal(const std::vector<Vec>& vs) {
    size_t n = vs.empty() ? 1 : vs[0].size();
    Vec normal(n);
    std::vector<Vec> minor(vs.size(), Vec(n - 1));
    for (size_t skip = 0; skip < n; ++skip) {
        for (size_t i = 0; i < vs.size(); ++i) {
            size_t c = 0;
            for (size_t j = 0; j < n; ++j)
                if (j != skip) minor[i][c++] = vs[i][j];
        }
        Int d = det(minor);
        normal[skip] = (skip % 2 == 0) ? d : checked_mul(-1, d);
    }
    return normal;
}

/// Matrix-vector product M x for a row-major square matrix.
inline Vec mat_vec(const IntMatrix& m, const Vec& x) {
    Vec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size();
    IntMatrix r(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
        }
    return r;
}

inline IntMatrix identity_matrix(size_t n) {
    IntMatrix m(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Inverse of a matrix with det = ±1, via the adjugate.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    size_t n = m.size();
    Int d = det(m);
    if (d != 1 && d != -1)
        throw NotSmooth("matrix with determinant " + std::to_string(d) + " is not unimodular");
    IntMatrix inv(n, Vec(n));
    if (n == 0) return inv;
    if (n == 1) {
        inv[0][0] = m[0][0];  // = ±1
        return inv;
    }
    IntMatrix minor(n - 1, Vec(n - 1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t r = 0;
            for (size_t ii = 0; ii < n; ++ii) {
                if (ii == i) continue;
                size_t c = 0;
                for (size_t jj = 0; jj < n; ++jj)
                    if (jj != j) minor[r][c++] = m[ii][jj];
                ++r;
            }
            Int cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[j][i] = checked_mul(cof, d);  // adjugate / det with det = ±1
        }
    return inv;
}

inline std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace toricfan
