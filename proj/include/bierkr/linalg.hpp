/**
 * Exact rational linear algebra: rank, determinants, linear solves.
 *
 * Sizes throughout the library are tiny (dimension <= 16), so plain
 * fraction-producing Gaussian elimination is used for rational matrices and
 * Bareiss fraction-free elimination for integer determinants.
 */

#ifndef BIERKR_LINALG_HPP
#define BIERKR_LINALG_HPP

#include <cstddef>
#include <optional>

#include "rational.hpp"

namespace bierkr {

/// Rank of a rational matrix (rows as Vec), by Gaussian elimination.
inline std::size_t rank(Matrix m)
{
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i)
        {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Determinant of a square rational matrix.
inline Rational det(Matrix m)
{
    std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) { std::swap(m[c], m[pivot]); d = -d; }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i)
        {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
inline Integer det_int(IntMatrix m)
{
    std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c + 1 < n; ++c)
    {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) { std::swap(m[c], m[pivot]); sign = -sign; }
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

/**
 * Solve A x = b for a rational matrix with rows `a`.  Returns a particular
 * solution or nullopt when the system is inconsistent.  Free variables are
 * set to zero.
 */
inline std::optional<Vec> solve(Matrix a, Vec b)
{
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c)
    {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        std::swap(b[r], b[pivot]);
        for (std::size_t i = 0; i < rows; ++i)
        {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    Vec x(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

/**
 * Indices of a maximal linearly independent subset of the given row
 * vectors, chosen greedily in input order.
 */
inline std::vector<std::size_t> independent_subset(const Matrix& rows)
{
    std::vector<std::size_t> chosen;
    Matrix basis;
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        Matrix trial = basis;
        trial.push_back(rows[i]);
        if (rank(trial) == trial.size())
        {
            basis.push_back(rows[i]);
            chosen.push_back(i);
        }
    }
    return chosen;
}

}  // namespace bierkr

#endif  // BIERKR_LINALG_HPP
