/**
 * Exact rational linear programming via the primal simplex method.
 *
 * Two-phase dense tableau simplex with Bland's anticycling rule; instances
 * here are tiny (tens of variables), so no sparsity or revised-form tricks.
 * Used for convex-combination feasibility (vertex detection) and as the
 * exact optimal-transport solver.
 */

#ifndef BIERKR_LP_HPP
#define BIERKR_LP_HPP

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace bierkr {

struct LpResult
{
    bool feasible = false;
    bool unbounded = false;
    Rational objective;     // meaningful when feasible and bounded
    Vec solution;           // values of the original variables
};

namespace detail {

// Pivot the tableau (rows x cols, cost row last) on (prow, pcol).
inline void pivot(Matrix& t, std::vector<std::size_t>& basis,
                  std::size_t prow, std::size_t pcol)
{
    std::size_t cols = t[0].size();
    Rational p = t[prow][pcol];
    for (std::size_t j = 0; j < cols; ++j) t[prow][j] /= p;
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        if (i == prow || t[i][pcol] == 0) continue;
        Rational f = t[i][pcol];
        for (std::size_t j = 0; j < cols; ++j)
            t[i][j] -= f * t[prow][j];
    }
    basis[prow] = pcol;
}

// Run simplex iterations until optimal or unbounded.  Returns false on
// unboundedness.  Bland's rule throughout.
inline bool iterate(Matrix& t, std::vector<std::size_t>& basis, std::size_t nvars)
{
    std::size_t m = t.size() - 1;
    for (;;)
    {
        std::size_t enter = nvars;
        for (std::size_t j = 0; j < nvars; ++j)
            if (t[m][j] < 0) { enter = j; break; }
        if (enter == nvars) return true;
        std::size_t leave = m;
        Rational best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i)
        {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i].back() / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave]))
            {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) return false;
        pivot(t, basis, leave, enter);
    }
}

}  // namespace detail

/**
 * Solve min c^T x subject to A x = b, x >= 0, exactly.
 *
 * @param a Constraint rows (may be rank-deficient; redundant consistent rows
 *          are tolerated).
 * @param b Right-hand side.
 * @param c Cost vector.
 */
inline LpResult solve_lp(const Matrix& a, const Vec& b, const Vec& c)
{
    std::size_t m = a.size();
    std::size_t n = m == 0 ? c.size() : a[0].size();
    // Tableau columns: n original vars, m artificials, rhs.
    Matrix t(m + 1, Vec(n + m + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        Rational s = (b[i] < 0) ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
        t[i][n + i] = 1;
        t[i].back() = s * b[i];
        basis[i] = n + i;
    }
    // Phase 1: minimize the sum of artificials.
    for (std::size_t j = 0; j <= n + m; ++j)
    {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += t[i][j];
        t[m][j] = (j >= n && j < n + m) ? Rational(0) : Rational(-s);
    }
    detail::iterate(t, basis, n + m);
    LpResult res;
    if (t[m].back() != 0)   // phase-1 optimum is -sum(artificials)
        return res;
    res.feasible = true;
    // Drive remaining artificials out of the basis; rows that cannot be
    // pivoted are redundant and are neutralized instead of removed.
    for (std::size_t i = 0; i < m; ++i)
    {
        if (basis[i] < n) continue;
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j)
            if (t[i][j] != 0) { col = j; break; }
        if (col < n) detail::pivot(t, basis, i, col);
    }
    // Phase 2 cost row.
    for (std::size_t j = 0; j <= n + m; ++j) t[m][j] = 0;
    for (std::size_t j = 0; j < n; ++j) t[m][j] = c[j];
    for (std::size_t i = 0; i < m; ++i)
    {
        if (basis[i] >= n || t[m][basis[i]] == 0) continue;
        Rational f = t[m][basis[i]];
        for (std::size_t j = 0; j <= n + m; ++j)
            t[m][j] -= f * t[i][j];
    }
    // Forbid artificials from re-entering by leaving their reduced costs at
    // zero but restricting the entering search to the first n columns.
    if (!detail::iterate(t, basis, n))
    {
        res.unbounded = true;
        return res;
    }
    res.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.solution[basis[i]] = t[i].back();
    res.objective = -t[m].back();
    return res;
}

/// Exact feasibility of A x = b, x >= 0.
inline bool feasible(const Matrix& a, const Vec& b)
{
    std::size_t n = a.empty() ? 0 : a[0].size();
    return solve_lp(a, b, Vec(n, Rational(0))).feasible;
}

}  // namespace bierkr

#endif  // BIERKR_LP_HPP
