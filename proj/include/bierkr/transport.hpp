/**
 * Exact optimal-transport cost on a finite metric space, i.e. the
 * Kantorovich-Rubinstein norm of a zero-sum weight distribution.
 */

#ifndef BIERKR_TRANSPORT_HPP
#define BIERKR_TRANSPORT_HPP

#include <cstddef>
#include <stdexcept>

#include "lp.hpp"
#include "rational.hpp"

namespace bierkr {

struct UnbalancedSupply : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/**
 * Minimum cost of moving the positive part of `supply` onto its negative
 * part, with per-unit cost `cost[i][j]`.  Equals ||supply||_KR when the cost
 * matrix is a metric.  Solved as an exact min-cost-flow linear program.
 */
inline Rational min_cost_transport(const Vec& supply, const Matrix& cost)
{
    std::size_t n = supply.size();
    if (cost.size() != n)
        throw std::invalid_argument("min_cost_transport: cost matrix size mismatch");
    Rational total = 0;
    for (const auto& s : supply) total += s;
    if (total != 0)
        throw UnbalancedSupply("min_cost_transport: supply does not sum to zero");
    if (n <= 1) return 0;

    // Variables f_{ij}, i != j, column-major by (i, j); node balance rows.
    std::size_t nv = n * (n - 1);
    Matrix a(n, Vec(nv, Rational(0)));
    Vec c(nv);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            if (i == j) continue;
            a[i][col] += 1;
            a[j][col] -= 1;
            c[col] = cost[i][j];
            ++col;
        }
    LpResult res = solve_lp(a, supply, c);
    if (!res.feasible)
        throw std::logic_error("min_cost_transport: balanced instance reported infeasible");
    if (res.unbounded)
        throw std::logic_error("min_cost_transport: unbounded (negative cost cycle)");
    return res.objective;
}

}  // namespace bierkr

#endif  // BIERKR_TRANSPORT_HPP
