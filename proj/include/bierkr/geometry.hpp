/**
 * Exact convex-hull facet enumeration, extreme points, and simplex volumes
 * for labeled rational point configurations.
 *
 * The hull algorithm is a brute-force search over d-subsets of points with an
 * exact side test, valid in any affine hull (configurations may live in a
 * proper subspace, e.g. the zero-sum hyperplane of R^n).  Internally the
 * search runs on denominator-cleared integer coordinates with fraction-free
 * determinants; reported hyperplanes are in ambient rational coordinates.
 */

#ifndef BIERKR_GEOMETRY_HPP
#define BIERKR_GEOMETRY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace bierkr {

struct DegenerateInput : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Labeled list of rational points of equal dimension.
struct PointConfiguration
{
    std::vector<std::string> labels;
    Matrix points;

    std::size_t size() const { return points.size(); }
    std::size_t ambient_dim() const { return points.empty() ? 0 : points[0].size(); }

    void add(std::string label, Vec point)
    {
        if (!points.empty() && point.size() != points[0].size())
            throw DimensionMismatch("PointConfiguration: mixed dimensions");
        for (const auto& l : labels)
            if (l == label)
                throw std::invalid_argument("PointConfiguration: duplicate label '" + label + "'");
        labels.push_back(std::move(label));
        points.push_back(std::move(point));
    }
};

/// The set {x : <normal, x> = offset}; facets orient it so the hull satisfies <= .
struct Hyperplane
{
    Vec normal;
    Rational offset;
};

struct FacetDescription
{
    std::vector<std::string> vertex_labels;   // sorted; all points on the hyperplane
    std::vector<std::size_t> vertex_indices;  // sorted, same facet
    Hyperplane hyperplane;                    // <normal, x> <= offset for all points
};

/// Dimension of the affine hull of the configuration.
inline std::size_t affine_dimension(const PointConfiguration& pts)
{
    if (pts.size() == 0)
        throw std::invalid_argument("affine_dimension: empty configuration");
    Matrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts.points[i] - pts.points[0]);
    return rank(diffs);
}

namespace detail {

// Scale normal + offset to coprime integers with the orientation preserved.
inline void canonicalize(Hyperplane& h)
{
    Vec all = h.normal;
    all.push_back(h.offset);
    Integer mult = denominator_lcm(all);
    Integer g = 0;
    IntVec scaled = scale_to_integer(all, mult);
    for (const auto& z : scaled) g = gcd(g, z);
    if (g == 0) g = 1;
    Rational f(mult, g);
    for (auto& x : h.normal) x *= f;
    h.offset *= f;
}

}  // namespace detail

/**
 * All facets of Conv(pts), by exhaustive search over d-subsets spanning a
 * hyperplane of the affine hull, with exact side tests.  Output is
 * deduplicated and ordered lexicographically by vertex-label set.  Each
 * facet lists every configuration point lying on its hyperplane.
 */
inline std::vector<FacetDescription> facet_enumeration(const PointConfiguration& pts)
{
    std::size_t m = pts.size();
    if (m == 0)
        throw std::invalid_argument("facet_enumeration: empty configuration");
    std::size_t amb = pts.ambient_dim();
    Matrix diffs;
    for (std::size_t i = 1; i < m; ++i)
        diffs.push_back(pts.points[i] - pts.points[0]);
    std::size_t r = rank(diffs);
    if (r == 0)
        throw DegenerateInput("facet_enumeration: all points coincide");

    // Pick r coordinates on which the affine hull projects bijectively.
    Matrix coord_rows(amb, Vec(diffs.size()));
    for (std::size_t c = 0; c < amb; ++c)
        for (std::size_t i = 0; i < diffs.size(); ++i)
            coord_rows[c][i] = diffs[i][c];
    std::vector<std::size_t> coords = independent_subset(coord_rows);
    // independent_subset returns exactly r coordinates here

    // Local integer coordinates q_i = M * (p_i - p_0)|coords.
    Matrix local(m, Vec(r));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < r; ++k)
            local[i][k] = pts.points[i][coords[k]] - pts.points[0][coords[k]];
    Vec flat;
    for (const auto& row : local)
        for (const auto& x : row) flat.push_back(x);
    Integer mult = denominator_lcm(flat);
    IntMatrix q(m);
    for (std::size_t i = 0; i < m; ++i)
        q[i] = scale_to_integer(local[i], mult);

    std::map<std::vector<std::size_t>, FacetDescription> found;

    std::vector<std::size_t> comb(r);
    for (std::size_t i = 0; i < r; ++i) comb[i] = i;
    IntVec vals(m);
    for (;;)
    {
        // Normal of the hyperplane through the chosen subset, via cofactor
        // minors of the (r-1) x r difference matrix.
        IntMatrix d(r - 1, IntVec(r));
        for (std::size_t i = 1; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                d[i - 1][k] = q[comb[i]][k] - q[comb[0]][k];
        IntVec w(r, Integer(0));
        bool zero = true;
        for (std::size_t k = 0; k < r; ++k)
        {
            IntMatrix minor(r - 1, IntVec(r - 1));
            for (std::size_t i = 0; i + 1 < r; ++i)
            {
                std::size_t cc = 0;
                for (std::size_t j = 0; j < r; ++j)
                {
                    if (j == k) continue;
                    minor[i][cc++] = d[i][j];
                }
            }
            Integer dk = det_int(minor);
            if (k % 2 == 1) dk = -dk;
            w[k] = dk;
            if (dk != 0) zero = false;
        }
        if (!zero)
        {
            Integer c = 0;
            for (std::size_t k = 0; k < r; ++k) c += w[k] * q[comb[0]][k];
            bool pos = false, neg = false;
            for (std::size_t i = 0; i < m; ++i)
            {
                Integer v = -c;
                for (std::size_t k = 0; k < r; ++k) v += w[k] * q[i][k];
                vals[i] = v;
                if (v > 0) pos = true;
                else if (v < 0) neg = true;
                if (pos && neg) break;
            }
            if (pos != neg)   // supporting hyperplane
            {
                std::vector<std::size_t> on;
                for (std::size_t i = 0; i < m; ++i)
                {
                    Integer v = -c;
                    for (std::size_t k = 0; k < r; ++k) v += w[k] * q[i][k];
                    if (v == 0) on.push_back(i);
                }
                if (!found.count(on))
                {
                    if (pos)
                    {
                        for (auto& x : w) x = -x;
                        c = -c;
                    }
                    FacetDescription f;
                    f.vertex_indices = on;
                    for (std::size_t i : on) f.vertex_labels.push_back(pts.labels[i]);
                    std::sort(f.vertex_labels.begin(), f.vertex_labels.end());
                    // Lift: <w, M((x - p_0)|coords)> <= c  in ambient terms.
                    f.hyperplane.normal.assign(amb, Rational(0));
                    Rational off(c, mult);
                    for (std::size_t k = 0; k < r; ++k)
                    {
                        f.hyperplane.normal[coords[k]] = Rational(w[k]);
                        off += Rational(w[k]) * pts.points[0][coords[k]];
                    }
                    f.hyperplane.offset = off;
                    detail::canonicalize(f.hyperplane);
                    found.emplace(std::move(on), std::move(f));
                }
            }
        }
        // next combination
        std::size_t i = r;
        while (i > 0 && comb[i - 1] == m - r + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }

    std::vector<FacetDescription> out;
    out.reserve(found.size());
    for (auto& [key, f] : found) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(),
              [](const FacetDescription& a, const FacetDescription& b)
              { return a.vertex_labels < b.vertex_labels; });
    return out;
}

/**
 * Labels of the vertices of Conv(pts): points not expressible as a convex
 * combination of the others, decided by exact linear feasibility.
 */
inline std::set<std::string> extreme_points(const PointConfiguration& pts)
{
    std::size_t m = pts.size();
    if (m == 0)
        throw std::invalid_argument("extreme_points: empty configuration");
    std::size_t amb = pts.ambient_dim();
    std::set<std::string> out;
    for (std::size_t i = 0; i < m; ++i)
    {
        if (m == 1)
        {
            out.insert(pts.labels[i]);
            continue;
        }
        // sum_j lambda_j p_j = p_i, sum lambda = 1, lambda >= 0 over j != i.
        Matrix a(amb + 1, Vec(m - 1));
        Vec b(amb + 1);
        std::size_t col = 0;
        for (std::size_t j = 0; j < m; ++j)
        {
            if (j == i) continue;
            for (std::size_t c = 0; c < amb; ++c)
                a[c][col] = pts.points[j][c];
            a[amb][col] = 1;
            ++col;
        }
        for (std::size_t c = 0; c < amb; ++c) b[c] = pts.points[i][c];
        b[amb] = 1;
        if (!feasible(a, b))
            out.insert(pts.labels[i]);
    }
    return out;
}

/**
 * Volume of Conv(0, rays) measured relative to the given basis of the
 * ambient subspace: |det M| / d! where column k of M expresses ray k in
 * basis coordinates.
 */
inline Rational cone_simplex_volume(const PointConfiguration& rays,
                                    const Matrix& basis)
{
    std::size_t d = basis.size();
    if (rays.size() != d)
        throw DimensionMismatch("cone_simplex_volume: need exactly dim-many rays");
    if (d == 0)
        throw DimensionMismatch("cone_simplex_volume: empty basis");
    std::size_t amb = basis[0].size();
    if (rays.ambient_dim() != amb)
        throw DimensionMismatch("cone_simplex_volume: ambient dimension mismatch");
    // Solve B x = ray for each ray, with B columns = basis vectors.
    Matrix bt(amb, Vec(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t c = 0; c < amb; ++c)
            bt[c][j] = basis[j][c];
    Matrix coords(d, Vec(d));
    for (std::size_t k = 0; k < d; ++k)
    {
        auto x = solve(bt, rays.points[k]);
        if (!x)
            throw DimensionMismatch("cone_simplex_volume: ray outside basis span");
        coords[k] = *x;
    }
    Rational v = det(coords);
    if (v < 0) v = -v;
    Rational fact = 1;
    for (std::size_t k = 2; k <= d; ++k) fact *= Rational(k);
    return v / fact;
}

/// Exact membership of x in Conv(pts), given the facets of the hull.
inline bool in_hull(const PointConfiguration& pts,
                    const std::vector<FacetDescription>& facets,
                    const Vec& x)
{
    // Affine-hull membership first: the facet inequalities only cut within it.
    Matrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(pts.points[i] - pts.points[0]);
    std::size_t r = rank(diffs);
    diffs.push_back(x - pts.points[0]);
    if (rank(diffs) != r) return false;
    for (const auto& f : facets)
        if (dot(f.hyperplane.normal, x) > f.hyperplane.offset) return false;
    return true;
}

/// Re-verify a facet description against its configuration (test helper).
inline bool facet_valid(const PointConfiguration& pts, const FacetDescription& f)
{
    std::set<std::size_t> on(f.vertex_indices.begin(), f.vertex_indices.end());
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        Rational v = dot(f.hyperplane.normal, pts.points[i]);
        if (on.count(i))
        {
            if (v != f.hyperplane.offset) return false;
        }
        else if (v >= f.hyperplane.offset)
            return false;
    }
    return true;
}

}  // namespace bierkr

#endif  // BIERKR_GEOMETRY_HPP
