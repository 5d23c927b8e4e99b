/**
 * Positively weighted graphs, geodesic metrics, Kantorovich-Rubinstein
 * generator configurations, and the structural results for suspensions and
 * trees.
 *
 * KR generators are the points (e_x - e_y)/rho(x, y) in the zero-sum
 * subspace of R^n.  Labels follow the convention v_{i,j} = -v_{j,i}: the
 * canonical label of a generator is a sign together with the sorted vertex
 * pair, "+(i,j)" for (e_j - e_i)/d and "-(i,j)" for its negative (i < j).
 */

#ifndef BIERKR_METRICGRAPH_HPP
#define BIERKR_METRICGRAPH_HPP

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "simplicial.hpp"

#include <map>

namespace bierkr {

struct Disconnected : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct NotATree : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct WeightedGraph
{
    struct Edge
    {
        int u, v;       // 1-based, u < v
        Rational w;
    };

    int n = 0;
    std::vector<Edge> edges;

    WeightedGraph(int vertices, std::vector<Edge> edge_list)
        : n(vertices), edges(std::move(edge_list))
    {
        if (n < 1)
            throw std::invalid_argument("WeightedGraph: need at least one vertex");
        std::set<std::pair<int, int>> seen;
        for (auto& e : edges)
        {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 1 || e.v > n || e.u == e.v)
                throw std::invalid_argument("WeightedGraph: bad edge endpoints");
            if (!seen.insert({e.u, e.v}).second)
                throw std::invalid_argument("WeightedGraph: duplicate edge");
            if (e.w <= 0)
                throw std::invalid_argument("WeightedGraph: weights must be positive");
        }
    }

    bool connected() const
    {
        std::vector<bool> vis(n + 1, false);
        std::vector<int> stack{1};
        vis[1] = true;
        int count = 1;
        while (!stack.empty())
        {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges)
            {
                int other = (e.u == v) ? e.v : (e.v == v ? e.u : 0);
                if (other && !vis[other])
                {
                    vis[other] = true;
                    ++count;
                    stack.push_back(other);
                }
            }
        }
        return count == n;
    }

    bool is_tree() const { return connected() && (int)edges.size() == n - 1; }
};

/// The weighted n-cycle with w({i, i+1}) = l_i (indices mod n).
inline WeightedGraph weighted_cycle(const Vec& lengths)
{
    int n = (int)lengths.size();
    if (n < 3)
        throw std::invalid_argument("weighted_cycle: need n >= 3");
    std::vector<WeightedGraph::Edge> edges;
    for (int i = 1; i <= n; ++i)
        edges.push_back({i, i % n + 1, lengths[i - 1]});
    return WeightedGraph(n, std::move(edges));
}

struct MetricViolation
{
    std::string kind;          // "symmetry", "diagonal", "positivity", "triangle"
    std::array<int, 3> where;  // 1-based indices; third is 0 for pair checks
};

/**
 * Check that a square matrix is a finite metric: symmetric, zero diagonal,
 * positive off-diagonal, and every triangle inequality holds exactly.
 * Returns the first violation in lexicographic index order, if any.
 */
inline std::optional<MetricViolation> validate_metric(const Matrix& m)
{
    int n = (int)m.size();
    for (int i = 0; i < n; ++i)
        if ((int)m[i].size() != n)
            throw std::invalid_argument("validate_metric: matrix not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            if (i == j && m[i][j] != 0)
                return MetricViolation{"diagonal", {i + 1, j + 1, 0}};
            if (i != j && m[i][j] <= 0)
                return MetricViolation{"positivity", {i + 1, j + 1, 0}};
            if (m[i][j] != m[j][i])
                return MetricViolation{"symmetry", {i + 1, j + 1, 0}};
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (i != j && j != k && i != k &&
                    m[i][k] > m[i][j] + m[j][k])
                    return MetricViolation{"triangle", {i + 1, j + 1, k + 1}};
    return std::nullopt;
}

/// Exact all-pairs shortest-path metric of a connected weighted graph.
inline Matrix geodesic_metric(const WeightedGraph& g)
{
    int n = g.n;
    Matrix d(n, Vec(n, Rational(0)));
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& e : g.edges)
    {
        int a = e.u - 1, b = e.v - 1;
        if (!reach[a][b] || e.w < d[a][b])
        {
            d[a][b] = d[b][a] = e.w;
            reach[a][b] = reach[b][a] = true;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
        {
            if (!reach[i][k]) continue;
            for (int j = 0; j < n; ++j)
            {
                if (!reach[k][j]) continue;
                Rational via = d[i][k] + d[k][j];
                if (!reach[i][j] || via < d[i][j])
                {
                    d[i][j] = via;
                    reach[i][j] = true;
                }
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach[i][j])
                throw Disconnected("geodesic_metric: graph is not connected");
    return d;
}

/// Canonical generator label: sign + sorted pair, with v_{i,j} = -v_{j,i}.
inline std::string pair_label(int x, int y)   // point (e_x - e_y)/rho
{
    if (x > y)
        return "+(" + std::to_string(y) + "," + std::to_string(x) + ")";
    return "-(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

/// Parse a pair label back to the ordered pair (x, y).
inline std::pair<int, int> parse_pair_label(const std::string& s)
{
    auto comma = s.find(',');
    int a = std::stoi(s.substr(2, comma - 2));
    int b = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
    if (s[0] == '+') return {b, a};
    return {a, b};
}

/// All n(n-1) KR generators (e_x - e_y)/rho(x, y) of a finite metric.
inline PointConfiguration kr_generators(const Matrix& metric)
{
    int n = (int)metric.size();
    if (n < 2)
        throw std::invalid_argument("kr_generators: need at least two points");
    if (auto v = validate_metric(metric))
        throw std::invalid_argument("kr_generators: not a metric (" + v->kind + ")");
    PointConfiguration pts;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
        {
            if (x == y) continue;
            Vec p(n, Rational(0));
            p[x - 1] = 1 / metric[x - 1][y - 1];
            p[y - 1] = -p[x - 1];
            pts.add(pair_label(x, y), std::move(p));
        }
    return pts;
}

struct KrGraphGenerators
{
    PointConfiguration generators;                 // +-v_e over geodesic edges
    std::vector<std::pair<int, int>> dropped;      // non-geodesic edges
};

/**
 * The reduced generator set {+-v_{i,j}} over the edges of the graph; its
 * hull equals the hull of the full generator set of the geodesic metric.
 * Edges strictly longer than the geodesic distance are reported in
 * `dropped` and excluded (their generators are not unit-norm points).
 */
inline KrGraphGenerators kr_generators_graph(const WeightedGraph& g)
{
    Matrix d = geodesic_metric(g);
    KrGraphGenerators out;
    for (const auto& e : g.edges)
    {
        if (e.w > d[e.u - 1][e.v - 1])
        {
            out.dropped.push_back({e.u, e.v});
            continue;
        }
        Vec p(g.n, Rational(0));
        p[e.v - 1] = 1 / e.w;
        p[e.u - 1] = -p[e.v - 1];
        out.generators.add(pair_label(e.v, e.u), p);
        out.generators.add(pair_label(e.u, e.v), -p);
    }
    return out;
}

/// Facet family of a hull as sets of vertex labels.
inline std::set<std::vector<std::string>>
label_facet_family(const std::vector<FacetDescription>& facets)
{
    std::set<std::vector<std::string>> fam;
    for (const auto& f : facets) fam.insert(f.vertex_labels);
    return fam;
}

struct SuspensionReport
{
    bool pass = false;
    std::string failed_hypothesis;   // empty when hypotheses hold
    std::string certificate;         // mismatching facet, if any
    long long big_facets = 0;
    long long small_facets = 0;
};

/**
 * Verify that KR(d_Gamma) is the (|X|-1)-fold suspension of the KR polytope
 * of the subgraph on X^c + {x}: every facet of the big polytope must be a
 * facet of the small one joined with one sign choice of +-v_e for each edge
 * e of the tree Gamma|_X.
 */
inline SuspensionReport suspension_structure(const WeightedGraph& g,
                                             const std::set<int>& x_set, int x)
{
    SuspensionReport rep;
    auto fail_hyp = [&](std::string h)
    {
        rep.failed_hypothesis = std::move(h);
        return rep;
    };
    if (!x_set.count(x))
        return fail_hyp("x must belong to X");
    if (x_set.size() < 2)
        return fail_hyp("Gamma|_X must be a non-trivial tree");

    std::set<int> small_verts;
    for (int v = 1; v <= g.n; ++v)
        if (!x_set.count(v)) small_verts.insert(v);
    small_verts.insert(x);

    std::vector<WeightedGraph::Edge> tree_edges, small_edges;
    for (const auto& e : g.edges)
    {
        bool in_x = x_set.count(e.u) && x_set.count(e.v);
        bool in_small = small_verts.count(e.u) && small_verts.count(e.v);
        if (in_x) tree_edges.push_back(e);
        else if (in_small) small_edges.push_back(e);
        else
            return fail_hyp("E(Gamma) must split into E(Gamma|_{X^c+x}) and E(Gamma|_X)");
    }

    // Gamma|_X must be a tree on X.
    {
        std::vector<int> xs(x_set.begin(), x_set.end());
        std::map<int, int> idx;
        for (std::size_t i = 0; i < xs.size(); ++i) idx[xs[i]] = (int)i + 1;
        std::vector<WeightedGraph::Edge> mapped;
        for (const auto& e : tree_edges)
            mapped.push_back({idx[e.u], idx[e.v], e.w});
        WeightedGraph gx((int)xs.size(), mapped);
        if (!gx.is_tree())
            return fail_hyp("Gamma|_X must be a tree");
    }

    // Small graph on X^c + {x}, reindexed.
    std::vector<int> sv(small_verts.begin(), small_verts.end());
    std::map<int, int> idx;
    for (std::size_t i = 0; i < sv.size(); ++i) idx[sv[i]] = (int)i + 1;
    std::vector<WeightedGraph::Edge> mapped;
    for (const auto& e : small_edges)
        mapped.push_back({idx[e.u], idx[e.v], e.w});
    WeightedGraph gs((int)sv.size(), mapped);
    if (!gs.connected())
        return fail_hyp("Gamma|_{X^c+x} must be connected");

    auto big = kr_generators_graph(g);
    auto small = kr_generators_graph(gs);
    auto big_fam = label_facet_family(facet_enumeration(big.generators));
    rep.big_facets = (long long)big_fam.size();

    // Base cells: facets of the small polytope in original vertex labels.
    // Degenerate bases (a single vertex, or a segment whose facets are its
    // endpoints) are handled explicitly.
    auto unmap_label = [&](const std::string& lab)
    {
        auto [a, b] = parse_pair_label(lab);
        return pair_label(sv[a - 1], sv[b - 1]);
    };
    std::vector<std::vector<std::string>> base_cells;
    if (small.generators.size() == 0)
    {
        base_cells.push_back({});
    }
    else if (affine_dimension(small.generators) == 1)
    {
        for (const auto& l : extreme_points(small.generators))
            base_cells.push_back({unmap_label(l)});
    }
    else
    {
        auto small_facets = facet_enumeration(small.generators);
        for (const auto& f : small_facets)
        {
            std::vector<std::string> labels;
            for (const auto& l : f.vertex_labels)
                labels.push_back(unmap_label(l));
            base_cells.push_back(std::move(labels));
        }
    }
    rep.small_facets = (long long)base_cells.size();

    std::vector<std::string> tree_labels;
    for (const auto& e : tree_edges)
    {
        tree_labels.push_back(pair_label(e.v, e.u));
        tree_labels.push_back(pair_label(e.u, e.v));
    }
    std::size_t t = tree_edges.size();
    std::set<std::vector<std::string>> expected;
    for (const auto& cell : base_cells)
        for (Mask signs = 0; signs < (Mask(1) << t); ++signs)
        {
            std::vector<std::string> labels = cell;
            for (std::size_t k = 0; k < t; ++k)
                labels.push_back(tree_labels[2 * k + ((signs >> k) & 1)]);
            std::sort(labels.begin(), labels.end());
            expected.insert(std::move(labels));
        }

    if (big_fam == expected)
    {
        rep.pass = true;
    }
    else
    {
        for (const auto& f : big_fam)
            if (!expected.count(f))
            {
                rep.certificate = "unexpected facet {";
                for (const auto& l : f) rep.certificate += l + " ";
                rep.certificate += "}";
                break;
            }
        if (rep.certificate.empty())
            rep.certificate = "missing expected suspension facet";
    }
    return rep;
}

/**
 * Check that the KR polytope of a weighted tree has the combinatorial type
 * of the (n-1)-dimensional cross-polytope: 2(n-1) vertices and 2^{n-1}
 * facets, one per sign pattern over the edges.
 */
inline VerificationReport tree_cross_polytope_check(const WeightedGraph& t)
{
    if (!t.is_tree())
        throw NotATree("tree_cross_polytope_check: input is not a tree");
    VerificationReport rep;
    rep.theorem = "tree-cross-polytope";
    rep.instance = "n=" + std::to_string(t.n);
    if (t.n < 2)
    {
        rep.pass = false;
        rep.certificate = "trivial tree has no KR polytope";
        return rep;
    }
    auto gen = kr_generators_graph(t);   // tree edges are always geodesic
    auto extremes = extreme_points(gen.generators);
    if ((int)extremes.size() != 2 * (t.n - 1))
    {
        rep.certificate = "expected " + std::to_string(2 * (t.n - 1)) +
                          " vertices, found " + std::to_string(extremes.size());
        return rep;
    }
    std::set<std::vector<std::string>> expected;
    std::size_t m = t.edges.size();
    for (Mask signs = 0; signs < (Mask(1) << m); ++signs)
    {
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < m; ++k)
        {
            const auto& e = t.edges[k];
            labels.push_back(((signs >> k) & 1) ? pair_label(e.u, e.v)
                                                : pair_label(e.v, e.u));
        }
        std::sort(labels.begin(), labels.end());
        expected.insert(std::move(labels));
    }
    std::set<std::vector<std::string>> fam;
    if (t.n == 2)
    {
        // A segment: the two endpoint facets.
        for (const auto& l : gen.generators.labels) fam.insert({l});
    }
    else
    {
        fam = label_facet_family(facet_enumeration(gen.generators));
    }
    rep.matched_facets = (long long)fam.size();
    if (fam == expected)
    {
        rep.pass = true;
    }
    else
    {
        rep.certificate = "facet family differs from the cross-polytope pattern";
    }
    return rep;
}

}  // namespace bierkr

#endif  // BIERKR_METRICGRAPH_HPP
