/**
 * Geometric realizations and theorem verifiers.
 *
 * verify_q_alpha: the polytope Q_alpha = Conv{y_i} + {-alpha y_i} built on a
 * minimal circuit realizes the Bier sphere of the threshold complex at quota
 * 1/(1+alpha); checked by exact facet enumeration against the combinatorial
 * Bier facets.
 *
 * verify_kr_bier: the boundary of the KR polytope of a weighted cycle is the
 * Bier sphere of the complex of short sets (the alpha = 1 specialization,
 * with the KR generator set of the geodesic metric).
 *
 * delta_realization / fan_check / star_volume: the canonical realization of
 * any Bier sphere on the vertices delta_i = e_i - u/n, its complete
 * simplicial fan certificate (starshapedness), and the volume of the
 * resulting star body in delta-basis measure.
 */

#ifndef BIERKR_REALIZATION_HPP
#define BIERKR_REALIZATION_HPP

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "metricgraph.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "simplicial.hpp"
#include "threshold.hpp"

namespace bierkr {

struct DegenerateCircuit : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct LongBar : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Vectors u_1, ..., u_n summing to zero with every proper subset independent.
struct GaleConfiguration
{
    Matrix circuit;   // rows u_i

    explicit GaleConfiguration(Matrix u) : circuit(std::move(u))
    {
        std::size_t n = circuit.size();
        if (n < 3)
            throw DegenerateCircuit("GaleConfiguration: need at least 3 vectors");
        Vec sum(circuit[0].size(), Rational(0));
        for (const auto& row : circuit) sum = sum + row;
        if (!is_zero(sum))
            throw DegenerateCircuit("GaleConfiguration: vectors do not sum to zero");
        if (rank(circuit) != n - 1)
            throw DegenerateCircuit("GaleConfiguration: rank must be n - 1");
        for (std::size_t skip = 0; skip < n; ++skip)
        {
            Matrix sub;
            for (std::size_t i = 0; i < n; ++i)
                if (i != skip) sub.push_back(circuit[i]);
            if (rank(sub) != n - 1)
                throw DegenerateCircuit("GaleConfiguration: proper subset is dependent");
        }
    }
};

/// The cycle circuit u_i = e_{i+1} - e_i in the zero-sum hyperplane of R^n.
inline GaleConfiguration standard_circuit(int n)
{
    if (n < 3)
        throw DegenerateCircuit("standard_circuit: need n >= 3");
    Matrix u(n, Vec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
    {
        u[i][(i + 1) % n] = 1;
        u[i][i] = -1;
    }
    return GaleConfiguration(std::move(u));
}

/**
 * The 2n labeled points of Q_alpha: y_i = u_i / l_i with label "+i", and
 * -alpha y_i with label "-i".
 */
inline PointConfiguration q_alpha(const WeightVector& l, const Rational& alpha,
                                  const GaleConfiguration& c)
{
    require_normalized(l, "q_alpha");
    if (alpha <= 0)
        throw std::invalid_argument("q_alpha: alpha must be positive");
    if ((int)c.circuit.size() != l.size())
        throw DimensionMismatch("q_alpha: circuit size does not match weights");
    PointConfiguration pts;
    for (int i = 0; i < l.size(); ++i)
        pts.add("+" + std::to_string(i + 1),
                Rational(1) / l.weights[i] * c.circuit[i]);
    for (int i = 0; i < l.size(); ++i)
        pts.add("-" + std::to_string(i + 1),
                Rational(-alpha) / l.weights[i] * c.circuit[i]);
    return pts;
}

namespace detail {

inline LabelSet signed_labels(const std::vector<std::string>& labels)
{
    LabelSet out;
    for (const auto& l : labels) out.push_back(std::stoi(l));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string label_set_string(const LabelSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (i) out += ",";
        out += (s[i] > 0 ? "+" : "") + std::to_string(s[i]);
    }
    return out + "}";
}

inline std::string weights_string(const WeightVector& l)
{
    std::string out;
    for (int i = 0; i < l.size(); ++i)
    {
        if (i) out += ",";
        out += to_string(l.weights[i]);
    }
    return out;
}

inline std::string family_diff_certificate(const FacetFamily& geometric,
                                           const FacetFamily& combinatorial)
{
    for (const auto& f : geometric)
        if (!combinatorial.count(f))
            return "geometric facet " + label_set_string(f) +
                   " has no Bier counterpart";
    for (const auto& f : combinatorial)
        if (!geometric.count(f))
            return "Bier facet " + label_set_string(f) +
                   " not realized geometrically";
    return "";
}

}  // namespace detail

/**
 * Verify that the facet lattice of Q_alpha coincides with the Bier sphere of
 * T_{mu_L < 1/(1+alpha)} under the labeling y_i <-> ({i}, {}) and
 * -alpha y_j <-> ({}, {j}).  Also asserts, independently of the comparison,
 * the face conditions on every geometric facet: I and J disjoint, the union
 * proper and nonempty, mu(I) < beta/(1+beta) and mu(J) < 1/(1+beta).
 */
inline VerificationReport verify_q_alpha(const WeightVector& l, const Rational& alpha,
                                         const GaleConfiguration& circuit)
{
    require_normalized(l, "verify_q_alpha");
    if (l.size() < 3)
        throw std::invalid_argument("verify_q_alpha: need n >= 3");
    Rational beta = 1 / alpha;
    Quota nu(beta / (1 + beta));
    Quota conu(1 / (1 + beta));
    VerificationReport rep;
    rep.theorem = "q-alpha-realization";
    rep.instance = "L=(" + detail::weights_string(l) + "), alpha=" + to_string(alpha);
    if (auto g = is_generic(l, nu); !g.generic)
        throw NotGeneric("verify_q_alpha: mu_L(I) = nu for subset mask " +
                         std::to_string(*g.violating_subset));
    if (auto g = is_generic(l, conu); !g.generic)
        throw NotGeneric("verify_q_alpha: mu_L(I) = 1 - nu for some I");

    SimplicialComplex k = threshold_complex(l, nu);
    FacetFamily bier = to_family(bier_facets(k));

    PointConfiguration pts = q_alpha(l, alpha, circuit);
    auto facets = facet_enumeration(pts);
    FacetFamily geometric;
    Mask full = (Mask(1) << l.size()) - 1;
    for (const auto& f : facets)
    {
        LabelSet labels = detail::signed_labels(f.vertex_labels);
        Mask left = 0, right = 0;
        for (int s : labels)
            if (s > 0) left |= Mask(1) << (s - 1);
            else right |= Mask(1) << (-s - 1);
        if (left & right)
        {
            rep.certificate = "facet " + detail::label_set_string(labels) +
                              " violates I and J disjoint";
            return rep;
        }
        Mask uni = left | right;
        if (uni == 0 || uni == full)
        {
            rep.certificate = "facet " + detail::label_set_string(labels) +
                              " violates emptyset != I+J != [n]";
            return rep;
        }
        if (!(measure(l, left) < nu.value) || !(measure(l, right) < conu.value))
        {
            rep.certificate = "facet " + detail::label_set_string(labels) +
                              " violates the quota inequalities";
            return rep;
        }
        geometric.insert(std::move(labels));
    }

    rep.matched_facets = (long long)geometric.size();
    if (geometric == bier)
    {
        rep.pass = true;
    }
    else
    {
        rep.certificate = detail::family_diff_certificate(geometric, bier);
    }
    return rep;
}

inline VerificationReport verify_q_alpha(const WeightVector& l, const Rational& alpha)
{
    return verify_q_alpha(l, alpha, standard_circuit(l.size()));
}

namespace detail {

// Signed label of a cycle KR generator: the ordered pair (x, y) labels
// y_i = (e_{i+1} - e_i)/l_i when x follows y on the cycle, and -y_i when y
// follows x.
inline int cycle_signed_label(const std::string& pair, int n)
{
    auto [x, y] = parse_pair_label(pair);
    if (y % n + 1 == x) return y;
    if (x % n + 1 == y) return -x;
    throw std::logic_error("cycle_signed_label: not a cycle edge generator");
}

}  // namespace detail

/**
 * Facet family of the boundary of KR(d_L) for the weighted cycle, as signed
 * label sets under y_i <-> +i, -y_i <-> -i.  Asserts along the way that the
 * extreme points are exactly the 2n edge generators: all 2n are vertices of
 * their own hull, and every non-edge generator of the full configuration
 * lies inside it.
 */
inline FacetFamily kr_cycle_facet_family(const WeightVector& l)
{
    require_normalized(l, "kr_cycle_facet_family");
    int n = l.size();
    for (const auto& w : l.weights)
        if (w >= Rational(1, 2))
            throw LongBar("weighted cycle has a bar of length >= 1/2; "
                          "the edge-geodesic identification fails");
    WeightedGraph cycle = weighted_cycle(l.weights);
    Matrix metric = geodesic_metric(cycle);
    auto edge_gen = kr_generators_graph(cycle);
    if (!edge_gen.dropped.empty())
        throw std::logic_error("kr_cycle_facet_family: short bars cannot be non-geodesic");

    auto extremes = extreme_points(edge_gen.generators);
    if (extremes.size() != edge_gen.generators.size())
        throw std::logic_error("kr_cycle_facet_family: an edge generator is not extreme");

    auto facets = facet_enumeration(edge_gen.generators);

    // The remaining generators of the full metric configuration must lie in
    // the hull, so the vertex sets of the two configurations agree.
    PointConfiguration all_gen = kr_generators(metric);
    std::set<std::string> edge_labels(edge_gen.generators.labels.begin(),
                                      edge_gen.generators.labels.end());
    for (std::size_t i = 0; i < all_gen.size(); ++i)
    {
        if (edge_labels.count(all_gen.labels[i])) continue;
        if (!in_hull(edge_gen.generators, facets, all_gen.points[i]))
            throw std::logic_error("kr_cycle_facet_family: non-edge generator " +
                                   all_gen.labels[i] + " outside the edge hull");
    }

    FacetFamily fam;
    for (const auto& f : facets)
    {
        LabelSet labels;
        for (const auto& lab : f.vertex_labels)
            labels.push_back(detail::cycle_signed_label(lab, n));
        std::sort(labels.begin(), labels.end());
        fam.insert(std::move(labels));
    }
    return fam;
}

/**
 * Verify that the boundary of KR(d_L) equals Bier(Short(L)) as labeled
 * facet families.  Requires L normalized, generic at quota 1/2, and all
 * bars short (l_i < 1/2).
 */
inline VerificationReport verify_kr_bier(const WeightVector& l)
{
    require_normalized(l, "verify_kr_bier");
    if (l.size() < 3)
        throw std::invalid_argument("verify_kr_bier: need n >= 3");
    VerificationReport rep;
    rep.theorem = "kr-bier";
    rep.instance = "L=(" + detail::weights_string(l) + ")";
    if (auto g = is_generic(l, Quota(Rational(1, 2))); !g.generic)
        throw NotGeneric("verify_kr_bier: mu_L(I) = 1/2 for subset mask " +
                         std::to_string(*g.violating_subset));
    FacetFamily kr = kr_cycle_facet_family(l);
    FacetFamily bier = to_family(bier_facets(short_sets(l)));
    rep.matched_facets = (long long)kr.size();
    if (kr == bier)
    {
        rep.pass = true;
    }
    else
    {
        rep.certificate = detail::family_diff_certificate(kr, bier);
    }
    return rep;
}

/// The canonical realization of Bier(K) on delta_i = e_i - u/n.
struct DeltaRealization
{
    int n = 0;
    Matrix delta;                        // rows delta_1, ..., delta_n in R^n
    std::vector<BierFace> facets;        // Bier facets of K
    std::vector<Matrix> facet_rays;      // realization points per facet
};

/// Coordinates of x in the basis delta_1, ..., delta_{n-1} of H_0.
inline Vec delta_basis_coords(const Vec& x)
{
    std::size_t n = x.size();
    Vec c(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) c[i] = x[i] - x[n - 1];
    return c;
}

/**
 * Assign coordinates delta_i / -delta_j to the Bier vertices of K and list
 * the realization points of each facet, verifying that every facet spans a
 * simplicial cone (n - 1 linearly independent rays in the zero-sum
 * hyperplane).
 */
inline DeltaRealization delta_realization(const SimplicialComplex& k)
{
    if (!k.is_proper())
        throw NotProper("delta_realization: K must be proper");
    int n = k.ground_size();
    DeltaRealization r;
    r.n = n;
    r.delta.assign(n, Vec(n, Rational(-1, n)));
    for (int i = 0; i < n; ++i) r.delta[i][i] += 1;
    r.facets = bier_facets(k);
    for (const auto& f : r.facets)
    {
        Matrix rays;
        for (int i : mask_to_labels(f.left)) rays.push_back(r.delta[i - 1]);
        for (int j : mask_to_labels(f.right)) rays.push_back(-r.delta[j - 1]);
        if (rank(rays) != rays.size())
            throw std::logic_error("delta_realization: facet rays are dependent");
        r.facet_rays.push_back(std::move(rays));
    }
    return r;
}

/**
 * Certify that the cones over the delta-realized Bier facets form a complete
 * simplicial fan in the zero-sum hyperplane.  Every maximal chain of proper
 * nonempty subsets of [n] must select exactly one facet (the longest prefix
 * inside K determines it), the chain -> subdivision-cell map must be a
 * bijection onto the disjoint union of the facets' barycentric cells, and
 * each chain's barycentric rays must positively span the corresponding
 * shore rays (checked by exact positive proportionality) and be linearly
 * independent.
 */
inline VerificationReport fan_check(const SimplicialComplex& k)
{
    if (!k.is_proper())
        throw NotProper("fan_check: K must be proper");
    int n = k.ground_size();
    VerificationReport rep;
    rep.theorem = "bier-fan";
    rep.instance = "n=" + std::to_string(n) + ", facets=" +
                   std::to_string(k.facets().size());
    DeltaRealization real = delta_realization(k);
    Mask full = (Mask(1) << n) - 1;

    std::map<std::pair<Mask, Mask>, long long> expected_cells, seen_cells;
    for (const auto& f : real.facets)
    {
        long long cells = 1;
        for (int i = 1; i <= (int)mask_to_labels(f.left).size(); ++i) cells *= i;
        for (int i = 1; i <= (int)mask_to_labels(f.right).size(); ++i) cells *= i;
        expected_cells[{f.left, f.right}] = cells;
        seen_cells[{f.left, f.right}] = 0;
    }

    auto barycenter = [&](Mask s)
    {
        auto labels = mask_to_labels(s);
        Vec b(n, Rational(0));
        for (int i : labels) b = b + real.delta[i - 1];
        return Rational(1, (int)labels.size()) * b;
    };

    long long chain_total = 0;
    std::string cert;

    // Enumerate maximal chains as orderings of n - 1 distinct elements.
    std::vector<int> chain;
    std::vector<bool> used(n, false);
    std::function<bool()> visit = [&]() -> bool
    {
        if ((int)chain.size() == n - 1)
        {
            ++chain_total;
            std::vector<Mask> c(n - 1);
            Mask acc = 0;
            for (int i = 0; i < n - 1; ++i)
            {
                acc |= Mask(1) << chain[i];
                c[i] = acc;
            }
            int p = 0;
            while (p < n - 1 && k.contains(c[p])) ++p;
            Mask s = (p >= 1) ? c[p - 1] : 0;
            Mask cnext = (p < n - 1) ? c[p] : full;
            Mask t = full & ~cnext;
            auto it = seen_cells.find({s, t});
            if (it == seen_cells.end())
            {
                cert = "chain selects (" + std::to_string(s) + "," +
                       std::to_string(t) + ") which is not a Bier facet";
                return false;
            }
            ++it->second;
            // Geometric rays: barycentric vs shore, with independence.
            Matrix rays;
            for (int i = 0; i < n - 1; ++i)
            {
                Vec bary = barycenter(c[i]);
                rays.push_back(bary);
                if (i < p)
                    continue;   // shore ray nu_delta(S_i) is bary itself
                // Shore ray nu_{-delta}(T_j) with T_j the complement of c[i]
                // must be a positive multiple of nu_delta(c[i]).
                Mask tj = full & ~c[i];
                auto tj_labels = mask_to_labels(tj);
                Vec shore(n, Rational(0));
                for (int j : tj_labels) shore = shore - real.delta[j - 1];
                shore = Rational(1, (int)tj_labels.size()) * shore;
                // find ratio
                Rational ratio = 0;
                bool ok = true;
                for (int cidx = 0; cidx < n && ok; ++cidx)
                {
                    if (bary[cidx] == 0)
                    {
                        if (shore[cidx] != 0) ok = false;
                        continue;
                    }
                    Rational rr = shore[cidx] / bary[cidx];
                    if (ratio == 0) ratio = rr;
                    else if (rr != ratio) ok = false;
                }
                if (!ok || ratio <= 0)
                {
                    cert = "shore ray is not a positive multiple of the "
                           "barycentric ray";
                    return false;
                }
            }
            if (rank(rays) != (std::size_t)(n - 1))
            {
                cert = "chain rays do not span a simplicial cone";
                return false;
            }
            return true;
        }
        for (int e = 0; e < n; ++e)
        {
            if (used[e]) continue;
            used[e] = true;
            chain.push_back(e);
            bool ok = visit();
            chain.pop_back();
            used[e] = false;
            if (!ok) return false;
        }
        return true;
    };

    if (n == 1)
    {
        rep.certificate = "no Bier sphere on a single vertex";
        return rep;
    }
    if (!visit())
    {
        rep.certificate = cert;
        return rep;
    }
    long long cell_sum = 0;
    for (const auto& [key, cnt] : seen_cells)
    {
        if (cnt != expected_cells[key])
        {
            rep.certificate = "facet received " + std::to_string(cnt) +
                              " cells, expected " +
                              std::to_string(expected_cells[key]);
            return rep;
        }
        cell_sum += cnt;
    }
    if (cell_sum != chain_total)
    {
        rep.certificate = "chain/cell totals differ";
        return rep;
    }
    rep.matched_facets = (long long)real.facets.size();
    rep.pass = true;
    return rep;
}

/**
 * Volume of the star body of the canonical realization, in the measure
 * normalized by the basis delta_1, ..., delta_{n-1}: the sum over Bier
 * facets of the simplex volumes Conv(0, vertex points).
 */
inline Rational star_volume(const SimplicialComplex& k)
{
    auto fan = fan_check(k);
    if (!fan.pass)
        throw std::logic_error("star_volume: fan certificate failed: " + fan.certificate);
    DeltaRealization real = delta_realization(k);
    int n = real.n;
    Rational fact = 1;
    for (int i = 2; i <= n - 1; ++i) fact *= i;
    Rational total = 0;
    for (const auto& rays : real.facet_rays)
    {
        Matrix coords;
        for (const auto& p : rays) coords.push_back(delta_basis_coords(p));
        Rational d = det(coords);
        if (d < 0) d = -d;
        total += d / fact;
    }
    return total;
}

/**
 * Verify the permutation equivalence KR(d_L) ~ KR(d_{L^sigma}): the facet
 * family of the permuted cycle is the image of the original one under the
 * label bijection +-i -> +-sigma^{-1}(i), and the f-vectors agree.
 */
inline VerificationReport perm_equivalence(const WeightVector& l,
                                           const std::vector<int>& sigma)
{
    require_normalized(l, "perm_equivalence");
    VerificationReport rep;
    rep.theorem = "kr-permutation";
    std::string sig;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        sig += (i ? "," : "") + std::to_string(sigma[i]);
    rep.instance = "L=(" + detail::weights_string(l) + "), sigma=(" + sig + ")";

    WeightVector lp = l.permuted(sigma);
    FacetFamily a = kr_cycle_facet_family(l);
    FacetFamily b = kr_cycle_facet_family(lp);

    std::vector<int> inverse(sigma.size() + 1, 0);
    for (int i = 1; i <= (int)sigma.size(); ++i) inverse[sigma[i - 1]] = i;
    std::map<int, int> bij;
    for (int i = 1; i <= (int)sigma.size(); ++i)
    {
        bij[i] = inverse[i];
        bij[-i] = -inverse[i];
    }
    rep.matched_facets = (long long)a.size();
    if (!isomorphic_under(bij, a, b))
    {
        rep.certificate = "facet families differ under the induced bijection";
        return rep;
    }
    // f-vectors of the two boundary complexes must agree as well.
    auto family_fvector = [](const FacetFamily& fam)
    {
        std::set<LabelSet> faces;
        for (const auto& f : fam)
        {
            std::size_t m = f.size();
            for (Mask s = 0; s < (Mask(1) << m); ++s)
            {
                LabelSet sub;
                for (std::size_t i = 0; i < m; ++i)
                    if ((s >> i) & 1) sub.push_back(f[i]);
                faces.insert(sub);
            }
        }
        std::map<std::size_t, long long> counts;
        for (const auto& f : faces) ++counts[f.size()];
        return counts;
    };
    if (family_fvector(a) != family_fvector(b))
    {
        rep.certificate = "f-vectors differ";
        return rep;
    }
    rep.pass = true;
    return rep;
}

}  // namespace bierkr

#endif  // BIERKR_REALIZATION_HPP
