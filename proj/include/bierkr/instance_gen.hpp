/**
 * Seeded instance generators for property campaigns: random generic weight
 * vectors, weighted trees, simplicial complexes, permutations, and zero-sum
 * points.  All randomness flows through a caller-supplied mt19937_64 so runs
 * are reproducible from a single seed.
 */

#ifndef BIERKR_INSTANCE_GEN_HPP
#define BIERKR_INSTANCE_GEN_HPP

#include <random>
#include <vector>

#include "metricgraph.hpp"
#include "rational.hpp"
#include "simplicial.hpp"
#include "threshold.hpp"

namespace bierkr {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
inline long long rand_int(Rng& rng, long long lo, long long hi)
{
    return lo + (long long)(rng() % (unsigned long long)(hi - lo + 1));
}

/**
 * Random normalized weight vector with denominators bounded by `den`,
 * regenerated until generic at every requested quota (and, optionally,
 * until every normalized weight is below 1/2).
 */
inline WeightVector random_generic_weights(Rng& rng, int n,
                                           const std::vector<Rational>& quotas,
                                           bool all_short, long long den = 1000)
{
    for (;;)
    {
        Vec w(n);
        for (int i = 0; i < n; ++i)
            w[i] = Rational(rand_int(rng, 1, den), den);
        WeightVector l = WeightVector(std::move(w)).normalized();
        if (all_short)
        {
            bool ok = true;
            for (const auto& x : l.weights)
                if (x >= Rational(1, 2)) { ok = false; break; }
            if (!ok) continue;
        }
        bool generic = true;
        for (const auto& q : quotas)
            if (!is_generic(l, Quota(q)).generic) { generic = false; break; }
        if (generic) return l;
    }
}

/// Random positively weighted tree on [n], decoded from a Prufer sequence.
inline WeightedGraph random_tree(Rng& rng, int n, long long den = 1000)
{
    std::vector<WeightedGraph::Edge> edges;
    auto weight = [&] { return Rational(rand_int(rng, 1, den), den); };
    if (n == 2)
    {
        edges.push_back({1, 2, weight()});
        return WeightedGraph(n, std::move(edges));
    }
    std::vector<int> prufer(n - 2);
    for (auto& p : prufer) p = (int)rand_int(rng, 1, n);
    std::vector<int> degree(n + 1, 1);
    for (int p : prufer) ++degree[p];
    std::vector<int> seq = prufer;
    for (int p : seq)
    {
        for (int leaf = 1; leaf <= n; ++leaf)
            if (degree[leaf] == 1)
            {
                edges.push_back({leaf, p, weight()});
                --degree[leaf];
                --degree[p];
                break;
            }
    }
    int a = 0, b = 0;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1) (a ? b : a) = v;
    edges.push_back({a, b, weight()});
    return WeightedGraph(n, std::move(edges));
}

/// Random proper simplicial complex on [n] (emptyset a face, [n] not).
inline SimplicialComplex random_proper_complex(Rng& rng, int n)
{
    Mask full = (Mask(1) << n) - 1;
    int count = (int)rand_int(rng, 1, 2 * n);
    std::vector<Mask> facets;
    for (int i = 0; i < count; ++i)
    {
        Mask m = (Mask)rand_int(rng, 0, full - 1);
        facets.push_back(m);
    }
    return SimplicialComplex(n, std::move(facets));
}

/// All proper complexes on [n] (n <= 4), by scanning downward-closed families.
inline std::vector<SimplicialComplex> all_proper_complexes(int n)
{
    if (n > 4)
        throw TooLarge("all_proper_complexes: exhaustive scan limited to n <= 4");
    Mask full = (Mask(1) << n) - 1;
    int nsubsets = 1 << n;
    std::vector<SimplicialComplex> out;
    for (std::uint32_t fam = 0; fam < (1u << nsubsets); ++fam)
    {
        if (!(fam & 1)) continue;                   // emptyset must be a face
        if (fam & (1u << full)) continue;           // [n] must not be
        bool closed = true;
        for (int s = 0; s < nsubsets && closed; ++s)
        {
            if (!((fam >> s) & 1)) continue;
            for (int b = 0; b < n; ++b)
                if ((s >> b) & 1)
                    if (!((fam >> (s & ~(1 << b))) & 1)) { closed = false; break; }
        }
        if (!closed) continue;
        std::vector<Mask> faces;
        for (int s = 0; s < nsubsets; ++s)
            if ((fam >> s) & 1) faces.push_back((Mask)s);
        out.emplace_back(n, std::move(faces));
    }
    return out;
}

/// Random permutation of [n], one-line notation, 1-based.
inline std::vector<int> random_permutation(Rng& rng, int n)
{
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    for (int i = n - 1; i > 0; --i)
        std::swap(sigma[i], sigma[(int)rand_int(rng, 0, i)]);
    return sigma;
}

/// Random rational point with zero coordinate sum.
inline Vec random_zero_sum_point(Rng& rng, int n, long long den = 1000)
{
    Vec p(n);
    Rational mean = 0;
    for (int i = 0; i < n; ++i)
    {
        p[i] = Rational(rand_int(rng, -den, den), den);
        mean += p[i];
    }
    mean /= n;
    for (auto& x : p) x -= mean;
    return p;
}

}  // namespace bierkr

#endif  // BIERKR_INSTANCE_GEN_HPP
