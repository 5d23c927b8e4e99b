/**
 * Abstract simplicial complexes on [n], Alexander duality, deleted joins,
 * Bier sphere facets, f-vectors, and combinatorial isomorphism search.
 *
 * Complexes are stored by their inclusion-maximal faces with the downward
 * closure implicit; faces are bitmasks over [n] (n <= 16).  The void complex
 * (no faces at all) is the empty facet list; the complex {emptyset} is the
 * facet list containing just the empty mask.
 */

#ifndef BIERKR_SIMPLICIAL_HPP
#define BIERKR_SIMPLICIAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace bierkr {

using Mask = std::uint32_t;

constexpr int kMaxGroundSize = 16;

struct NotProper : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct GroundMismatch : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct NotBijective : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

inline std::vector<int> mask_to_labels(Mask m)   // 1-based
{
    std::vector<int> v;
    for (int i = 0; i < kMaxGroundSize; ++i)
        if (m & (Mask(1) << i)) v.push_back(i + 1);
    return v;
}

inline Mask labels_to_mask(const std::vector<int>& labels, int n)
{
    Mask m = 0;
    for (int l : labels)
    {
        if (l < 1 || l > n)
            throw std::invalid_argument("vertex label out of range [1, n]");
        m |= Mask(1) << (l - 1);
    }
    return m;
}

class SimplicialComplex
{
public:
    SimplicialComplex(int n, std::vector<Mask> facet_list) : n_(n)
    {
        if (n < 0 || n > kMaxGroundSize)
            throw std::invalid_argument("SimplicialComplex: ground size out of range");
        Mask full = (Mask(1) << n) - 1;
        for (Mask f : facet_list)
            if (f & ~full)
                throw std::invalid_argument("SimplicialComplex: facet outside ground set");
        // Keep only inclusion-maximal sets, deduplicated, sorted.
        std::sort(facet_list.begin(), facet_list.end());
        facet_list.erase(std::unique(facet_list.begin(), facet_list.end()),
                         facet_list.end());
        for (Mask f : facet_list)
        {
            bool dominated = false;
            for (Mask g : facet_list)
                if (g != f && (f & g) == f) { dominated = true; break; }
            if (!dominated) facets_.push_back(f);
        }
    }

    int ground_size() const { return n_; }
    Mask full_mask() const { return (Mask(1) << n_) - 1; }
    const std::vector<Mask>& facets() const { return facets_; }

    /// Void complex: not even the empty set is a face.
    bool is_void() const { return facets_.empty(); }
    bool is_full() const { return facets_.size() == 1 && facets_[0] == full_mask(); }
    /// Proper for the Bier construction: emptyset is a face, [n] is not.
    bool is_proper() const { return !is_void() && !is_full(); }

    bool contains(Mask face) const
    {
        for (Mask f : facets_)
            if ((face & f) == face) return true;
        return false;
    }

    /// All faces, enumerated over 2^[n]; empty for the void complex.
    std::vector<Mask> all_faces() const
    {
        std::vector<Mask> out;
        if (is_void()) return out;
        for (Mask s = 0; s <= full_mask(); ++s)
            if (contains(s)) out.push_back(s);
        return out;
    }

    bool operator==(const SimplicialComplex& o) const
    {
        return n_ == o.n_ && facets_ == o.facets_;
    }

private:
    int n_;
    std::vector<Mask> facets_;
};

/// Ordered pair of disjoint faces (I in K, J in the dual copy).
struct BierFace
{
    Mask left = 0;
    Mask right = 0;

    bool operator==(const BierFace& o) const
    {
        return left == o.left && right == o.right;
    }
    bool operator<(const BierFace& o) const
    {
        auto la = mask_to_labels(left), lb = mask_to_labels(o.left);
        if (la != lb) return la < lb;
        return mask_to_labels(right) < mask_to_labels(o.right);
    }
};

/// Face counts by dimension, starting at f_{-1}.
struct FVector
{
    std::vector<long long> counts;

    bool operator==(const FVector& o) const { return counts == o.counts; }
};

/**
 * Alexander dual K° = {complement of I : I not a face of K}, on the same
 * ground set.  The dual of the full complex is the void complex, and vice
 * versa; (K°)° = K.
 */
inline SimplicialComplex alexander_dual(const SimplicialComplex& k)
{
    Mask full = k.full_mask();
    std::vector<Mask> dual_faces;
    for (Mask s = 0; s <= full; ++s)
        if (!k.contains(s)) dual_faces.push_back(full & ~s);
    return SimplicialComplex(k.ground_size(), std::move(dual_faces));
}

/**
 * Facets of the Bier sphere Bier(K) = K *_Delta K°.  A facet is a pair
 * (A, [n] \ (A + k)) where A is a face, k a vertex outside A, and A + k a
 * non-face; every facet satisfies |I| + |J| = n - 1.
 */
inline std::vector<BierFace> bier_facets(const SimplicialComplex& k)
{
    if (!k.is_proper())
        throw NotProper("bier_facets: need emptyset in K and K != 2^[n]");
    Mask full = k.full_mask();
    std::vector<BierFace> out;
    for (Mask a : k.all_faces())
        for (int v = 0; v < k.ground_size(); ++v)
        {
            Mask bit = Mask(1) << v;
            if (a & bit) continue;
            if (k.contains(a | bit)) continue;
            out.push_back({a, full & ~(a | bit)});
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// All faces of the deleted join K *_Delta L (brute-force oracle).
inline std::vector<BierFace> deleted_join_faces(const SimplicialComplex& k,
                                                const SimplicialComplex& l)
{
    if (k.ground_size() != l.ground_size())
        throw GroundMismatch("deleted_join_faces: ground sets differ");
    std::vector<BierFace> out;
    for (Mask a : k.all_faces())
        for (Mask b : l.all_faces())
            if ((a & b) == 0) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

/// Inclusion-maximal elements of a BierFace family (componentwise order).
inline std::vector<BierFace> maximal_faces(const std::vector<BierFace>& faces)
{
    std::vector<BierFace> out;
    for (const auto& f : faces)
    {
        bool dominated = false;
        for (const auto& g : faces)
            if (!(g == f) && (f.left & g.left) == f.left &&
                (f.right & g.right) == f.right)
            {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline FVector f_vector(const SimplicialComplex& k)
{
    FVector fv;
    if (k.is_void()) return fv;
    int top = -1;
    for (Mask f : k.facets())
        top = std::max(top, (int)mask_to_labels(f).size() - 1);
    fv.counts.assign(top + 2, 0);
    for (Mask s : k.all_faces())
        ++fv.counts[mask_to_labels(s).size()];
    return fv;
}

/// f-vector of the closure of a BierFace facet family.
inline FVector f_vector(const std::vector<BierFace>& facets)
{
    std::set<std::pair<Mask, Mask>> faces;
    for (const auto& f : facets)
    {
        // subsets of f.left x subsets of f.right
        Mask a = f.left;
        for (Mask s = a;; s = (s - 1) & a)
        {
            Mask b = f.right;
            for (Mask t = b;; t = (t - 1) & b)
            {
                faces.insert({s, t});
                if (t == 0) break;
            }
            if (s == 0) break;
        }
    }
    FVector fv;
    if (faces.empty()) return fv;
    int top = -1;
    for (const auto& [a, b] : faces)
        top = std::max(top, (int)(mask_to_labels(a).size() + mask_to_labels(b).size()) - 1);
    fv.counts.assign(top + 2, 0);
    for (const auto& [a, b] : faces)
        ++fv.counts[mask_to_labels(a).size() + mask_to_labels(b).size()];
    return fv;
}

/**
 * Facet families over signed labels: a Bier facet (I, J) is the label set
 * {+i : i in I} + {-j : j in J}.  Also the common currency for comparing
 * against geometrically enumerated facets.
 */
using LabelSet = std::vector<int>;            // sorted signed labels
using FacetFamily = std::set<LabelSet>;

inline LabelSet bier_face_labels(const BierFace& f)
{
    LabelSet s;
    for (int i : mask_to_labels(f.left)) s.push_back(i);
    for (int j : mask_to_labels(f.right)) s.push_back(-j);
    std::sort(s.begin(), s.end());
    return s;
}

inline FacetFamily to_family(const std::vector<BierFace>& facets)
{
    FacetFamily fam;
    for (const auto& f : facets) fam.insert(bier_face_labels(f));
    return fam;
}

/// True iff the image of family A under the label bijection equals B.
inline bool isomorphic_under(const std::map<int, int>& map,
                             const FacetFamily& a, const FacetFamily& b)
{
    std::set<int> domain, image;
    for (const auto& [from, to] : map)
    {
        domain.insert(from);
        image.insert(to);
    }
    if (image.size() != map.size())
        throw NotBijective("isomorphic_under: map is not injective");
    FacetFamily mapped;
    for (const auto& fs : a)
    {
        LabelSet out;
        for (int l : fs)
        {
            auto it = map.find(l);
            if (it == map.end())
                throw NotBijective("isomorphic_under: label not in map domain");
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        mapped.insert(std::move(out));
    }
    return mapped == b;
}

/**
 * Exhaustive backtracking search for a label bijection carrying facet
 * family A onto B.  Returns a witness or nullopt.  Refuses instances with
 * more than 14 vertices per side.
 */
inline std::optional<std::map<int, int>>
search_isomorphism(const FacetFamily& a, const FacetFamily& b)
{
    std::set<int> va, vb;
    for (const auto& f : a) va.insert(f.begin(), f.end());
    for (const auto& f : b) vb.insert(f.begin(), f.end());
    if (va.size() > 14 || vb.size() > 14)
        throw TooLarge("search_isomorphism: more than 14 vertices");
    if (va.size() != vb.size() || a.size() != b.size())
        return std::nullopt;

    std::vector<int> verts_a(va.begin(), va.end());
    std::vector<int> verts_b(vb.begin(), vb.end());
    std::map<int, int> assign;
    std::set<int> used;

    // Vertex-degree fingerprint for pruning.
    auto degree = [](const FacetFamily& fam, int v)
    {
        int d = 0;
        for (const auto& f : fam)
            if (std::find(f.begin(), f.end(), v) != f.end()) ++d;
        return d;
    };
    std::map<int, int> deg_a, deg_b;
    for (int v : verts_a) deg_a[v] = degree(a, v);
    for (int v : verts_b) deg_b[v] = degree(b, v);

    std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool
    {
        if (idx == verts_a.size())
            return isomorphic_under(assign, a, b);
        int v = verts_a[idx];
        for (int w : verts_b)
        {
            if (used.count(w) || deg_a[v] != deg_b[w]) continue;
            assign[v] = w;
            used.insert(w);
            // Prune: any fully-assigned facet must map into B.
            bool ok = true;
            for (const auto& f : a)
            {
                LabelSet img;
                bool complete = true;
                for (int l : f)
                {
                    auto it = assign.find(l);
                    if (it == assign.end()) { complete = false; break; }
                    img.push_back(it->second);
                }
                if (complete)
                {
                    std::sort(img.begin(), img.end());
                    if (!b.count(img)) { ok = false; break; }
                }
            }
            if (ok && go(idx + 1)) return true;
            assign.erase(v);
            used.erase(w);
        }
        return false;
    };
    if (go(0)) return assign;
    return std::nullopt;
}

}  // namespace bierkr

#endif  // BIERKR_SIMPLICIAL_HPP
