/**
 * Weight vectors, the induced measure on [n], threshold (quota) complexes,
 * short-set complexes, and exact genericity checks.
 */

#ifndef BIERKR_THRESHOLD_HPP
#define BIERKR_THRESHOLD_HPP

#include <optional>
#include <stdexcept>

#include "rational.hpp"
#include "simplicial.hpp"

namespace bierkr {

struct NotGeneric : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Strictly positive rational weights l_1, ..., l_n.
struct WeightVector
{
    Vec weights;

    explicit WeightVector(Vec w) : weights(std::move(w))
    {
        if (weights.empty())
            throw std::invalid_argument("WeightVector: empty");
        if ((int)weights.size() > kMaxGroundSize)
            throw std::invalid_argument("WeightVector: too many weights");
        for (const auto& l : weights)
            if (l <= 0)
                throw std::invalid_argument("WeightVector: weights must be positive");
    }

    int size() const { return (int)weights.size(); }

    Rational total() const
    {
        Rational s = 0;
        for (const auto& l : weights) s += l;
        return s;
    }

    bool is_normalized() const { return total() == 1; }

    /// Divide by the exact sum so the weights form a probability vector.
    WeightVector normalized() const
    {
        Rational s = total();
        Vec w = weights;
        for (auto& l : w) l /= s;
        return WeightVector(std::move(w));
    }

    /// Apply a permutation: weight i of the result is l_{sigma(i)} (1-based).
    WeightVector permuted(const std::vector<int>& sigma) const
    {
        if ((int)sigma.size() != size())
            throw std::invalid_argument("WeightVector: permutation size mismatch");
        Vec w(weights.size());
        std::vector<bool> seen(weights.size(), false);
        for (int i = 0; i < size(); ++i)
        {
            int s = sigma[i];
            if (s < 1 || s > size() || seen[s - 1])
                throw std::invalid_argument("WeightVector: not a permutation");
            seen[s - 1] = true;
            w[i] = weights[s - 1];
        }
        return WeightVector(std::move(w));
    }
};

/// Threshold quota in the open interval (0, 1).
struct Quota
{
    Rational value;

    explicit Quota(Rational v) : value(std::move(v))
    {
        if (value <= 0 || value >= 1)
            throw std::invalid_argument("Quota: must lie strictly between 0 and 1");
    }
};

/// mu_L(I), the total weight of the subset.
inline Rational measure(const WeightVector& l, Mask subset)
{
    Rational s = 0;
    for (int i = 0; i < l.size(); ++i)
        if (subset & (Mask(1) << i)) s += l.weights[i];
    return s;
}

inline void require_normalized(const WeightVector& l, const char* who)
{
    if (!l.is_normalized())
        throw std::invalid_argument(std::string(who) + ": weight vector must be normalized");
}

/// The threshold complex T_{mu_L < nu} = {I : mu_L(I) < nu}.
inline SimplicialComplex threshold_complex(const WeightVector& l, const Quota& nu)
{
    require_normalized(l, "threshold_complex");
    Mask full = (Mask(1) << l.size()) - 1;
    std::vector<Mask> faces;
    for (Mask s = 0; s <= full; ++s)
        if (measure(l, s) < nu.value) faces.push_back(s);
    return SimplicialComplex(l.size(), std::move(faces));
}

/// Short(L) = T_{mu_L < 1/2}: sets of bars shorter than half the perimeter.
inline SimplicialComplex short_sets(const WeightVector& l)
{
    return threshold_complex(l, Quota(Rational(1, 2)));
}

struct GenericityReport
{
    bool generic = false;
    std::optional<Mask> violating_subset;   // least violator in subset order
};

/**
 * Exact genericity check: no subset's measure equals the quota.  Subsets are
 * scanned in increasing bitmask order, so the reported violator is the least
 * one in that order.
 */
inline GenericityReport is_generic(const WeightVector& l, const Quota& nu)
{
    require_normalized(l, "is_generic");
    Mask full = (Mask(1) << l.size()) - 1;
    for (Mask s = 0; s <= full; ++s)
        if (measure(l, s) == nu.value)
            return {false, s};
    return {true, std::nullopt};
}

/**
 * Genericity-restoring perturbation: replace nu by nu - eps with eps half the
 * minimum positive gap |mu_L(I) - nu|, which leaves T_{mu < nu} unchanged
 * and makes the pair generic.
 */
inline Quota quota_nudge(const WeightVector& l, const Quota& nu)
{
    require_normalized(l, "quota_nudge");
    Mask full = (Mask(1) << l.size()) - 1;
    std::optional<Rational> gap;
    for (Mask s = 0; s <= full; ++s)
    {
        Rational g = measure(l, s) - nu.value;
        if (g < 0) g = -g;
        if (g > 0 && (!gap || g < *gap)) gap = g;
    }
    return Quota(nu.value - *gap / 2);
}

/**
 * Built-in self-test of the quota duality: for generic (L, nu),
 * the Alexander dual of T_{mu < nu} is T_{mu < 1 - nu}.
 */
inline bool dual_quota_identity_check(const WeightVector& l, const Quota& nu)
{
    auto rep = is_generic(l, nu);
    if (!rep.generic)
        throw NotGeneric("dual_quota_identity_check: mu_L(I) = nu for some I");
    SimplicialComplex lhs = alexander_dual(threshold_complex(l, nu));
    SimplicialComplex rhs = threshold_complex(l, Quota(1 - nu.value));
    return lhs == rhs;
}

}  // namespace bierkr

#endif  // BIERKR_THRESHOLD_HPP
