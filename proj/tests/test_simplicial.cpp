#include <catch2/catch_amalgamated.hpp>

#include "bierkr/instance_gen.hpp"
#include "bierkr/simplicial.hpp"

using namespace bierkr;

namespace {

SimplicialComplex complex_of(int n, std::initializer_list<std::vector<int>> facets)
{
    std::vector<Mask> masks;
    for (const auto& f : facets) masks.push_back(labels_to_mask(f, n));
    return SimplicialComplex(n, std::move(masks));
}

/// Boundary of the (n-1)-simplex: all (n-1)-subsets of [n].
SimplicialComplex simplex_boundary(int n)
{
    Mask full = (Mask(1) << n) - 1;
    std::vector<Mask> facets;
    for (int i = 0; i < n; ++i) facets.push_back(full & ~(Mask(1) << i));
    return SimplicialComplex(n, std::move(facets));
}

}  // namespace

TEST_CASE("mask/label conversion")
{
    CHECK(mask_to_labels(0b101) == std::vector<int>{1, 3});
    CHECK(labels_to_mask({1, 3}, 3) == 0b101);
    CHECK_THROWS_AS(labels_to_mask({4}, 3), std::invalid_argument);
}

TEST_CASE("complex representation distinguishes void and {emptyset}")
{
    SimplicialComplex voidc(3, {});
    SimplicialComplex empty = complex_of(3, {{}});
    CHECK(voidc.is_void());
    CHECK_FALSE(empty.is_void());
    CHECK(empty.is_proper());
    CHECK_FALSE(voidc.is_proper());
    CHECK(empty.all_faces() == std::vector<Mask>{0});
    CHECK(voidc.all_faces().empty());

    // Dominated facets are pruned on construction.
    SimplicialComplex k(3, {0b001, 0b011, 0b011});
    CHECK(k.facets() == std::vector<Mask>{0b011});
    CHECK_THROWS_AS(SimplicialComplex(2, {0b100}), std::invalid_argument);
}

TEST_CASE("Alexander dual examples")
{
    SECTION("singletons on [3] are self-dual")
    {
        auto k = complex_of(3, {{1}, {2}, {3}});
        CHECK(alexander_dual(k) == k);
    }
    SECTION("n=2, K = {emptyset, {1}} is self-dual")
    {
        auto k = complex_of(2, {{1}});
        CHECK(alexander_dual(k) == k);
    }
    SECTION("boundary of the simplex dualizes to {emptyset}")
    {
        for (int n = 2; n <= 5; ++n)
            CHECK(alexander_dual(simplex_boundary(n)) ==
                  SimplicialComplex(n, {0}));
    }
    SECTION("full complex dualizes to the void complex and back")
    {
        SimplicialComplex full(3, {0b111});
        CHECK(alexander_dual(full).is_void());
        CHECK(alexander_dual(alexander_dual(full)) == full);
    }
}

TEST_CASE("dual involution (K degree-two) on all proper complexes, n <= 4")
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& k : all_proper_complexes(n))
            CHECK(alexander_dual(alexander_dual(k)) == k);
}

TEST_CASE("dual involution on random complexes, n = 5, 6")
{
    Rng rng(424242);
    for (int trial = 0; trial < 60; ++trial)
    {
        int n = 5 + (int)rand_int(rng, 0, 1);
        auto k = random_proper_complex(rng, n);
        CHECK(alexander_dual(alexander_dual(k)) == k);
    }
}

TEST_CASE("Bier facets of small complexes")
{
    SECTION("smallest Bier sphere is S^0")
    {
        auto k = complex_of(2, {{1}});
        auto facets = bier_facets(k);
        REQUIRE(facets.size() == 2);
        CHECK(to_family(facets) == FacetFamily{{-1}, {1}});
    }
    SECTION("singletons on [3] give the hexagon")
    {
        auto k = complex_of(3, {{1}, {2}, {3}});
        auto facets = bier_facets(k);
        REQUIRE(facets.size() == 6);
        FacetFamily expected;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j) expected.insert({-j, i});
        CHECK(to_family(facets) == expected);
    }
    SECTION("improper complexes are rejected")
    {
        CHECK_THROWS_AS(bier_facets(SimplicialComplex(3, {})), NotProper);
        CHECK_THROWS_AS(bier_facets(SimplicialComplex(3, {0b111})), NotProper);
    }
}

TEST_CASE("deleted join examples")
{
    SECTION("{emptyset} joined with itself")
    {
        SimplicialComplex e(2, {0});
        auto faces = deleted_join_faces(e, e);
        REQUIRE(faces.size() == 1);
        CHECK(faces[0] == BierFace{0, 0});
    }
    SECTION("K and its dual on n=2")
    {
        auto k = complex_of(2, {{1}});
        auto faces = deleted_join_faces(k, alexander_dual(k));
        CHECK(faces.size() == 3);
    }
    SECTION("seven pairs for the two-point complex joined with itself")
    {
        auto k = complex_of(2, {{1}, {2}});
        CHECK(deleted_join_faces(k, k).size() == 7);
    }
    SECTION("ground mismatch")
    {
        CHECK_THROWS_AS(
            deleted_join_faces(complex_of(2, {{1}}), complex_of(3, {{1}})),
            GroundMismatch);
    }
}

TEST_CASE("Bier facets match the brute-force deleted-join oracle, n <= 4")
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& k : all_proper_complexes(n))
        {
            auto fast = bier_facets(k);
            auto oracle =
                maximal_faces(deleted_join_faces(k, alexander_dual(k)));
            CHECK(fast == oracle);
        }
}

TEST_CASE("Bier sphere structural invariants on random complexes")
{
    Rng rng(777001);
    for (int trial = 0; trial < 40; ++trial)
    {
        int n = 3 + (int)rand_int(rng, 0, 3);
        auto k = random_proper_complex(rng, n);
        auto facets = bier_facets(k);

        // Purity: |I| + |J| = n - 1 on every facet.
        for (const auto& f : facets)
            CHECK((int)(mask_to_labels(f.left).size() +
                        mask_to_labels(f.right).size()) == n - 1);

        // Euler relation of a triangulated (n-2)-sphere.
        auto fv = f_vector(facets);
        long long euler = 0;
        for (std::size_t i = 1; i < fv.counts.size(); ++i)
            euler += (i % 2 ? 1 : -1) * fv.counts[i];
        CHECK(euler == 1 + ((n - 2) % 2 == 0 ? 1 : -1));

        // Swap symmetry: Bier(K dual) is the transpose family.
        auto dual_facets = bier_facets(alexander_dual(k));
        std::set<std::pair<Mask, Mask>> swapped, direct;
        for (const auto& f : facets) swapped.insert({f.right, f.left});
        for (const auto& f : dual_facets) direct.insert({f.left, f.right});
        CHECK(swapped == direct);

        // Vertex count: singletons of K plus complements of non-facets.
        auto fv_counts = f_vector(facets);
        long long vertices = fv_counts.counts.size() > 1 ? fv_counts.counts[1] : 0;
        long long expected = 0;
        Mask full = k.full_mask();
        for (int i = 0; i < n; ++i)
        {
            if (k.contains(Mask(1) << i)) ++expected;
            if (!k.contains(full & ~(Mask(1) << i))) ++expected;
        }
        CHECK(vertices == expected);
    }
}

TEST_CASE("f-vector examples")
{
    SECTION("hexagon Bier sphere")
    {
        auto k = complex_of(3, {{1}, {2}, {3}});
        CHECK(f_vector(bier_facets(k)).counts ==
              std::vector<long long>{1, 6, 6});
    }
    SECTION("S^0")
    {
        auto k = complex_of(2, {{1}});
        CHECK(f_vector(bier_facets(k)).counts == std::vector<long long>{1, 2});
    }
    SECTION("square complex")
    {
        auto square = complex_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
        CHECK(f_vector(square).counts == std::vector<long long>{1, 4, 4});
    }
    SECTION("complex overload agrees with the facet-family overload")
    {
        auto k = complex_of(4, {{1, 2}, {3}});
        CHECK(f_vector(k).counts == std::vector<long long>{1, 3, 1});
    }
}

TEST_CASE("facet-family isomorphism")
{
    auto hexagon = to_family(bier_facets(complex_of(3, {{1}, {2}, {3}})));
    auto s0 = to_family(bier_facets(complex_of(2, {{1}})));

    SECTION("identity map")
    {
        std::map<int, int> id;
        for (int i = 1; i <= 3; ++i)
        {
            id[i] = i;
            id[-i] = -i;
        }
        CHECK(isomorphic_under(id, hexagon, hexagon));
    }
    SECTION("rotation by the 3-cycle on both copies")
    {
        std::map<int, int> rot;
        for (int i = 1; i <= 3; ++i)
        {
            int j = i % 3 + 1;
            rot[i] = j;
            rot[-i] = -j;
        }
        CHECK(isomorphic_under(rot, hexagon, hexagon));
    }
    SECTION("non-injective map is rejected")
    {
        std::map<int, int> bad;
        for (int i = 1; i <= 3; ++i)
        {
            bad[i] = 1;
            bad[-i] = -i;
        }
        CHECK_THROWS_AS(isomorphic_under(bad, hexagon, hexagon), NotBijective);
    }
    SECTION("search finds a witness for permuted labels")
    {
        std::map<int, int> perm;
        perm[1] = 2; perm[2] = 3; perm[3] = 1;
        perm[-1] = -2; perm[-2] = -3; perm[-3] = -1;
        FacetFamily permuted;
        for (const auto& f : hexagon)
        {
            LabelSet img;
            for (int l : f) img.push_back(perm[l]);
            std::sort(img.begin(), img.end());
            permuted.insert(img);
        }
        auto witness = search_isomorphism(hexagon, permuted);
        REQUIRE(witness.has_value());
        CHECK(isomorphic_under(*witness, hexagon, permuted));
    }
    SECTION("search distinguishes hexagon from S^0 and from the square")
    {
        CHECK_FALSE(search_isomorphism(hexagon, s0).has_value());
        auto square = to_family(bier_facets(complex_of(2, {{1}, {2}})));
        CHECK_FALSE(search_isomorphism(hexagon, square).has_value());
    }
    SECTION("self-search returns an automorphism")
    {
        auto witness = search_isomorphism(hexagon, hexagon);
        REQUIRE(witness.has_value());
        CHECK(isomorphic_under(*witness, hexagon, hexagon));
    }
}
