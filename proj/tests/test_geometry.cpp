#include <catch2/catch_amalgamated.hpp>

#include "bierkr/geometry.hpp"
#include "bierkr/instance_gen.hpp"

using namespace bierkr;

namespace {

PointConfiguration make_config(const std::vector<std::pair<std::string, Vec>>& pts)
{
    PointConfiguration c;
    for (const auto& [l, p] : pts) c.add(l, p);
    return c;
}

Vec v(std::initializer_list<int> coords)
{
    Vec out;
    for (int c : coords) out.push_back(Rational(c));
    return out;
}

}  // namespace

TEST_CASE("affine dimension of small configurations")
{
    CHECK(affine_dimension(make_config({{"a", v({0, 0})}})) == 0);
    CHECK(affine_dimension(make_config(
              {{"a", v({0, 0})}, {"b", v({1, 0})}, {"c", v({0, 1})}})) == 2);

    // +-3(e_{i+1} - e_i) in R^3 spans the zero-sum plane only.
    PointConfiguration hex;
    int n = 3;
    for (int i = 0; i < n; ++i)
    {
        Vec p(n, Rational(0));
        p[(i + 1) % n] = 3;
        p[i] = -3;
        hex.add("+" + std::to_string(i), p);
        hex.add("-" + std::to_string(i), -p);
    }
    CHECK(affine_dimension(hex) == 2);

    SECTION("facet enumeration inside the affine hull")
    {
        auto facets = facet_enumeration(hex);
        CHECK(facets.size() == 6);
        for (const auto& f : facets)
        {
            CHECK(f.vertex_labels.size() == 2);
            CHECK(facet_valid(hex, f));
        }
    }
}

TEST_CASE("facet enumeration of the square cross-polytope")
{
    auto sq = make_config({{"a", v({1, 0})},
                           {"b", v({-1, 0})},
                           {"c", v({0, 1})},
                           {"d", v({0, -1})}});
    auto facets = facet_enumeration(sq);
    REQUIRE(facets.size() == 4);
    for (const auto& f : facets)
    {
        CHECK(f.vertex_labels.size() == 2);
        CHECK(facet_valid(sq, f));
    }
}

TEST_CASE("facet enumeration of the delta-basis hexagon")
{
    auto hex = make_config({{"d1", v({1, 0})},
                            {"d2", v({0, 1})},
                            {"d3", v({-1, -1})},
                            {"-d1", v({-1, 0})},
                            {"-d2", v({0, -1})},
                            {"-d3", v({1, 1})}});
    auto facets = facet_enumeration(hex);
    REQUIRE(facets.size() == 6);
    for (const auto& f : facets)
    {
        CHECK(f.vertex_labels.size() == 2);
        CHECK(facet_valid(hex, f));
    }
}

TEST_CASE("facet enumeration rejects degenerate input")
{
    auto same = make_config({{"a", v({2, 2})}, {"b", v({2, 2})}});
    CHECK_THROWS_AS(facet_enumeration(same), DegenerateInput);
}

TEST_CASE("extreme points")
{
    SECTION("midpoint of a segment is redundant")
    {
        auto c = make_config(
            {{"a", v({0, 0})}, {"b", v({1, 0})}, {"c", v({2, 0})}});
        auto ex = extreme_points(c);
        CHECK(ex == std::set<std::string>{"a", "c"});
    }
    SECTION("path-graph KR generators collapse to four vertices")
    {
        // n = 3 path with weights (1, 1): the long generators
        // +-(e_3 - e_1)/2 lie on the segment between the short ones.
        PointConfiguration c;
        c.add("+12", Vec{Rational(-1), Rational(1), Rational(0)});
        c.add("-12", Vec{Rational(1), Rational(-1), Rational(0)});
        c.add("+23", Vec{Rational(0), Rational(-1), Rational(1)});
        c.add("-23", Vec{Rational(0), Rational(1), Rational(-1)});
        c.add("+13", Vec{Rational(-1, 2), Rational(0), Rational(1, 2)});
        c.add("-13", Vec{Rational(1, 2), Rational(0), Rational(-1, 2)});
        auto ex = extreme_points(c);
        CHECK(ex == std::set<std::string>{"+12", "-12", "+23", "-23"});
    }
    SECTION("affinely independent points are all extreme")
    {
        auto c = make_config({{"a", v({0, 0, 0})},
                              {"b", v({1, 0, 0})},
                              {"c", v({0, 1, 0})},
                              {"d", v({0, 0, 1})}});
        CHECK(extreme_points(c).size() == 4);
    }
}

TEST_CASE("facet/vertex agreement and central symmetry on random configurations")
{
    Rng rng(20240817);
    for (int trial = 0; trial < 12; ++trial)
    {
        int dim = 2 + (int)rand_int(rng, 0, 1);
        int m = dim + 2 + (int)rand_int(rng, 0, 2);
        PointConfiguration c;
        for (int i = 0; i < m; ++i)
        {
            Vec p(dim);
            for (int d = 0; d < dim; ++d)
                p[d] = Rational(rand_int(rng, -9, 9), rand_int(rng, 1, 4));
            c.add("p" + std::to_string(i), p);
            c.add("m" + std::to_string(i), -p);
        }
        if (affine_dimension(c) < 1) continue;
        auto facets = facet_enumeration(c);
        for (const auto& f : facets)
            CHECK(facet_valid(c, f));

        // Central symmetry: negating every point maps the facet family to
        // itself under the label swap p<->m.
        std::set<std::vector<std::string>> fam, swapped;
        for (const auto& f : facets)
        {
            fam.insert(f.vertex_labels);
            std::vector<std::string> sw;
            for (auto l : f.vertex_labels)
            {
                l[0] = (l[0] == 'p') ? 'm' : 'p';
                sw.push_back(l);
            }
            std::sort(sw.begin(), sw.end());
            swapped.insert(sw);
        }
        CHECK(fam == swapped);

        // Extreme points vs facet incidence (general-position inputs only:
        // skip when some point is non-extreme but on a facet hyperplane).
        auto ex = extreme_points(c);
        std::set<std::string> on_facet;
        for (const auto& f : facets)
            on_facet.insert(f.vertex_labels.begin(), f.vertex_labels.end());
        bool degenerate = false;
        for (const auto& l : on_facet)
            if (!ex.count(l)) degenerate = true;
        if (!degenerate)
            CHECK(ex == on_facet);
    }
}

TEST_CASE("cone simplex volumes in a declared basis")
{
    Matrix basis = {v({1, 0}), v({0, 1})};
    CHECK(cone_simplex_volume(make_config({{"a", v({1, 0})}, {"b", v({0, 1})}}),
                              basis) == Rational(1, 2));
    CHECK(cone_simplex_volume(make_config({{"a", v({1, 0})}, {"b", v({1, 1})}}),
                              basis) == Rational(1, 2));

    Matrix basis3 = {v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1})};
    CHECK(cone_simplex_volume(
              make_config({{"a", v({1, 0, 0})}, {"b", v({0, 1, 0})},
                           {"c", v({0, 0, 1})}}),
              basis3) == Rational(1, 6));

    CHECK_THROWS_AS(cone_simplex_volume(make_config({{"a", v({1, 0})}}), basis),
                    DimensionMismatch);
}

TEST_CASE("hull membership")
{
    auto sq = make_config({{"a", v({1, 0})},
                           {"b", v({-1, 0})},
                           {"c", v({0, 1})},
                           {"d", v({0, -1})}});
    auto facets = facet_enumeration(sq);
    CHECK(in_hull(sq, facets, Vec{Rational(1, 4), Rational(1, 4)}));
    CHECK(in_hull(sq, facets, Vec{Rational(1, 2), Rational(1, 2)}));   // boundary
    CHECK_FALSE(in_hull(sq, facets, Vec{Rational(3, 4), Rational(1, 2)}));
}
