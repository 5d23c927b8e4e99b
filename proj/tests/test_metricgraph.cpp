#include <catch2/catch_amalgamated.hpp>

#include "bierkr/instance_gen.hpp"
#include "bierkr/metricgraph.hpp"

using namespace bierkr;

namespace {

// Facet family of a configuration with non-extreme labels removed (they can
// lie on facet hyperplanes and would otherwise pollute the label sets).
std::set<std::vector<std::string>> extreme_facet_family(const PointConfiguration& c)
{
    auto extremes = extreme_points(c);
    std::set<std::vector<std::string>> fam;
    for (const auto& f : facet_enumeration(c))
    {
        std::vector<std::string> labels;
        for (const auto& l : f.vertex_labels)
            if (extremes.count(l)) labels.push_back(l);
        fam.insert(std::move(labels));
    }
    return fam;
}

}  // namespace

TEST_CASE("weighted graph validation")
{
    CHECK_THROWS_AS(WeightedGraph(2, {{1, 1, Rational(1)}}),
                    std::invalid_argument);   // loop
    CHECK_THROWS_AS(
        WeightedGraph(2, {{1, 2, Rational(1)}, {2, 1, Rational(2)}}),
        std::invalid_argument);               // multi-edge
    CHECK_THROWS_AS(WeightedGraph(2, {{1, 2, Rational(0)}}),
                    std::invalid_argument);   // non-positive weight

    WeightedGraph path(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
    CHECK(path.connected());
    CHECK(path.is_tree());
    WeightedGraph split(3, {{1, 2, Rational(1)}});
    CHECK_FALSE(split.connected());
}

TEST_CASE("geodesic metric examples")
{
    SECTION("4-cycle with weights (1/10,2/10,3/10,4/10)")
    {
        auto g = weighted_cycle(Vec{Rational(1, 10), Rational(2, 10),
                                    Rational(3, 10), Rational(4, 10)});
        auto d = geodesic_metric(g);
        CHECK(d[0][2] == Rational(3, 10));   // arc 1-2-3 beats 1-4-3
        CHECK(d[3][0] == Rational(4, 10));
        CHECK(validate_metric(d) == std::nullopt);
    }
    SECTION("path 1-2-3 with unit weights")
    {
        WeightedGraph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
        auto d = geodesic_metric(g);
        CHECK(d[0][2] == 2);
    }
    SECTION("equal 3-cycle: all distances 1/3")
    {
        auto d = geodesic_metric(weighted_cycle(
            Vec{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(d[i][j] == (i == j ? Rational(0) : Rational(1, 3)));
    }
    SECTION("disconnected graph is rejected")
    {
        WeightedGraph g(3, {{1, 2, Rational(1)}});
        CHECK_THROWS_AS(geodesic_metric(g), Disconnected);
    }
}

TEST_CASE("metric validation catches each violation kind")
{
    auto r = [](int p, int q) { return Rational(p, q); };
    CHECK(validate_metric({{r(0, 1)}}) == std::nullopt);

    Matrix tri = {{r(0, 1), r(1, 1), r(5, 1)},
                  {r(1, 1), r(0, 1), r(1, 1)},
                  {r(5, 1), r(1, 1), r(0, 1)}};
    auto v = validate_metric(tri);
    REQUIRE(v.has_value());
    CHECK(v->kind == "triangle");
    CHECK(v->where == std::array<int, 3>{1, 2, 3});

    Matrix asym = {{r(0, 1), r(1, 1)}, {r(2, 1), r(0, 1)}};
    v = validate_metric(asym);
    REQUIRE(v.has_value());
    CHECK(v->kind == "symmetry");

    Matrix diag = {{r(1, 1)}};
    v = validate_metric(diag);
    REQUIRE(v.has_value());
    CHECK(v->kind == "diagonal");

    Matrix neg = {{r(0, 1), r(-1, 1)}, {r(-1, 1), r(0, 1)}};
    v = validate_metric(neg);
    REQUIRE(v.has_value());
    CHECK(v->kind == "positivity");
}

TEST_CASE("pair labels")
{
    CHECK(pair_label(2, 1) == "+(1,2)");
    CHECK(pair_label(1, 2) == "-(1,2)");
    CHECK(parse_pair_label("+(1,2)") == std::pair<int, int>{2, 1});
    CHECK(parse_pair_label("-(3,14)") == std::pair<int, int>{3, 14});
}

TEST_CASE("KR generators of a metric")
{
    SECTION("two points at distance 5")
    {
        Matrix d = {{Rational(0), Rational(5)}, {Rational(5), Rational(0)}};
        auto pts = kr_generators(d);
        REQUIRE(pts.size() == 2);
        for (const auto& p : pts.points)
        {
            CHECK((p == Vec{Rational(1, 5), Rational(-1, 5)} ||
                   p == Vec{Rational(-1, 5), Rational(1, 5)}));
        }
    }
    SECTION("equal 3-cycle gives the six points +-3(e_i - e_j)")
    {
        auto d = geodesic_metric(weighted_cycle(
            Vec{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
        auto pts = kr_generators(d);
        REQUIRE(pts.size() == 6);
        for (const auto& p : pts.points)
        {
            Rational sum = 0;
            int nonzero = 0;
            for (const auto& x : p)
            {
                sum += x;
                if (x != 0)
                {
                    ++nonzero;
                    CHECK((x == 3 || x == -3));
                }
            }
            CHECK(sum == 0);
            CHECK(nonzero == 2);
        }
    }
    SECTION("unit-weight path on 3 vertices includes the half generator")
    {
        WeightedGraph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
        auto pts = kr_generators(geodesic_metric(g));
        REQUIRE(pts.size() == 6);
        auto it = std::find(pts.labels.begin(), pts.labels.end(), "+(1,3)");
        REQUIRE(it != pts.labels.end());
        CHECK(pts.points[it - pts.labels.begin()] ==
              Vec{Rational(-1, 2), Rational(0), Rational(1, 2)});
    }
    SECTION("non-metric input is rejected")
    {
        Matrix bad = {{Rational(0), Rational(1), Rational(5)},
                      {Rational(1), Rational(0), Rational(1)},
                      {Rational(5), Rational(1), Rational(0)}};
        CHECK_THROWS_AS(kr_generators(bad), std::invalid_argument);
    }
}

TEST_CASE("edge generators of a graph")
{
    SECTION("equal 3-cycle: all edges geodesic")
    {
        auto gen = kr_generators_graph(weighted_cycle(
            Vec{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
        CHECK(gen.dropped.empty());
        CHECK(gen.generators.size() == 6);
    }
    SECTION("path n=3: four points whose hull equals the full hull")
    {
        WeightedGraph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
        auto gen = kr_generators_graph(g);
        CHECK(gen.dropped.empty());
        REQUIRE(gen.generators.size() == 4);
        auto all = kr_generators(geodesic_metric(g));
        CHECK(extreme_facet_family(gen.generators) == extreme_facet_family(all));
    }
    SECTION("bypassed edge is reported and dropped")
    {
        auto g = weighted_cycle(Vec{Rational(1, 10), Rational(2, 10),
                                    Rational(3, 10), Rational(9, 10)});
        auto gen = kr_generators_graph(g);
        REQUIRE(gen.dropped.size() == 1);
        CHECK(gen.dropped[0] == std::pair<int, int>{1, 4});
        CHECK(gen.generators.size() == 6);
    }
}

TEST_CASE("graph and full-metric generators have the same hull, n <= 6")
{
    Rng rng(20250101);
    for (int trial = 0; trial < 8; ++trial)
    {
        int n = 3 + (int)rand_int(rng, 0, 3);
        // Random connected graph: a random tree plus a few extra edges.
        auto g = random_tree(rng, n, 40);
        std::set<std::pair<int, int>> present;
        for (const auto& e : g.edges) present.insert({e.u, e.v});
        auto edges = g.edges;
        for (int extra = 0; extra < 2; ++extra)
        {
            int u = (int)rand_int(rng, 1, n), v = (int)rand_int(rng, 1, n);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (!present.insert({u, v}).second) continue;
            edges.push_back({u, v, Rational(rand_int(rng, 1, 40), 40)});
        }
        WeightedGraph graph(n, edges);
        auto reduced = kr_generators_graph(graph);
        auto full = kr_generators(geodesic_metric(graph));
        auto reduced_facets = facet_enumeration(reduced.generators);
        if (n <= 4)
        {
            // Small instances: compare the facet families outright, after
            // dropping non-extreme labels from both sides.
            CHECK(extreme_facet_family(reduced.generators) ==
                  extreme_facet_family(full));
        }
        else
        {
            // The reduced points are a subset of the full generator set, so
            // hull equality reduces to membership of every full generator.
            for (std::size_t i = 0; i < full.size(); ++i)
                CHECK(in_hull(reduced.generators, reduced_facets,
                              full.points[i]));
        }
    }
}

TEST_CASE("suspension structure")
{
    SECTION("unit path, suspended over one edge, gives the square")
    {
        WeightedGraph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
        auto rep = suspension_structure(g, {2, 3}, 2);
        CHECK(rep.failed_hypothesis.empty());
        CHECK(rep.pass);
        CHECK(rep.big_facets == 4);
    }
    SECTION("star on 4 vertices suspends to the 3-cross-polytope")
    {
        WeightedGraph star(4, {{1, 2, Rational(1)},
                               {1, 3, Rational(2)},
                               {1, 4, Rational(5)}});
        auto rep = suspension_structure(star, {1, 4}, 1);
        CHECK(rep.pass);
        CHECK(rep.big_facets == 8);
        CHECK(rep.small_facets == 4);
    }
    SECTION("cycle inside X violates the tree hypothesis")
    {
        auto g = weighted_cycle(Vec{Rational(1, 4), Rational(1, 4),
                                    Rational(1, 4), Rational(1, 4)});
        auto rep = suspension_structure(g, {1, 2, 3, 4}, 1);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.failed_hypothesis.empty());
    }
    SECTION("x outside X is a hypothesis failure")
    {
        WeightedGraph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
        auto rep = suspension_structure(g, {2, 3}, 1);
        CHECK_FALSE(rep.pass);
        CHECK(rep.failed_hypothesis == "x must belong to X");
    }
}

TEST_CASE("weighted trees carry cross-polytope KR polytopes")
{
    SECTION("unit path on 3 vertices: the square")
    {
        WeightedGraph g(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}});
        auto rep = tree_cross_polytope_check(g);
        CHECK(rep.pass);
        CHECK(rep.matched_facets == 4);
    }
    SECTION("star on 4 vertices with weights (1,2,5)")
    {
        WeightedGraph star(4, {{1, 2, Rational(1)},
                               {1, 3, Rational(2)},
                               {1, 4, Rational(5)}});
        auto rep = tree_cross_polytope_check(star);
        CHECK(rep.pass);
        CHECK(rep.matched_facets == 8);
    }
    SECTION("random weighted trees")
    {
        Rng rng(606060);
        for (int trial = 0; trial < 10; ++trial)
        {
            int n = 2 + (int)rand_int(rng, 0, 3);
            auto t = random_tree(rng, n, 60);
            auto rep = tree_cross_polytope_check(t);
            CHECK(rep.pass);
            CHECK(rep.matched_facets == (1LL << (n - 1)));
        }
    }
    SECTION("non-tree input throws")
    {
        auto g = weighted_cycle(Vec{Rational(1, 3), Rational(1, 3),
                                    Rational(1, 3)});
        CHECK_THROWS_AS(tree_cross_polytope_check(g), NotATree);
    }
}
