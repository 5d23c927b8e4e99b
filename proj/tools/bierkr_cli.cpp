/**
 * Command-line front end: constructions (duals, Bier facets, threshold
 * complexes, metrics, KR polytopes) and theorem verifiers, with JSON or
 * aligned-text reports.
 *
 * Exit codes: 0 success / verification pass, 1 verification failure,
 * 2 malformed input.
 */

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "bierkr/bierkr.hpp"

namespace {

using namespace bierkr;

int max_ground_size()
{
    if (const char* env = std::getenv("BIERKR_MAX_N"))
    {
        int v = std::atoi(env);
        if (v >= 2 && v <= kMaxGroundSize) return v;
    }
    return 8;
}

void check_size(int n)
{
    if (n > max_ground_size())
        throw std::invalid_argument("instance size " + std::to_string(n) +
                                    " exceeds BIERKR_MAX_N (" +
                                    std::to_string(max_ground_size()) + ")");
}

WeightVector parse_weights(const std::string& csv, bool normalize)
{
    std::vector<std::string> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.empty())
        throw std::invalid_argument("weights: empty list");
    WeightVector l(parse_vector(parts));
    check_size(l.size());
    if (normalize && !l.is_normalized()) return l.normalized();
    return l;
}

SimplicialComplex parse_complex(int n, const std::string& facets_json)
{
    check_size(n);
    Json j;
    j["n"] = n;
    j["facets"] = Json::parse(facets_json);
    return complex_from_json(j);
}

WeightedGraph parse_graph(const std::string& inline_json)
{
    auto g = graph_from_json(Json::parse(inline_json));
    check_size(g.n);
    return g;
}

std::vector<int> parse_sigma(const std::string& csv)
{
    std::vector<int> sigma;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) sigma.push_back(std::stoi(item));
    return sigma;
}

void emit_report(const VerificationReport& rep, bool as_json)
{
    if (as_json)
    {
        std::cout << report_to_json(rep).dump(2) << "\n";
    }
    else
    {
        std::cout << "theorem        : " << rep.theorem << "\n"
                  << "instance       : " << rep.instance << "\n"
                  << "verdict        : " << (rep.pass ? "pass" : "fail") << "\n"
                  << "matched facets : " << rep.matched_facets << "\n";
        if (!rep.pass)
            std::cout << "certificate    : " << rep.certificate << "\n";
    }
}

void emit(const Json& j, bool as_json)
{
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump(2) << "\n";   // text mode shows the same JSON
}

Json config_to_json(const PointConfiguration& pts)
{
    Json j;
    j["points"] = Json::array();
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        Json p;
        p["label"] = pts.labels[i];
        Json coords = Json::array();
        for (const auto& x : pts.points[i]) coords.push_back(to_string(x));
        p["coords"] = std::move(coords);
        j["points"].push_back(std::move(p));
    }
    return j;
}

Json facets_to_json(const std::vector<FacetDescription>& facets)
{
    Json j = Json::array();
    for (const auto& f : facets)
    {
        Json e;
        e["vertices"] = f.vertex_labels;
        Json normal = Json::array();
        for (const auto& x : f.hyperplane.normal) normal.push_back(to_string(x));
        e["normal"] = std::move(normal);
        e["offset"] = to_string(f.hyperplane.offset);
        j.push_back(std::move(e));
    }
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bier spheres, threshold complexes, and KR polytopes "
                 "with exact rational arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    int n = 0;
    std::string facets_json, weights_csv, quota_str, alpha_str = "1";
    std::string graph_json, sigma_csv, theorem;
    unsigned long long seed = 0;
    int count = 10;
    bool use_bier = false;

    auto* dual = app.add_subcommand("dual", "Alexander dual of a complex");
    dual->add_option("--n", n)->required();
    dual->add_option("--facets", facets_json)->required();

    auto* bier = app.add_subcommand("bier", "facets of the Bier sphere");
    bier->add_option("--n", n)->required();
    bier->add_option("--facets", facets_json)->required();

    auto* fvec = app.add_subcommand("fvector", "f-vector of a complex");
    fvec->add_option("--n", n)->required();
    fvec->add_option("--facets", facets_json)->required();
    fvec->add_flag("--bier", use_bier, "f-vector of Bier(K) instead of K");

    auto* thresh = app.add_subcommand("threshold", "threshold complex T_{mu<nu}");
    thresh->add_option("--weights", weights_csv)->required();
    thresh->add_option("--quota", quota_str)->required();

    auto* shortc = app.add_subcommand("short", "complex of short sets (nu = 1/2)");
    shortc->add_option("--weights", weights_csv)->required();

    auto* generic = app.add_subcommand("generic", "exact genericity check");
    generic->add_option("--weights", weights_csv)->required();
    generic->add_option("--quota", quota_str)->required();

    auto* metric = app.add_subcommand("metric", "geodesic metric of a weighted graph");
    metric->add_option("--graph", graph_json)->required();

    auto* kr = app.add_subcommand("kr", "KR polytope of a weighted graph");
    kr->add_option("--graph", graph_json)->required();

    auto* vkb = app.add_subcommand("verify-kr-bier",
                                   "check boundary KR(d_L) = Bier(Short(L))");
    vkb->add_option("--weights", weights_csv)->required();

    auto* vqa = app.add_subcommand("verify-qalpha",
                                   "check Q_alpha realizes the threshold Bier sphere");
    vqa->add_option("--weights", weights_csv)->required();
    vqa->add_option("--alpha", alpha_str);

    auto* fan = app.add_subcommand("fan-check", "complete-fan certificate of Bier(K)");
    fan->add_option("--n", n)->required();
    fan->add_option("--facets", facets_json)->required();

    auto* star = app.add_subcommand("star-volume",
                                    "volume of the canonical star body");
    star->add_option("--n", n)->required();
    star->add_option("--facets", facets_json)->required();

    auto* tree = app.add_subcommand("tree-check",
                                    "cross-polytope check for weighted trees");
    tree->add_option("--graph", graph_json)->required();

    auto* perm = app.add_subcommand("perm-check", "permutation equivalence of KR(d_L)");
    perm->add_option("--weights", weights_csv)->required();
    perm->add_option("--sigma", sigma_csv)->required();

    auto* batch = app.add_subcommand("batch", "seeded randomized property campaign");
    batch->add_option("--theorem", theorem,
                      "kr-bier | qalpha | tree | fan | perm | dual-quota")->required();
    batch->add_option("--n", n)->required();
    batch->add_option("--count", count);
    batch->add_option("--seed", seed)->required();
    batch->add_option("--alpha", alpha_str);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        if (*dual)
        {
            auto k = parse_complex(n, facets_json);
            if (k.is_full())
                std::cerr << "warning: input is the full complex; "
                             "its dual is the void complex\n";
            emit(complex_to_json(alexander_dual(k)), as_json);
        }
        else if (*bier)
        {
            auto k = parse_complex(n, facets_json);
            emit(bier_faces_to_json(bier_facets(k)), as_json);
        }
        else if (*fvec)
        {
            auto k = parse_complex(n, facets_json);
            FVector fv = use_bier ? f_vector(bier_facets(k)) : f_vector(k);
            Json j;
            j["f_vector"] = fv.counts;
            emit(j, as_json);
        }
        else if (*thresh)
        {
            auto l = parse_weights(weights_csv, true);
            Quota q(parse_rational(quota_str));
            auto k = threshold_complex(l, q);
            bool has_vertex = false;
            for (Mask f : k.facets())
                if (f) has_vertex = true;
            if (!has_vertex)
                std::cerr << "warning: no single weight is below the quota; "
                             "the complex is {emptyset}\n";
            emit(complex_to_json(k), as_json);
        }
        else if (*shortc)
        {
            auto l = parse_weights(weights_csv, true);
            emit(complex_to_json(short_sets(l)), as_json);
        }
        else if (*generic)
        {
            auto l = parse_weights(weights_csv, true);
            auto rep = is_generic(l, Quota(parse_rational(quota_str)));
            Json j;
            j["generic"] = rep.generic;
            j["violation"] = rep.generic
                                 ? Json(nullptr)
                                 : Json(mask_to_labels(*rep.violating_subset));
            emit(j, as_json);
            return rep.generic ? 0 : 1;
        }
        else if (*metric)
        {
            auto g = parse_graph(graph_json);
            emit(metric_to_json(geodesic_metric(g)), as_json);
        }
        else if (*kr)
        {
            auto g = parse_graph(graph_json);
            auto gen = kr_generators_graph(g);
            Json j = config_to_json(gen.generators);
            j["dropped_edges"] = Json::array();
            for (auto [u, v] : gen.dropped)
                j["dropped_edges"].push_back(Json::array({u, v}));
            j["facets"] = facets_to_json(facet_enumeration(gen.generators));
            emit(j, as_json);
        }
        else if (*vkb)
        {
            auto l = parse_weights(weights_csv, true);
            auto rep = verify_kr_bier(l);
            emit_report(rep, as_json);
            return rep.pass ? 0 : 1;
        }
        else if (*vqa)
        {
            auto l = parse_weights(weights_csv, true);
            auto rep = verify_q_alpha(l, parse_rational(alpha_str));
            emit_report(rep, as_json);
            return rep.pass ? 0 : 1;
        }
        else if (*fan)
        {
            auto k = parse_complex(n, facets_json);
            auto rep = fan_check(k);
            emit_report(rep, as_json);
            return rep.pass ? 0 : 1;
        }
        else if (*star)
        {
            auto k = parse_complex(n, facets_json);
            Json j;
            j["star_volume"] = to_string(star_volume(k));
            emit(j, as_json);
        }
        else if (*tree)
        {
            auto g = parse_graph(graph_json);
            auto rep = tree_cross_polytope_check(g);
            emit_report(rep, as_json);
            return rep.pass ? 0 : 1;
        }
        else if (*perm)
        {
            auto l = parse_weights(weights_csv, true);
            auto rep = perm_equivalence(l, parse_sigma(sigma_csv));
            emit_report(rep, as_json);
            return rep.pass ? 0 : 1;
        }
        else if (*batch)
        {
            check_size(n);
            Rng rng(seed);
            Rational alpha = parse_rational(alpha_str);
            int failures = 0;
            for (int i = 0; i < count; ++i)
            {
                VerificationReport rep;
                if (theorem == "kr-bier")
                {
                    auto l = random_generic_weights(rng, n, {Rational(1, 2)}, true);
                    rep = verify_kr_bier(l);
                }
                else if (theorem == "qalpha")
                {
                    Rational nu = 1 / (1 + alpha);
                    auto l = random_generic_weights(rng, n, {nu, 1 - nu}, false);
                    rep = verify_q_alpha(l, alpha);
                }
                else if (theorem == "tree")
                {
                    rep = tree_cross_polytope_check(random_tree(rng, n));
                }
                else if (theorem == "fan")
                {
                    rep = fan_check(random_proper_complex(rng, n));
                }
                else if (theorem == "perm")
                {
                    auto l = random_generic_weights(rng, n, {Rational(1, 2)}, true);
                    rep = perm_equivalence(l, random_permutation(rng, n));
                }
                else if (theorem == "dual-quota")
                {
                    auto l = random_generic_weights(rng, n, {Rational(1, 2)}, false);
                    rep.theorem = "dual-quota-identity";
                    rep.instance = "seeded instance " + std::to_string(i);
                    rep.pass = dual_quota_identity_check(l, Quota(Rational(1, 2)));
                }
                else
                {
                    throw std::invalid_argument("batch: unknown theorem '" + theorem + "'");
                }
                Json line = report_to_json(rep);
                line["index"] = i;
                std::cout << line.dump() << "\n";
                if (!rep.pass) ++failures;
            }
            return failures ? 1 : 0;
        }
    }
    catch (const CLI::ParseError& e)
    {
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
