/**
 * JSON (de)serialization for the documented schemas.  Key order is fixed by
 * construction (ordered_json), so identical inputs yield identical bytes.
 */

#ifndef BIERKR_JSON_IO_HPP
#define BIERKR_JSON_IO_HPP

#include <json.hpp>

#include "metricgraph.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "simplicial.hpp"
#include "threshold.hpp"

namespace bierkr {

using Json = nlohmann::ordered_json;

inline Json complex_to_json(const SimplicialComplex& k)
{
    Json j;
    j["n"] = k.ground_size();
    j["facets"] = Json::array();
    for (Mask f : k.facets())
        j["facets"].push_back(mask_to_labels(f));
    return j;
}

inline SimplicialComplex complex_from_json(const Json& j)
{
    int n = j.at("n").get<int>();
    std::vector<Mask> facets;
    for (const auto& f : j.at("facets"))
        facets.push_back(labels_to_mask(f.get<std::vector<int>>(), n));
    return SimplicialComplex(n, std::move(facets));
}

inline Json bier_faces_to_json(const std::vector<BierFace>& faces)
{
    Json j;
    j["facets"] = Json::array();
    for (const auto& f : faces)
    {
        Json e;
        e["left"] = mask_to_labels(f.left);
        e["right"] = mask_to_labels(f.right);
        j["facets"].push_back(std::move(e));
    }
    // Flat form: right-copy labels as negative integers.
    j["flat"] = Json::array();
    for (const auto& f : faces)
        j["flat"].push_back(bier_face_labels(f));
    return j;
}

inline std::vector<BierFace> bier_faces_from_json(const Json& j, int n)
{
    std::vector<BierFace> out;
    for (const auto& e : j.at("facets"))
        out.push_back({labels_to_mask(e.at("left").get<std::vector<int>>(), n),
                       labels_to_mask(e.at("right").get<std::vector<int>>(), n)});
    return out;
}

inline Json weights_to_json(const WeightVector& l)
{
    Json j;
    j["weights"] = Json::array();
    for (const auto& w : l.weights)
        j["weights"].push_back(to_string(w));
    return j;
}

inline WeightVector weights_from_json(const Json& j)
{
    Vec w;
    for (const auto& s : j.at("weights"))
        w.push_back(parse_rational(s.get<std::string>()));
    return WeightVector(std::move(w));
}

inline Json graph_to_json(const WeightedGraph& g)
{
    Json j;
    j["n"] = g.n;
    j["edges"] = Json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back(Json::array({e.u, e.v, to_string(e.w)}));
    return j;
}

inline WeightedGraph graph_from_json(const Json& j)
{
    int n = j.at("n").get<int>();
    std::vector<WeightedGraph::Edge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(),
                         parse_rational(e.at(2).get<std::string>())});
    return WeightedGraph(n, std::move(edges));
}

inline Json metric_to_json(const Matrix& m)
{
    Json j = Json::array();
    for (const auto& row : m)
    {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        j.push_back(std::move(r));
    }
    return j;
}

inline Matrix metric_from_json(const Json& j)
{
    Matrix m;
    for (const auto& row : j)
    {
        Vec r;
        for (const auto& x : row) r.push_back(parse_rational(x.get<std::string>()));
        m.push_back(std::move(r));
    }
    return m;
}

inline Json report_to_json(const VerificationReport& r)
{
    Json j;
    j["theorem"] = r.theorem;
    j["instance"] = r.instance;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["matched_facets"] = r.matched_facets;
    j["certificate"] = r.pass ? Json(nullptr) : Json(r.certificate);
    return j;
}

}  // namespace bierkr

#endif  // BIERKR_JSON_IO_HPP
