// JSON encodings of the domain types. Objects serialize with sorted keys so
// command output is byte-stable across runs.
#pragma once

#include <string>

#include <json.hpp>

#include "trigon/bounds.hpp"
#include "trigon/errors.hpp"
#include "trigon/geometry.hpp"
#include "trigon/hypergraph.hpp"
#include "trigon/lagrangian.hpp"
#include "trigon/realizability.hpp"
#include "trigon/turan.hpp"

namespace trigon {

using json = nlohmann::json;

inline json to_json(const PointConfig& p) {
    json pts = json::array();
    for (const auto& v : p.points) pts.push_back({v.x, v.y});
    return json{{"points", pts}};
}

inline PointConfig point_config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw MalformedInput("expected {\"points\": [[x, y], ...]}");
    PointConfig p;
    for (const auto& entry : j["points"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw MalformedInput("each point must be a [x, y] number pair");
        p.points.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    return p;
}

inline json to_json(const Triangle& t) {
    return json{{"sides", {t.a(), t.b(), t.c()}}};
}

inline Triangle triangle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("sides") || !j["sides"].is_array() || j["sides"].size() != 3)
        throw MalformedInput("expected {\"sides\": [a, b, c]}");
    for (const auto& s : j["sides"])
        if (!s.is_number()) throw MalformedInput("sides must be numbers");
    try {
        return Triangle(j["sides"][0].get<double>(), j["sides"][1].get<double>(),
                        j["sides"][2].get<double>());
    } catch (const DegenerateTriangle& e) {
        throw MalformedInput(std::string("invalid triangle: ") + e.what());
    }
}

// Vertices are 0-indexed internally; JSON uses the customary 1-indexed labels.
inline json to_json(const ThreeGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e[0] + 1, e[1] + 1, e[2] + 1});
    return json{{"edges", edges}, {"n", g.vertex_count()}};
}

inline ThreeGraph three_graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        throw MalformedInput("expected {\"n\": k, \"edges\": [[i, j, k], ...]} with 1-indexed vertices");
    const int n = j["n"].get<int>();
    if (n < 0 || n > detail::kMaxVertices) throw MalformedInput("vertex count out of range");
    ThreeGraph g(n);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) throw MalformedInput("edges must be vertex triples");
        try {
            g.add_edge(e[0].get<int>() - 1, e[1].get<int>() - 1, e[2].get<int>() - 1);
        } catch (const Error& err) {
            throw MalformedInput(std::string("bad edge: ") + err.what());
        }
    }
    return g;
}

inline json to_json(const Realization& r) {
    json j = to_json(r.config);
    j["all_distinct"] = r.all_distinct;
    j["max_residual"] = r.max_residual;
    if (r.borderline) j["borderline"] = true;
    return j;
}

inline json to_json(const ForbiddenCatalog& cat) {
    json verdicts = json::object();
    for (const auto& [name, entry] : cat.verdicts) {
        if (entry.verdict == Verdict::Realizable && entry.witness)
            verdicts[name] = json{{"realizable", to_json(*entry.witness)}};
        else
            verdicts[name] = to_string(entry.verdict);
    }
    return json{{"triangle", to_json(cat.triangle)},
                {"type", to_string(cat.type)},
                {"verdicts", verdicts}};
}

inline json to_json(const LagrangianResult& r) {
    json j{{"iterations", r.iterations},
           {"lower", r.lower},
           {"maximizer", r.maximizer.x},
           {"restarts", r.restarts}};
    if (r.certified_upper) j["certified_upper"] = *r.certified_upper;
    return j;
}

inline json to_json(const BoundReport& r) {
    json j{{"lower", r.lower},
           {"n", r.n},
           {"provenance", to_string(r.provenance)},
           {"triangle", to_json(r.triangle)},
           {"type", to_string(r.type)},
           {"upper", r.upper}};
    if (!r.citation.empty()) j["citation"] = r.citation;
    if (r.certified_upper) j["certified_upper"] = *r.certified_upper;
    return j;
}

inline json to_json(const ClusterConstruction& c) {
    return json{{"centers", to_json(c.centers)["points"]},
                {"radius", c.radius},
                {"sizes", c.sizes}};
}

inline json to_json(const TuranResult& r, bool include_witnesses) {
    json j{{"family", r.family}, {"n", r.n}, {"value", r.value}};
    if (include_witnesses) {
        json ws = json::array();
        for (const auto& w : r.witnesses) ws.push_back(to_json(w));
        j["witnesses"] = ws;
    }
    return j;
}

}  // namespace trigon
