// The catalog of named small 3-graphs. Vertex labels are 0-indexed
// internally; the doc comments give the customary 1-indexed edge lists.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trigon/hypergraph.hpp"

namespace trigon {

enum class GraphName {
    K4_3,      // complete 3-graph on 4 vertices: 123,124,134,234
    K4_3minus, // K4_3 minus one edge: 123,124,134
    F32,       // 123,145,245,345
    J4,        // all triples through one vertex of [5]: 123,124,125,134,135,145
    F5,        // generalized triangle: 123,124,345
    C5,        // tight 5-cycle: 123,234,345,451,512
    C5minus,   // 123,234,345,451
    H1,        // 123,124,135,145
    H2,        // 123,124,135
    H3,        // 123,124,125
    H4,        // 123,234,134,124,514,523
    H5,        // 6 vertices: 142,143,145,146,251,253,254,256,361,362,364,365
};

struct NamedGraph {
    GraphName name;
    std::string label;
    ThreeGraph graph;
};

namespace detail {

inline ThreeGraph one_indexed(int n, std::vector<std::array<int, 3>> edges) {
    for (auto& e : edges)
        for (int& v : e) --v;
    return ThreeGraph::from_edges(n, edges);
}

}  // namespace detail

inline const std::vector<NamedGraph>& named_graphs() {
    static const std::vector<NamedGraph> catalog = [] {
        using detail::one_indexed;
        std::vector<NamedGraph> gs;
        gs.push_back({GraphName::K4_3, "K4_3",
                      one_indexed(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})});
        gs.push_back({GraphName::K4_3minus, "K4_3minus",
                      one_indexed(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}})});
        gs.push_back({GraphName::F32, "F32",
                      one_indexed(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}})});
        gs.push_back({GraphName::J4, "J4",
                      one_indexed(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}})});
        gs.push_back({GraphName::F5, "F5",
                      one_indexed(5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}})});
        gs.push_back({GraphName::C5, "C5",
                      one_indexed(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}, {5, 1, 2}})});
        gs.push_back({GraphName::C5minus, "C5minus",
                      one_indexed(5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}})});
        gs.push_back({GraphName::H1, "H1",
                      one_indexed(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5}})});
        gs.push_back({GraphName::H2, "H2",
                      one_indexed(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}})});
        gs.push_back({GraphName::H3, "H3",
                      one_indexed(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})});
        gs.push_back({GraphName::H4, "H4",
                      one_indexed(5, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {5, 1, 4}, {5, 2, 3}})});
        gs.push_back({GraphName::H5, "H5",
                      one_indexed(6, {{1, 4, 2}, {1, 4, 3}, {1, 4, 5}, {1, 4, 6},
                                      {2, 5, 1}, {2, 5, 3}, {2, 5, 4}, {2, 5, 6},
                                      {3, 6, 1}, {3, 6, 2}, {3, 6, 4}, {3, 6, 5}})});
        return gs;
    }();
    return catalog;
}

inline const NamedGraph& named_graph(GraphName name) {
    for (const auto& g : named_graphs())
        if (g.name == name) return g;
    throw Error("unknown graph name");
}

inline std::optional<GraphName> graph_name_from_string(std::string_view s) {
    for (const auto& g : named_graphs())
        if (g.label == s) return g.name;
    return std::nullopt;
}

inline const std::string& to_string(GraphName name) { return named_graph(name).label; }

// The six graphs of the forbidden catalog (Table 1 order).
inline std::vector<GraphName> catalog_graph_names() {
    return {GraphName::K4_3, GraphName::K4_3minus, GraphName::F32,
            GraphName::J4,   GraphName::F5,        GraphName::C5};
}

}  // namespace trigon
