#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "trigon/hypergraph.hpp"
#include "trigon/named_graphs.hpp"

using namespace trigon;

namespace {

// complete 3-partite 3-graph with parts {0,1}, {2,3}, {4,5}
ThreeGraph balanced6() {
    ThreeGraph g(6);
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) g.add_edge(a, b, c);
    return g;
}

ThreeGraph permuted(const ThreeGraph& g, const std::vector<int>& perm) {
    ThreeGraph out(g.vertex_count());
    for (const auto& e : g.edges()) out.add_edge(perm[e[0]], perm[e[1]], perm[e[2]]);
    return out;
}

bool dense_witness_valid(const ThreeGraph& h, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != h.vertex_count()) return false;
    for (std::size_t i = 2; i < order.size(); ++i) {
        bool covered = false;
        for (std::size_t x = 0; x < i && !covered; ++x)
            for (std::size_t y = x + 1; y < i && !covered; ++y)
                if (h.has_edge(order[x], order[y], order[i])) covered = true;
        if (!covered) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("named graphs carry the catalog edge lists") {
    CHECK(named_graph(GraphName::K4_3).graph.edge_count() == 4);
    CHECK(named_graph(GraphName::K4_3minus).graph.edge_count() == 3);
    CHECK(named_graph(GraphName::F32).graph.edge_count() == 4);
    CHECK(named_graph(GraphName::J4).graph.edge_count() == 6);
    CHECK(named_graph(GraphName::F5).graph.edge_count() == 3);
    CHECK(named_graph(GraphName::C5).graph.edge_count() == 5);
    CHECK(named_graph(GraphName::C5minus).graph.edge_count() == 4);
    CHECK(named_graph(GraphName::H4).graph.edge_count() == 6);
    CHECK(named_graph(GraphName::H5).graph.edge_count() == 12);
    CHECK(named_graph(GraphName::H5).graph.vertex_count() == 6);

    // spot-check 1-indexed lists against storage
    const auto& f32 = named_graph(GraphName::F32).graph;
    CHECK(f32.has_edge(0, 1, 2));
    CHECK(f32.has_edge(0, 3, 4));
    CHECK(f32.has_edge(1, 3, 4));
    CHECK(f32.has_edge(2, 3, 4));

    const auto& h4 = named_graph(GraphName::H4).graph;
    CHECK(h4.has_edge(0, 3, 4));  // 514
    CHECK(h4.has_edge(1, 2, 4));  // 523

    CHECK(graph_name_from_string("C5").has_value());
    CHECK_FALSE(graph_name_from_string("C6").has_value());
}

TEST_CASE("shadow_graph") {
    const auto k4m = shadow_graph(named_graph(GraphName::K4_3minus).graph);
    CHECK(k4m.is_complete());

    ThreeGraph single(5);
    single.add_edge(0, 1, 2);
    const auto sh = shadow_graph(single);
    CHECK(sh.edge_count() == 3);
    CHECK_FALSE(sh.is_complete());

    const auto c5m = shadow_graph(named_graph(GraphName::C5minus).graph);
    CHECK(c5m.edge_count() == 9);
    CHECK_FALSE(c5m.has_edge(1, 4));  // pair 25, 1-indexed
}

TEST_CASE("link_graph") {
    const auto h4link = link_graph(named_graph(GraphName::H4).graph, 4);
    CHECK(h4link.edge_count() == 2);
    CHECK(h4link.has_edge(0, 3));
    CHECK(h4link.has_edge(1, 2));
    CHECK(h4link.degree(0) == 1);

    const auto j4link = link_graph(named_graph(GraphName::J4).graph, 0);
    CHECK(j4link.edge_count() == 6);
    for (int u = 1; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(j4link.has_edge(u, v));

    ThreeGraph single(4);
    single.add_edge(0, 1, 2);
    CHECK(link_graph(single, 3).edge_count() == 0);
}

TEST_CASE("is_dense finds witness orderings") {
    const auto f32 = is_dense(named_graph(GraphName::F32).graph);
    REQUIRE(f32.has_value());
    CHECK(dense_witness_valid(named_graph(GraphName::F32).graph, *f32));

    const auto k4 = is_dense(named_graph(GraphName::K4_3).graph);
    REQUIRE(k4.has_value());
    CHECK(*k4 == std::vector<int>{0, 1, 2, 3});

    ThreeGraph sparse(5);
    sparse.add_edge(0, 1, 2);
    CHECK_FALSE(is_dense(sparse).has_value());

    for (const auto& ng : named_graphs()) {
        const auto w = is_dense(ng.graph);
        REQUIRE(w.has_value());
        CHECK(dense_witness_valid(ng.graph, *w));
    }
}

TEST_CASE("is_isomorphic") {
    const auto& c5 = named_graph(GraphName::C5).graph;
    const ThreeGraph rot = permuted(c5, {1, 2, 3, 4, 0});
    const auto w = is_isomorphic(c5, rot);
    REQUIRE(w.has_value());
    for (const auto& e : c5.edges()) CHECK(rot.has_edge((*w)[e[0]], (*w)[e[1]], (*w)[e[2]]));

    const ThreeGraph h2b = ThreeGraph::from_edges(5, {{0, 1, 2}, {0, 1, 3}, {0, 3, 4}});
    CHECK(is_isomorphic(named_graph(GraphName::H2).graph, h2b).has_value());

    CHECK_FALSE(is_isomorphic(named_graph(GraphName::F5).graph,
                              named_graph(GraphName::K4_3minus).graph)
                    .has_value());
}

TEST_CASE("is_isomorphic behaves like an equivalence relation") {
    std::mt19937_64 rng(23);
    std::vector<ThreeGraph> sample;
    for (const auto& ng : named_graphs())
        if (ng.graph.vertex_count() == 5) sample.push_back(ng.graph);
    for (const auto& g : sample) CHECK(is_isomorphic(g, g).has_value());
    for (const auto& g : sample)
        for (const auto& h : sample) {
            const bool gh = is_isomorphic(g, h).has_value();
            const bool hg = is_isomorphic(h, g).has_value();
            CHECK(gh == hg);
        }
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (const auto& g : sample) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const ThreeGraph m = permuted(g, perm);
        std::shuffle(perm.begin(), perm.end(), rng);
        const ThreeGraph m2 = permuted(m, perm);
        CHECK(is_isomorphic(g, m).has_value());
        CHECK(is_isomorphic(m, m2).has_value());
        CHECK(is_isomorphic(g, m2).has_value());
    }
}

TEST_CASE("contains_subgraph") {
    CHECK(contains_subgraph(named_graph(GraphName::H5).graph, named_graph(GraphName::H4).graph));
    CHECK(contains_subgraph(named_graph(GraphName::K4_3).graph,
                            named_graph(GraphName::K4_3minus).graph));
    // F32 has a pair covered by three edges; C5 covers no pair more than twice
    CHECK_FALSE(contains_subgraph(named_graph(GraphName::C5).graph,
                                  named_graph(GraphName::F32).graph));
}

TEST_CASE("contains_subgraph is monotone under edge addition") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> vtx(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        ThreeGraph h(6);
        for (int e = 0; e < 6; ++e) {
            int a = vtx(rng), b = vtx(rng), c = vtx(rng);
            if (a != b && b != c && a != c) h.add_edge(a, b, c);
        }
        for (const auto& ng : named_graphs()) {
            if (!contains_subgraph(h, ng.graph)) continue;
            ThreeGraph grown = h;
            int a = vtx(rng), b = vtx(rng), c = vtx(rng);
            if (a != b && b != c && a != c) grown.add_edge(a, b, c);
            CHECK(contains_subgraph(grown, ng.graph));
        }
    }
}

TEST_CASE("is_family_free and is_cancellative") {
    const std::vector<ThreeGraph> fam{named_graph(GraphName::F5).graph,
                                      named_graph(GraphName::K4_3minus).graph};
    CHECK(is_family_free(balanced6(), fam));
    CHECK_FALSE(is_family_free(named_graph(GraphName::K4_3).graph,
                               {named_graph(GraphName::K4_3minus).graph}));
    CHECK(is_family_free(named_graph(GraphName::C5).graph,
                         {named_graph(GraphName::K4_3minus).graph,
                          named_graph(GraphName::F32).graph}));

    CHECK(is_cancellative(balanced6()));
    CHECK_FALSE(is_cancellative(named_graph(GraphName::K4_3minus).graph));
    ThreeGraph single(3);
    single.add_edge(0, 1, 2);
    CHECK(is_cancellative(single));
}

TEST_CASE("cancellative iff {F5, K4_3minus}-free, exhaustively to 5 vertices") {
    const std::vector<ThreeGraph> fam{named_graph(GraphName::F5).graph,
                                      named_graph(GraphName::K4_3minus).graph};
    for (int n = 3; n <= 5; ++n) {
        const int t = n == 3 ? 1 : (n == 4 ? 4 : 10);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
            const ThreeGraph g = ThreeGraph::from_mask64(n, mask);
            CHECK(is_cancellative(g) == is_family_free(g, fam));
        }
    }
}

TEST_CASE("canonical_form is permutation invariant") {
    std::mt19937_64 rng(31);
    std::vector<int> perm{0, 1, 2, 3, 4};
    for (const auto& ng : named_graphs()) {
        if (ng.graph.vertex_count() != 5) continue;
        const auto canon = canonical_form(ng.graph);
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(permuted(ng.graph, perm)) == canon);
        }
    }
}

TEST_CASE("enumerate_classes reproduces the five-vertex classification") {
    const auto& k4m = named_graph(GraphName::K4_3minus).graph;

    const auto trivial = enumerate_classes(3, [](const ThreeGraph&) { return true; });
    CHECK(trivial.size() == 2);

    // known count of 3-uniform hypergraphs on 5 unlabeled vertices
    CHECK(enumerate_classes(5, nullptr).size() == 34);

    const auto classes = enumerate_classes(5, [&](const ThreeGraph& g) {
        return g.edge_count() >= 3 && !contains_subgraph(g, k4m);
    });
    REQUIRE(classes.size() == 7);
    const std::vector<GraphName> expected{GraphName::C5, GraphName::C5minus, GraphName::F32,
                                          GraphName::H1, GraphName::F5,      GraphName::H2,
                                          GraphName::H3};
    for (GraphName name : expected) {
        int hits = 0;
        for (const auto& g : classes)
            if (is_isomorphic(g, named_graph(name).graph).has_value()) ++hits;
        INFO("class " << to_string(name));
        CHECK(hits == 1);
    }

    const auto complete_shadow = enumerate_classes(5, [&](const ThreeGraph& g) {
        return !contains_subgraph(g, k4m) && shadow_graph(g).is_complete();
    });
    REQUIRE(complete_shadow.size() == 2);
    for (GraphName name : {GraphName::C5, GraphName::F32}) {
        int hits = 0;
        for (const auto& g : complete_shadow)
            if (is_isomorphic(g, named_graph(name).graph).has_value()) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("no {K4_3minus, C5, F32}-free 5-vertex graph has complete shadow") {
    const std::vector<ThreeGraph> fam{named_graph(GraphName::K4_3minus).graph,
                                      named_graph(GraphName::C5).graph,
                                      named_graph(GraphName::F32).graph};
    const auto classes = enumerate_classes(5, [&](const ThreeGraph& g) {
        return is_family_free(g, fam) && shadow_graph(g).is_complete();
    });
    CHECK(classes.empty());
}

TEST_CASE("H4 is the unique {C5, J4}-free K4_3-carrier with complete shadow") {
    const auto& c5 = named_graph(GraphName::C5).graph;
    const auto& j4 = named_graph(GraphName::J4).graph;
    const auto& k4 = named_graph(GraphName::K4_3).graph;
    const auto classes = enumerate_classes(5, [&](const ThreeGraph& g) {
        return !contains_subgraph(g, c5) && !contains_subgraph(g, j4) &&
               contains_subgraph(g, k4) && shadow_graph(g).is_complete();
    });
    REQUIRE(classes.size() == 1);
    CHECK(is_isomorphic(classes[0], named_graph(GraphName::H4).graph).has_value());
}
