// Bitset-backed 3-uniform hypergraphs on up to 24 labeled vertices, plus the
// small-graph machinery used throughout: shadow/link graphs, dense orderings,
// isomorphism, subgraph containment, cancellativity, and exhaustive
// enumeration of isomorphism classes for n <= 6.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "trigon/errors.hpp"

namespace trigon {

namespace detail {

inline constexpr int kMaxVertices = 24;

constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }
constexpr std::int64_t choose3(std::int64_t n) { return n * (n - 1) * (n - 2) / 6; }

// Colex rank of the triple i<j<k among all sorted triples.
constexpr int triple_rank(int i, int j, int k) {
    return static_cast<int>(choose3(k) + choose2(j) + i);
}

inline std::array<int, 3> sorted_triple(int i, int j, int k) {
    std::array<int, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace detail

// Simple undirected graph; holds shadow graphs and link graphs.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, false) {}

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        adj_[static_cast<std::size_t>(u) * n_ + v] = true;
        adj_[static_cast<std::size_t>(v) * n_ + u] = true;
    }
    bool has_edge(int u, int v) const {
        return u != v && adj_[static_cast<std::size_t>(u) * n_ + v];
    }
    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u) d += has_edge(v, u) ? 1 : 0;
        return d;
    }
    int edge_count() const {
        int e = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) e += has_edge(u, v) ? 1 : 0;
        return e;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }
    // True when every pair of distinct vertices is an edge.
    bool is_complete() const { return edge_count() == static_cast<int>(detail::choose2(n_)); }

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<bool> adj_;
};

// 3-uniform hypergraph with vertex set [0, n), n <= 24. Edges are stored as a
// bitset over the C(n,3) colex triple ranks; all accessors deal in sorted
// triples of vertex indices.
class ThreeGraph {
public:
    ThreeGraph() = default;

    explicit ThreeGraph(int n) : n_(n) {
        if (n < 0 || n > detail::kMaxVertices)
            throw OutOfSupportedRange("ThreeGraph supports 0..24 vertices");
        bits_.assign((static_cast<std::size_t>(detail::choose3(n)) + 63) / 64, 0);
    }

    static ThreeGraph from_edges(int n, const std::vector<std::array<int, 3>>& edges) {
        ThreeGraph g(n);
        for (const auto& e : edges) g.add_edge(e[0], e[1], e[2]);
        return g;
    }

    int vertex_count() const { return n_; }

    int triple_count() const { return static_cast<int>(detail::choose3(n_)); }

    bool has_edge(int i, int j, int k) const {
        const int r = rank_checked(i, j, k);
        return (bits_[r >> 6] >> (r & 63)) & 1u;
    }
    void add_edge(int i, int j, int k) {
        const int r = rank_checked(i, j, k);
        bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
    void remove_edge(int i, int j, int k) {
        const int r = rank_checked(i, j, k);
        bits_[r >> 6] &= ~(std::uint64_t{1} << (r & 63));
    }
    bool has_rank(int r) const { return (bits_[r >> 6] >> (r & 63)) & 1u; }
    void add_rank(int r) { bits_[r >> 6] |= std::uint64_t{1} << (r & 63); }

    int edge_count() const {
        int c = 0;
        for (auto w : bits_) c += std::popcount(w);
        return c;
    }

    // Edges as sorted triples, listed lexicographically.
    std::vector<std::array<int, 3>> edges() const {
        std::vector<std::array<int, 3>> out;
        out.reserve(edge_count());
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k)
                    if (has_edge(i, j, k)) out.push_back({i, j, k});
        return out;
    }

    int degree(int v) const {
        int d = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (i != v && j != v && has_edge(i, j, v)) ++d;
        return d;
    }

    // Edge bitset as a single word; valid for n <= 8 (C(8,3) = 56).
    std::uint64_t mask64() const {
        if (triple_count() > 64) throw OutOfSupportedRange("mask64 needs n <= 8");
        return bits_.empty() ? 0 : bits_[0];
    }
    static ThreeGraph from_mask64(int n, std::uint64_t mask) {
        ThreeGraph g(n);
        if (g.triple_count() > 64) throw OutOfSupportedRange("from_mask64 needs n <= 8");
        if (!g.bits_.empty()) g.bits_[0] = mask;
        return g;
    }

    bool operator==(const ThreeGraph&) const = default;

private:
    int rank_checked(int i, int j, int k) const {
        auto t = detail::sorted_triple(i, j, k);
        if (t[0] < 0 || t[2] >= n_ || t[0] == t[1] || t[1] == t[2])
            throw Error("edge must have three distinct vertices in range");
        return detail::triple_rank(t[0], t[1], t[2]);
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Shadow graph: pair uv is an edge iff some hyperedge contains both u and v.
inline Graph shadow_graph(const ThreeGraph& h) {
    Graph g(h.vertex_count());
    for (const auto& e : h.edges()) {
        g.add_edge(e[0], e[1]);
        g.add_edge(e[0], e[2]);
        g.add_edge(e[1], e[2]);
    }
    return g;
}

// Link graph of v: pair ab is an edge iff abv is a hyperedge.
inline Graph link_graph(const ThreeGraph& h, int v) {
    if (v < 0 || v >= h.vertex_count()) throw Error("link_graph: vertex out of range");
    Graph g(h.vertex_count());
    for (const auto& e : h.edges()) {
        if (e[0] == v) g.add_edge(e[1], e[2]);
        else if (e[1] == v) g.add_edge(e[0], e[2]);
        else if (e[2] == v) g.add_edge(e[0], e[1]);
    }
    return g;
}

namespace detail {

inline bool dense_extend(const ThreeGraph& h, std::vector<int>& order, std::vector<bool>& used) {
    const int n = h.vertex_count();
    const int pos = static_cast<int>(order.size());
    if (pos == n) return true;
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        if (pos >= 2) {
            ok = false;
            for (std::size_t x = 0; x < order.size() && !ok; ++x)
                for (std::size_t y = x + 1; y < order.size() && !ok; ++y)
                    if (h.has_edge(order[x], order[y], v)) ok = true;
        }
        if (!ok) continue;
        used[v] = true;
        order.push_back(v);
        if (dense_extend(h, order, used)) return true;
        order.pop_back();
        used[v] = false;
    }
    return false;
}

}  // namespace detail

// A 3-graph is dense if some vertex ordering v1..vk has every vi (i >= 3)
// inside an edge of the prefix. Returns the lexicographically least witness
// ordering, or nullopt.
inline std::optional<std::vector<int>> is_dense(const ThreeGraph& h) {
    std::vector<int> order;
    std::vector<bool> used(h.vertex_count(), false);
    if (detail::dense_extend(h, order, used)) return order;
    return std::nullopt;
}

// Edge-preserving vertex bijection from h1 onto h2, or nullopt. Exhaustive
// over permutations with degree-sequence pruning; intended for n <= 8.
inline std::optional<std::vector<int>> is_isomorphic(const ThreeGraph& h1, const ThreeGraph& h2) {
    const int n = h1.vertex_count();
    if (n != h2.vertex_count() || h1.edge_count() != h2.edge_count()) return std::nullopt;
    if (n > 8) throw OutOfSupportedRange("is_isomorphic supports n <= 8");

    std::vector<int> d1(n), d2(n);
    for (int v = 0; v < n; ++v) {
        d1[v] = h1.degree(v);
        d2[v] = h2.degree(v);
    }
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    const auto edges1 = h1.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) ok = d1[v] == d2[perm[v]];
        for (std::size_t i = 0; i < edges1.size() && ok; ++i)
            ok = h2.has_edge(perm[edges1[i][0]], perm[edges1[i][1]], perm[edges1[i][2]]);
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

namespace detail {

inline bool embed_extend(const ThreeGraph& host, const ThreeGraph& pat,
                         const std::vector<std::array<int, 3>>& pat_edges,
                         std::vector<int>& map, std::vector<bool>& used, int next) {
    const int np = pat.vertex_count();
    if (next == np) return true;
    for (int w = 0; w < host.vertex_count(); ++w) {
        if (used[w]) continue;
        bool ok = true;
        for (const auto& e : pat_edges) {
            if (e[0] > next || e[1] > next || e[2] > next) continue;
            if (e[0] != next && e[1] != next && e[2] != next) continue;
            const int a = e[0] == next ? w : map[e[0]];
            const int b = e[1] == next ? w : map[e[1]];
            const int c = e[2] == next ? w : map[e[2]];
            if (!host.has_edge(a, b, c)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        used[w] = true;
        map[next] = w;
        if (embed_extend(host, pat, pat_edges, map, used, next + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace detail

// Not-necessarily-induced containment: an injection of V(f) into V(h) sending
// every edge of f to an edge of h.
inline bool contains_subgraph(const ThreeGraph& h, const ThreeGraph& f) {
    if (f.vertex_count() > h.vertex_count()) return false;
    const auto fe = f.edges();
    std::vector<int> map(f.vertex_count(), -1);
    std::vector<bool> used(h.vertex_count(), false);
    return detail::embed_extend(h, f, fe, map, used, 0);
}

inline bool is_family_free(const ThreeGraph& h, const std::vector<ThreeGraph>& family) {
    for (const auto& f : family)
        if (contains_subgraph(h, f)) return false;
    return true;
}

// Cancellative: no symmetric difference of two edges is contained in a third
// edge. Only pairs sharing two vertices matter: their symmetric difference is
// a pair, and |e1 xor e2| > 3 otherwise.
inline bool is_cancellative(const ThreeGraph& h) {
    const auto es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            std::vector<int> sym;
            std::set_symmetric_difference(es[i].begin(), es[i].end(), es[j].begin(), es[j].end(),
                                          std::back_inserter(sym));
            if (sym.size() != 2) continue;
            for (const auto& g : es)
                if (std::includes(g.begin(), g.end(), sym.begin(), sym.end())) return false;
        }
    }
    return true;
}

// Canonical form: the lexicographically minimal edge bitset (colex triple
// order) over all vertex permutations. Full n! minimization; n <= 8.
inline ThreeGraph canonical_form(const ThreeGraph& h) {
    const int n = h.vertex_count();
    if (n > 8) throw OutOfSupportedRange("canonical_form supports n <= 8");
    const auto es = h.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t m = 0;
        for (const auto& e : es) {
            auto t = detail::sorted_triple(perm[e[0]], perm[e[1]], perm[e[2]]);
            m |= std::uint64_t{1} << detail::triple_rank(t[0], t[1], t[2]);
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ThreeGraph::from_mask64(n, best);
}

// One canonical representative per isomorphism class of n-vertex 3-graphs
// satisfying the predicate. Sweeps all 2^C(n,3) labeled graphs; n <= 6.
// Canonicalization runs over precomputed triple-rank permutation tables.
inline std::vector<ThreeGraph> enumerate_classes(int n,
                                                 const std::function<bool(const ThreeGraph&)>& predicate) {
    if (n > 6) throw OutOfSupportedRange("enumerate_classes supports n <= 6");
    const int t = static_cast<int>(detail::choose3(n));

    std::vector<std::array<int, 20>> rank_maps;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::array<int, 20> map{};
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) {
                        auto s = detail::sorted_triple(perm[i], perm[j], perm[k]);
                        map[detail::triple_rank(i, j, k)] = detail::triple_rank(s[0], s[1], s[2]);
                    }
            rank_maps.push_back(map);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<std::uint64_t> canon_masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        if (predicate && !predicate(ThreeGraph::from_mask64(n, mask))) continue;
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& map : rank_maps) {
            std::uint64_t m = 0;
            for (std::uint64_t bits = mask; bits;) {
                const int r = std::countr_zero(bits);
                bits &= bits - 1;
                m |= std::uint64_t{1} << map[r];
            }
            best = std::min(best, m);
        }
        canon_masks.push_back(best);
    }
    std::sort(canon_masks.begin(), canon_masks.end());
    canon_masks.erase(std::unique(canon_masks.begin(), canon_masks.end()), canon_masks.end());

    std::vector<ThreeGraph> out;
    out.reserve(canon_masks.size());
    for (std::uint64_t m : canon_masks) out.push_back(ThreeGraph::from_mask64(n, m));
    std::sort(out.begin(), out.end(), [](const ThreeGraph& a, const ThreeGraph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return a.mask64() < b.mask64();
    });
    return out;
}

}  // namespace trigon
