// Exact Turan numbers ex(n, F) for small n and small 3-uniform forbidden
// families, by include/exclude branch-and-bound over the lexicographic triple
// list with incremental forbidden-subgraph detection, plus an exhaustive
// sweep used for cross-validation at n <= 5.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trigon/errors.hpp"
#include "trigon/hypergraph.hpp"

namespace trigon {

struct TuranResult {
    int n = 0;
    std::vector<std::string> family;
    long long value = 0;
    std::vector<ThreeGraph> witnesses;  // canonical representatives
};

// Complete 3-partite 3-graph with part sizes floor(n/3), floor((n+1)/3),
// floor((n+2)/3); its edge count is s(n).
inline ThreeGraph balanced_3partite(int n) {
    if (n < 3) throw Error("balanced_3partite needs n >= 3");
    const int p0 = n / 3, p1 = (n + 1) / 3;
    ThreeGraph g(n);
    for (int a = 0; a < p0; ++a)
        for (int b = p0; b < p0 + p1; ++b)
            for (int c = p0 + p1; c < n; ++c) g.add_edge(a, b, c);
    return g;
}

namespace detail {

inline bool extend_partial(const ThreeGraph& host, const ThreeGraph& pat,
                           const std::vector<std::array<int, 3>>& pat_edges, std::vector<int>& map,
                           std::vector<bool>& used, int next) {
    const int np = pat.vertex_count();
    while (next < np && map[next] != -1) ++next;
    if (next == np) return true;
    for (int w = 0; w < host.vertex_count(); ++w) {
        if (used[w]) continue;
        bool ok = true;
        for (const auto& e : pat_edges) {
            int img[3];
            bool full = true;
            for (int i = 0; i < 3; ++i) {
                const int v = e[i];
                if (v == next) img[i] = w;
                else if (map[v] != -1) img[i] = map[v];
                else full = false;
            }
            if (full && (e[0] == next || e[1] == next || e[2] == next) &&
                !host.has_edge(img[0], img[1], img[2])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        used[w] = true;
        map[next] = w;
        if (extend_partial(host, pat, pat_edges, map, used, next + 1)) return true;
        map[next] = -1;
        used[w] = false;
    }
    return false;
}

// Does host contain a copy of pat that uses the anchor triple as the image
// of one of pat's edges?
inline bool contains_through_triple(const ThreeGraph& host, const ThreeGraph& pat,
                                    const std::array<int, 3>& anchor) {
    const auto pat_edges = pat.edges();
    std::array<int, 3> host_vs = anchor;
    std::sort(host_vs.begin(), host_vs.end());
    for (const auto& e : pat_edges) {
        std::array<int, 3> hv = host_vs;
        do {
            std::vector<int> map(pat.vertex_count(), -1);
            std::vector<bool> used(host.vertex_count(), false);
            bool clash = false;
            for (int i = 0; i < 3 && !clash; ++i) {
                if (map[e[i]] != -1 && map[e[i]] != hv[i]) clash = true;
                if (used[hv[i]] && map[e[i]] != hv[i]) clash = true;
                map[e[i]] = hv[i];
                used[hv[i]] = true;
            }
            if (!clash) {
                // verify already-determined edges, then extend the rest
                bool ok = true;
                for (const auto& pe : pat_edges) {
                    if (map[pe[0]] < 0 || map[pe[1]] < 0 || map[pe[2]] < 0) continue;
                    if (!host.has_edge(map[pe[0]], map[pe[1]], map[pe[2]])) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    int next = 0;
                    while (next < pat.vertex_count() && map[next] != -1) ++next;
                    if (extend_partial(host, pat, pat_edges, map, used, next)) return true;
                }
            }
        } while (std::next_permutation(hv.begin(), hv.end()));
    }
    return false;
}

struct TuranDfs {
    int n;
    std::vector<const ThreeGraph*> family;
    std::vector<std::array<int, 3>> triples;
    ThreeGraph chosen;
    long long best = 0;
    std::vector<std::uint64_t> witness_masks;

    bool can_add(const std::array<int, 3>& tr) {
        chosen.add_edge(tr[0], tr[1], tr[2]);
        bool ok = true;
        for (const auto* f : family)
            if (contains_through_triple(chosen, *f, tr)) {
                ok = false;
                break;
            }
        if (!ok) chosen.remove_edge(tr[0], tr[1], tr[2]);
        return ok;
    }

    void leaf(long long count) {
        if (count > best) {
            best = count;
            witness_masks.clear();
        }
        if (count == best) {
            const std::uint64_t canon = canonical_form(chosen).mask64();
            if (std::find(witness_masks.begin(), witness_masks.end(), canon) ==
                witness_masks.end())
                witness_masks.push_back(canon);
        }
    }

    void dfs(std::size_t idx, long long count) {
        if (count + static_cast<long long>(triples.size() - idx) < best) return;
        if (idx == triples.size()) {
            leaf(count);
            return;
        }
        if (can_add(triples[idx])) {
            dfs(idx + 1, count + 1);
            const auto& tr = triples[idx];
            chosen.remove_edge(tr[0], tr[1], tr[2]);
        }
        dfs(idx + 1, count);
    }
};

}  // namespace detail

// Exhaustive sweep over all labeled n-vertex 3-graphs; n <= 5.
inline TuranResult turan_number_exhaustive(int n, const std::vector<ThreeGraph>& family) {
    if (n > 5) throw OutOfSupportedRange("exhaustive sweep supports n <= 5");
    std::vector<ThreeGraph> active;
    TuranResult res;
    res.n = n;
    for (const auto& f : family)
        if (f.vertex_count() <= n) active.push_back(f);
    const int t = static_cast<int>(detail::choose3(n));
    std::vector<std::uint64_t> witness_masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        const ThreeGraph g = ThreeGraph::from_mask64(n, mask);
        if (!is_family_free(g, active)) continue;
        const long long count = g.edge_count();
        if (count > res.value) {
            res.value = count;
            witness_masks.clear();
        }
        if (count == res.value) {
            const std::uint64_t canon = canonical_form(g).mask64();
            if (std::find(witness_masks.begin(), witness_masks.end(), canon) ==
                witness_masks.end())
                witness_masks.push_back(canon);
        }
    }
    std::sort(witness_masks.begin(), witness_masks.end());
    for (auto m : witness_masks) res.witnesses.push_back(ThreeGraph::from_mask64(n, m));
    return res;
}

// Exact Turan number via depth-first include/exclude search. Graphs with one
// or more edges are searched with the first edge pinned to {0,1,2}; the empty
// graph is handled separately. n = 7 sits behind allow_slow.
inline TuranResult turan_number(int n, const std::vector<ThreeGraph>& family,
                                bool allow_slow = false) {
    if (n > 7 || n < 3) throw OutOfSupportedRange("turan_number supports 3 <= n <= 7");
    if (n == 7 && !allow_slow)
        throw OutOfSupportedRange("n = 7 is gated behind the slow flag");

    detail::TuranDfs dfs;
    dfs.n = n;
    for (const auto& f : family) {
        if (f.vertex_count() <= n) dfs.family.push_back(&f);
    }
    dfs.chosen = ThreeGraph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) dfs.triples.push_back({i, j, k});

    // empty graph baseline
    dfs.best = 0;
    dfs.witness_masks = {0};

    // any nonempty graph is isomorphic to one whose lexicographically first
    // triple {0,1,2} is an edge
    if (dfs.can_add(dfs.triples[0])) {
        dfs.dfs(1, 1);
        dfs.chosen.remove_edge(0, 1, 2);
    }

    TuranResult res;
    res.n = n;
    res.value = dfs.best;
    std::sort(dfs.witness_masks.begin(), dfs.witness_masks.end());
    for (auto m : dfs.witness_masks)
        if (dfs.best > 0 ? m != 0 : true) res.witnesses.push_back(ThreeGraph::from_mask64(n, m));
    return res;
}

}  // namespace trigon
