// Exact-forbiddenness of dense 3-graphs for a triangle via finite
// candidate-placement search, plus enumeration of all complete-shadow
// realizable point configurations up to isometry.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigon/errors.hpp"
#include "trigon/geometry.hpp"
#include "trigon/hypergraph.hpp"
#include "trigon/named_graphs.hpp"

namespace trigon {

struct Realization {
    PointConfig config;  // point of vertex v at config.points[v]; coincidences allowed
    ThreeGraph graph;
    bool all_distinct = false;
    // true when some congruence decision along this placement fell in the
    // borderline band [tol, 1e3*tol]
    bool borderline = false;
    double max_residual = 0.0;
};

struct RealizationSearch {
    std::vector<Realization> found;
    bool ambiguous = false;
    std::string ambiguity_note;

    bool any_clean() const {
        for (const auto& r : found)
            if (!r.borderline) return true;
        return false;
    }
    bool any_all_distinct() const {
        for (const auto& r : found)
            if (r.all_distinct && !r.borderline) return true;
        return false;
    }
};

enum class Verdict { Forbidden, Realizable, Ambiguous };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Forbidden: return "forbidden";
        case Verdict::Realizable: return "realizable";
        case Verdict::Ambiguous: return "ambiguous";
    }
    return "ambiguous";
}

namespace detail {

inline std::vector<double> distinct_side_values(const Triangle& t, double tol) {
    std::vector<double> s;
    for (double v : t.sides()) {
        bool dup = false;
        for (double w : s)
            if (std::abs(v - w) <= tol) dup = true;
        if (!dup) s.push_back(v);
    }
    return s;
}

// side-match decision with the borderline band
enum class MatchKind { No, Clean, Borderline };

inline MatchKind match_side(double d, double side, double tol) {
    const double dev = std::abs(d - side);
    if (dev <= tol) return MatchKind::Clean;
    if (dev <= kBorderlineFactor * tol) return MatchKind::Borderline;
    return MatchKind::No;
}

// All points r such that the triangle (px, py, r) is congruent to t, given
// that |px py| matches a side of t. At most 4 points (plus tangency overlaps).
inline std::vector<Vec2> third_vertex_candidates(Vec2 px, Vec2 py, const Triangle& t, double tol,
                                                 bool& borderline) {
    std::vector<Vec2> out;
    const double d = distance(px, py);
    if (d <= tol) return out;  // coincident endpoints span no triangle
    const auto sides = t.sides();
    for (int si = 0; si < 3; ++si) {
        // skip repeated side values: identical remainder multisets
        bool repeat = false;
        for (int sj = 0; sj < si; ++sj)
            if (std::abs(sides[si] - sides[sj]) <= tol) repeat = true;
        if (repeat) continue;
        const MatchKind m = match_side(d, sides[si], tol);
        if (m == MatchKind::No) continue;
        if (m == MatchKind::Borderline) borderline = true;
        std::array<double, 2> rem{};
        int ri = 0;
        for (int sj = 0; sj < 3; ++sj)
            if (sj != si) rem[ri++] = sides[sj];
        for (const auto& [r1, r2] : {std::pair{rem[0], rem[1]}, std::pair{rem[1], rem[0]}}) {
            for (const Vec2& cand : circle_intersections(px, r1, py, r2, tol)) {
                bool dup = false;
                for (const Vec2& seen : out)
                    if (distance(cand, seen) <= tol) dup = true;
                if (!dup) out.push_back(cand);
            }
            if (std::abs(rem[0] - rem[1]) <= tol) break;
        }
    }
    return out;
}

// Reflection-normalize a vertex-indexed placement: the first vertex along the
// dense ordering that leaves the x-axis gets a positive y.
inline void normalize_reflection(std::vector<Vec2>& pts, const std::vector<int>& order, double tol) {
    for (int v : order) {
        if (std::abs(pts[v].y) <= 10 * tol) continue;
        if (pts[v].y < 0)
            for (auto& p : pts) p.y = -p.y;
        return;
    }
}

inline bool same_placement(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (distance(a[i], b[i]) > 100 * tol) return false;
    return true;
}

struct RealizationDfs {
    const ThreeGraph& h;
    const Triangle& t;
    double tol;
    std::vector<int> order;
    // covering edge endpoints (positions in `order`) for each ordering slot
    std::vector<std::pair<int, int>> cover;
    std::vector<Vec2> pos;
    RealizationSearch result;

    RealizationDfs(const ThreeGraph& h_, const Triangle& t_, double tol_,
                   std::vector<int> order_)
        : h(h_), t(t_), tol(tol_), order(std::move(order_)) {
        const int k = static_cast<int>(order.size());
        cover.assign(k, {-1, -1});
        for (int i = 2; i < k; ++i) {
            for (int x = 0; x < i && cover[i].first < 0; ++x)
                for (int y = x + 1; y < i && cover[i].first < 0; ++y)
                    if (h.has_edge(order[x], order[y], order[i])) cover[i] = {x, y};
        }
        pos.assign(h.vertex_count(), Vec2{});
    }

    void record_leaf(bool borderline_path) {
        double max_res = 0.0;
        bool borderline = borderline_path;
        for (const auto& e : h.edges()) {
            const double res = congruence_residual(pos[e[0]], pos[e[1]], pos[e[2]], t, tol);
            if (res <= tol) {
                max_res = std::max(max_res, res);
            } else if (res <= kBorderlineFactor * tol) {
                borderline = true;
                max_res = std::max(max_res, res);
            } else {
                return;  // reject
            }
        }
        std::vector<Vec2> pts = pos;
        normalize_reflection(pts, order, tol);
        for (const auto& seen : result.found)
            if (same_placement(seen.config.points, pts, tol)) return;

        Realization r;
        r.config.points = pts;
        r.config.allow_coincident = true;
        r.graph = h;
        r.max_residual = max_res;
        r.borderline = borderline;
        r.all_distinct = true;
        for (std::size_t i = 0; i < pts.size() && r.all_distinct; ++i)
            for (std::size_t j = i + 1; j < pts.size() && r.all_distinct; ++j)
                if (distance(pts[i], pts[j]) <= tol) r.all_distinct = false;
        if (borderline) {
            result.ambiguous = true;
            if (result.ambiguity_note.empty())
                result.ambiguity_note = "placement with borderline congruence residual";
        }
        result.found.push_back(std::move(r));
    }

    void dfs(int slot, bool borderline_path) {
        const int k = static_cast<int>(order.size());
        if (slot == k) {
            record_leaf(borderline_path);
            return;
        }
        if (slot == 0) {
            pos[order[0]] = {0, 0};
            dfs(1, borderline_path);
            return;
        }
        if (slot == 1) {
            for (double d : distinct_side_values(t, tol)) {
                pos[order[1]] = {d, 0};
                dfs(2, borderline_path);
            }
            return;
        }
        const auto [cx, cy] = cover[slot];
        const Vec2 px = pos[order[cx]], py = pos[order[cy]];
        bool borderline_here = false;
        std::vector<Vec2> cands;
        try {
            cands = third_vertex_candidates(px, py, t, tol, borderline_here);
        } catch (const ConcentricCircles&) {
            return;
        }
        if (borderline_here) {
            result.ambiguous = true;
            if (result.ambiguity_note.empty())
                result.ambiguity_note = "covering-pair distance in the borderline band";
        }
        for (const Vec2& cand : cands) {
            pos[order[slot]] = cand;
            dfs(slot + 1, borderline_path || borderline_here);
        }
    }
};

}  // namespace detail

// Depth-first placement along the dense ordering: first vertex at the origin,
// second on the positive x-axis at each distinct side length, each later
// vertex at a candidate position of its covering edge. Leaves are validated
// against all edges; results are deduplicated modulo rigid motion and
// reflection.
inline RealizationSearch find_realizations(const ThreeGraph& h, const Triangle& t,
                                           double tol = kDefaultTol) {
    const auto order = is_dense(h);
    if (!order) throw NotDense("find_realizations requires a dense 3-graph");
    detail::RealizationDfs search(h, t, tol, *order);
    search.dfs(0, false);
    return std::move(search.result);
}

// True iff no placement realizes all edges of h as congruent copies of t.
// Borderline placements poison the verdict instead of silently deciding.
inline bool is_exactly_forbidden(const ThreeGraph& h, const Triangle& t,
                                 double tol = kDefaultTol) {
    const auto search = find_realizations(h, t, tol);
    if (search.any_clean()) return false;
    if (search.ambiguous)
        throw AmbiguousDecision("realizability verdict is borderline: " + search.ambiguity_note);
    return true;
}

struct CatalogEntry {
    Verdict verdict = Verdict::Ambiguous;
    std::optional<Realization> witness;
};

struct ForbiddenCatalog {
    Triangle triangle;
    TriangleType type;
    std::vector<std::pair<std::string, CatalogEntry>> verdicts;  // Table 1 order
};

inline ForbiddenCatalog build_forbidden_catalog(const Triangle& t, double tol = kDefaultTol) {
    ForbiddenCatalog cat{t, classify_triangle(t), {}};
    for (GraphName name : catalog_graph_names()) {
        const auto& g = named_graph(name);
        CatalogEntry entry;
        const auto search = find_realizations(g.graph, t, tol);
        if (search.any_clean()) {
            entry.verdict = Verdict::Realizable;
            // prefer an all-distinct clean witness
            const Realization* pick = nullptr;
            for (const auto& r : search.found) {
                if (r.borderline) continue;
                if (!pick || (r.all_distinct && !pick->all_distinct)) pick = &r;
            }
            entry.witness = *pick;
        } else if (search.ambiguous) {
            entry.verdict = Verdict::Ambiguous;
        } else {
            entry.verdict = Verdict::Forbidden;
        }
        cat.verdicts.emplace_back(g.label, std::move(entry));
    }
    return cat;
}

namespace detail {

inline std::vector<double> sorted_distances(const PointConfig& p) {
    std::vector<double> d;
    for (std::size_t i = 0; i < p.points.size(); ++i)
        for (std::size_t j = i + 1; j < p.points.size(); ++j)
            d.push_back(distance(p.points[i], p.points[j]));
    std::sort(d.begin(), d.end());
    return d;
}

inline bool match_point_sets(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double gate) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& p : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j] || distance(p, b[j]) > gate) continue;
            used[j] = true;
            hit = true;
            break;
        }
        if (!hit) return false;
    }
    return true;
}

// Isometry test for small configurations: sorted distance multisets first,
// then alignment over all anchor pairs and both reflections.
inline bool are_isometric(const PointConfig& p, const PointConfig& q, double tol) {
    if (p.points.size() != q.points.size()) return false;
    if (p.points.size() <= 1) return true;
    const auto dp = sorted_distances(p), dq = sorted_distances(q);
    for (std::size_t i = 0; i < dp.size(); ++i)
        if (std::abs(dp[i] - dq[i]) > 10 * tol) return false;

    const double gate = 1e3 * tol;
    const Vec2 p0 = p.points[0];
    const double ref = distance(p.points[0], p.points[1]);
    std::vector<Vec2> pn;
    {
        const double th = std::atan2(p.points[1].y - p0.y, p.points[1].x - p0.x);
        for (const auto& v : p.points) pn.push_back(rotated(v - p0, -th));
    }
    for (std::size_t i = 0; i < q.points.size(); ++i) {
        for (std::size_t j = 0; j < q.points.size(); ++j) {
            if (i == j || std::abs(distance(q.points[i], q.points[j]) - ref) > 10 * tol) continue;
            const double th = std::atan2(q.points[j].y - q.points[i].y, q.points[j].x - q.points[i].x);
            for (bool mirror : {false, true}) {
                std::vector<Vec2> qn;
                for (const auto& v : q.points) {
                    Vec2 w = rotated(v - q.points[i], -th);
                    if (mirror) w.y = -w.y;
                    qn.push_back(w);
                }
                if (match_point_sets(pn, qn, gate)) return true;
            }
        }
    }
    return false;
}

struct ShadowDfs {
    const Triangle& t;
    double tol;
    int max_size;
    std::vector<double> side_values;
    std::vector<Vec2> universe;
    std::vector<Vec2> chosen;  // includes the two anchors
    std::vector<PointConfig>* out;

    bool distance_allowed(double d) const {
        for (double s : side_values)
            if (std::abs(d - s) <= 2 * tol) return true;
        return false;
    }

    void consider_current() {
        if (static_cast<int>(chosen.size()) < 3) return;
        PointConfig cfg;
        cfg.points = chosen;
        const ThreeGraph h = congruence_hypergraph(cfg, t, ToleranceParams{1e-3, tol});
        if (!shadow_graph(h).is_complete()) return;
        for (const auto& seen : *out)
            if (are_isometric(seen, cfg, tol)) return;
        out->push_back(std::move(cfg));
    }

    void dfs(std::size_t next) {
        consider_current();
        if (static_cast<int>(chosen.size()) >= max_size) return;
        for (std::size_t u = next; u < universe.size(); ++u) {
            bool ok = true;
            for (const auto& c : chosen)
                if (!distance_allowed(distance(universe[u], c))) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(universe[u]);
            dfs(u + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace detail

// All point configurations with distinct points, size <= max_size, whose
// congruence hypergraph has a complete shadow; up to isometry. Every point of
// such a configuration lies at an admissible distance from the first two, so
// the search space is the candidate universe of one anchored pair.
inline std::vector<PointConfig> realizable_point_sets(const Triangle& t, int max_size,
                                                      double tol = kDefaultTol) {
    if (max_size > 8) throw OutOfSupportedRange("realizable_point_sets supports max_size <= 8");
    std::vector<PointConfig> out;
    if (max_size < 3) return out;
    const auto sides = detail::distinct_side_values(t, tol);
    for (double d : sides) {
        detail::ShadowDfs dfs{t, tol, max_size, sides, {}, {}, &out};
        const Vec2 p1{0, 0}, p2{d, 0};
        dfs.universe = candidate_positions(p1, p2, sides, tol);
        dfs.chosen = {p1, p2};
        dfs.dfs(0);
    }
    std::sort(out.begin(), out.end(), [](const PointConfig& a, const PointConfig& b) {
        if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
        const auto da = detail::sorted_distances(a), db = detail::sorted_distances(b);
        return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
    });
    return out;
}

// Shinohara's maximal 6-point 3-distance sets, stored as data with distances
// {1, b, c}. The classification itself is consumed, not reproved; the
// configurations are verified to be 3-distance sets.
struct MaximalThreeDistanceSet {
    std::string label;
    PointConfig points;
    double b;
    double c;
};

inline const std::vector<MaximalThreeDistanceSet>& shinohara_six_point_sets() {
    static const std::vector<MaximalThreeDistanceSet> sets = [] {
        const double s3 = std::sqrt(3.0);
        const double gamma = std::sqrt(2.0 + s3);
        const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
        const double s5 = 2.0 * std::sin(std::numbers::pi / 5);
        std::vector<MaximalThreeDistanceSet> v;

        // equilateral triangle of side 2 with the three side midpoints
        v.push_back({"triangle-midpoints",
                     PointConfig{{{-1, 0}, {1, 0}, {0, 0}, {0, s3}, {0.5, s3 / 2}, {-0.5, s3 / 2}}},
                     s3, 2.0});

        // regular pentagon (circumradius 1) with its center
        {
            PointConfig p = regular_ngon(5, 1.0);
            p.points.push_back({0, 0});
            v.push_back({"pentagon-center", std::move(p), s5, tau * s5});
        }

        // the two (gamma, sqrt2*gamma) sets
        const double w = (1.0 + s3) / 2.0;
        v.push_back({"gamma-up",
                     PointConfig{{{-0.5, 0}, {0.5, 0}, {0, s3 / 2}, {0, s3 / 2 + 1}, {-w, -0.5}, {w, -0.5}}},
                     gamma, std::sqrt(2.0) * gamma});
        v.push_back({"gamma-down",
                     PointConfig{{{-0.5, 0}, {0.5, 0}, {0, s3 / 2}, {0, -(s3 / 2 + 1)}, {-w, -0.5}, {w, -0.5}}},
                     gamma, std::sqrt(2.0) * gamma});

        // the two (sqrt2, gamma) sets, rescaled to shortest distance 1
        const double k = gamma / 2.0;
        const auto scaled = [k](std::vector<Vec2> pts) {
            for (auto& p : pts) p = p * k;
            return pts;
        };
        v.push_back({"sqrt2-outer",
                     PointConfig{scaled({{-1, 0}, {1, 0}, {0, s3}, {0, s3 - 2}, {-(s3 - 1), 1}, {s3 - 1, 1}})},
                     std::sqrt(2.0), gamma});
        v.push_back({"sqrt2-inner",
                     PointConfig{scaled({{-1, 0}, {1, 0}, {0, s3}, {0, 2 - s3}, {-(s3 - 1), 1}, {s3 - 1, 1}})},
                     std::sqrt(2.0), gamma});
        return v;
    }();
    return sets;
}

}  // namespace trigon
