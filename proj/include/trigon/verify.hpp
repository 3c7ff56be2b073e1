// The per-lemma verification suite behind the `verify` subcommand: each
// check recomputes one of the toolkit's headline claims from the underlying modules
// and reports pass/fail/ambiguous with a reproducible evidence payload.
#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "trigon/bounds.hpp"
#include "trigon/json_io.hpp"
#include "trigon/lagrangian.hpp"
#include "trigon/realizability.hpp"
#include "trigon/turan.hpp"

namespace trigon {

struct VerificationReport {
    std::string lemma;
    std::string status;  // pass | fail | ambiguous
    json evidence;
    double wall_seconds = 0.0;
};

namespace verify_detail {

struct CheckResult {
    bool pass = true;
    bool ambiguous = false;
    json evidence = json::object();

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            evidence["failures"].push_back(what);
        }
    }
};

using CheckFn = std::function<CheckResult(std::uint64_t seed)>;

inline constexpr double kSqrt3 = 1.7320508075688772;

struct SampleTriangle {
    std::string name;
    Triangle triangle;
};

inline std::vector<SampleTriangle> sample_triangles() {
    const double s5 = 2 * std::sin(std::numbers::pi / 5);
    const double d5 = 2 * std::sin(2 * std::numbers::pi / 5);
    return {{"equilateral", Triangle(1, 1, 1)},
            {"right-30-60-90", Triangle(1, kSqrt3, 2)},
            {"right-generic", Triangle(1, 2, std::sqrt(5.0))},
            {"120-30-30", Triangle(1, 1, kSqrt3)},
            {"7gon", Triangle(2 * std::sin(std::numbers::pi / 7),
                              2 * std::sin(2 * std::numbers::pi / 7),
                              2 * std::sin(3 * std::numbers::pi / 7))},
            {"golden-108", Triangle(s5, s5, d5)},
            {"golden-72", Triangle(s5, d5, d5)},
            {"generic", Triangle(1, 1.1, 1.25)}};
}

inline CheckResult check_four_points(std::uint64_t seed) {
    CheckResult res;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    const int trials = 100000;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        PointConfig p;
        for (int i = 0; i < 4; ++i) p.points.push_back({coord(rng), coord(rng)});
        bool distinct = true;
        for (int i = 0; i < 4 && distinct; ++i)
            for (int j = i + 1; j < 4 && distinct; ++j)
                if (distance(p.points[i], p.points[j]) < 1e-12) distinct = false;
        if (!distinct) continue;
        min_ratio = std::min(min_ratio, diameter_min_ratio(p));
    }
    res.evidence["trials"] = trials;
    res.evidence["min_ratio"] = min_ratio;
    res.evidence["bound"] = std::sqrt(2.0) - 1e-9;
    res.require(min_ratio >= std::sqrt(2.0) - 1e-9, "a 4-point set beat the sqrt(2) bound");
    return res;
}

inline CheckResult check_table1_dense(std::uint64_t) {
    CheckResult res;
    for (const auto& ng : named_graphs()) {
        const auto order = is_dense(ng.graph);
        res.require(order.has_value(), ng.label + " has no dense ordering");
        if (order) {
            json o = json::array();
            for (int v : *order) o.push_back(v + 1);
            res.evidence["orderings"][ng.label] = o;
        }
    }
    return res;
}

inline CheckResult check_cancellative_equivalence(std::uint64_t) {
    CheckResult res;
    const std::vector<ThreeGraph> fam{named_graph(GraphName::F5).graph,
                                      named_graph(GraphName::K4_3minus).graph};
    long long checked = 0;
    for (int n = 3; n <= 5; ++n) {
        const int t = static_cast<int>(detail::choose3(n));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
            const ThreeGraph g = ThreeGraph::from_mask64(n, mask);
            ++checked;
            if (is_cancellative(g) != is_family_free(g, fam)) {
                res.require(false, "mismatch at n=" + std::to_string(n) +
                                       " mask=" + std::to_string(mask));
                return res;
            }
        }
    }
    res.evidence["graphs_checked"] = checked;
    return res;
}

inline CheckResult check_five_vertex_classification(std::uint64_t) {
    CheckResult res;
    const auto& k4m = named_graph(GraphName::K4_3minus).graph;
    const auto classes = enumerate_classes(5, [&](const ThreeGraph& g) {
        return g.edge_count() >= 3 && !contains_subgraph(g, k4m);
    });
    res.evidence["class_count"] = classes.size();
    res.require(classes.size() == 7, "expected exactly 7 classes");
    const std::vector<GraphName> expected{GraphName::C5, GraphName::C5minus, GraphName::F32,
                                          GraphName::H1, GraphName::F5,      GraphName::H2,
                                          GraphName::H3};
    json names = json::array();
    for (GraphName name : expected) {
        int hits = 0;
        for (const auto& g : classes)
            if (is_isomorphic(g, named_graph(name).graph).has_value()) ++hits;
        res.require(hits == 1, to_string(name) + " matched " + std::to_string(hits) + " classes");
        names.push_back(to_string(name));
    }
    res.evidence["classes"] = names;
    return res;
}

inline CheckResult check_complete_shadow_classification(std::uint64_t) {
    CheckResult res;
    const auto& k4m = named_graph(GraphName::K4_3minus).graph;
    const auto classes = enumerate_classes(5, [&](const ThreeGraph& g) {
        return !contains_subgraph(g, k4m) && shadow_graph(g).is_complete();
    });
    res.evidence["class_count"] = classes.size();
    res.require(classes.size() == 2, "expected exactly the classes C5 and F32");
    for (GraphName name : {GraphName::C5, GraphName::F32}) {
        int hits = 0;
        for (const auto& g : classes)
            if (is_isomorphic(g, named_graph(name).graph).has_value()) ++hits;
        res.require(hits == 1, to_string(name) + " not matched exactly once");
    }
    return res;
}

inline CheckResult check_no_complete_shadow(std::uint64_t) {
    CheckResult res;
    const std::vector<ThreeGraph> fam{named_graph(GraphName::K4_3minus).graph,
                                      named_graph(GraphName::C5).graph,
                                      named_graph(GraphName::F32).graph};
    const auto classes = enumerate_classes(5, [&](const ThreeGraph& g) {
        return is_family_free(g, fam) && shadow_graph(g).is_complete();
    });
    res.evidence["class_count"] = classes.size();
    res.require(classes.empty(), "a family-free complete-shadow class exists");
    return res;
}

inline CheckResult check_h4_uniqueness(std::uint64_t) {
    CheckResult res;
    const auto& c5 = named_graph(GraphName::C5).graph;
    const auto& j4 = named_graph(GraphName::J4).graph;
    const auto& k4 = named_graph(GraphName::K4_3).graph;
    const auto classes = enumerate_classes(5, [&](const ThreeGraph& g) {
        return !contains_subgraph(g, c5) && !contains_subgraph(g, j4) &&
               contains_subgraph(g, k4) && shadow_graph(g).is_complete();
    });
    res.evidence["class_count"] = classes.size();
    res.require(classes.size() == 1, "expected a unique class");
    if (classes.size() == 1)
        res.require(is_isomorphic(classes[0], named_graph(GraphName::H4).graph).has_value(),
                    "the unique class is not H4");
    return res;
}

inline CheckResult check_forbidden_catalog(std::uint64_t) {
    CheckResult res;
    // expected verdicts mandated by the lemma family; absent = unconstrained
    const std::map<std::string, std::map<std::string, Verdict>> expect{
        {"equilateral",
         {{"F32", Verdict::Forbidden},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Forbidden},
          {"K4_3minus", Verdict::Forbidden},
          {"C5", Verdict::Forbidden},
          {"F5", Verdict::Forbidden}}},
        {"right-30-60-90",
         {{"F32", Verdict::Realizable},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Realizable},
          {"K4_3minus", Verdict::Realizable},
          {"C5", Verdict::Forbidden}}},
        {"right-generic",
         {{"F32", Verdict::Forbidden},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Realizable},
          {"K4_3minus", Verdict::Realizable},
          {"C5", Verdict::Forbidden}}},
        {"120-30-30",
         {{"F32", Verdict::Forbidden},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Forbidden},
          {"K4_3minus", Verdict::Realizable}}},
        {"7gon",
         {{"F32", Verdict::Forbidden},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Forbidden},
          {"K4_3minus", Verdict::Forbidden},
          {"C5", Verdict::Forbidden}}},
        {"golden-108",
         {{"F32", Verdict::Forbidden},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Forbidden},
          {"K4_3minus", Verdict::Forbidden},
          {"C5", Verdict::Realizable}}},
        {"golden-72",
         {{"F32", Verdict::Forbidden},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Forbidden},
          {"K4_3minus", Verdict::Forbidden},
          {"C5", Verdict::Realizable}}},
        {"generic",
         {{"F32", Verdict::Forbidden},
          {"J4", Verdict::Forbidden},
          {"K4_3", Verdict::Forbidden},
          {"K4_3minus", Verdict::Forbidden},
          {"C5", Verdict::Forbidden},
          {"F5", Verdict::Forbidden}}},
    };
    for (const auto& sample : sample_triangles()) {
        const auto cat = build_forbidden_catalog(sample.triangle);
        json verdicts = json::object();
        for (const auto& [name, entry] : cat.verdicts) {
            verdicts[name] = to_string(entry.verdict);
            if (entry.verdict == Verdict::Ambiguous) res.ambiguous = true;
        }
        res.evidence["catalogs"][sample.name] = verdicts;
        const auto it = expect.find(sample.name);
        if (it == expect.end()) continue;
        for (const auto& [gname, want] : it->second) {
            Verdict got = Verdict::Ambiguous;
            for (const auto& [name, entry] : cat.verdicts)
                if (name == gname) got = entry.verdict;
            res.require(got == want, sample.name + "/" + gname + ": expected " + to_string(want) +
                                         ", got " + to_string(got));
        }
    }
    return res;
}

inline CheckResult check_lagrangian_closed_forms(std::uint64_t) {
    CheckResult res;
    struct Case {
        GraphName name;
        double lambda;
    };
    const std::vector<Case> cases{{GraphName::K4_3, 1.0 / 16},
                                  {GraphName::K4_3minus, 4.0 / 81},
                                  {GraphName::C5, 1.0 / 25},
                                  {GraphName::F32, (189.0 + 15.0 * std::sqrt(5.0)) / 5766.0},
                                  {GraphName::H5, 1.0 / 16}};
    for (const auto& c : cases) {
        const auto& g = named_graph(c.name).graph;
        const auto r = maximize(g);
        res.evidence["lambda"][to_string(c.name)] = r.lower;
        res.require(std::abs(r.lower - c.lambda) <= 1e-9,
                    to_string(c.name) + " off by " + std::to_string(r.lower - c.lambda));
        res.require(certify_upper_bound(g, c.lambda + 1e-6),
                    to_string(c.name) + " certification failed");
    }
    return res;
}

inline CheckResult check_h5_lagrangian(std::uint64_t) {
    CheckResult res;
    const auto& h5 = named_graph(GraphName::H5).graph;
    res.require(certify_upper_bound(h5, 1.0 / 16 + 1e-6), "lambda(H5) <= 1/16 not certified");
    const std::vector<double> attain{0.25, 0.25, 0.0, 0.25, 0.25, 0.0};
    res.evidence["attained"] = evaluate(h5, attain);
    res.require(std::abs(evaluate(h5, attain) - 1.0 / 16) <= 1e-15, "1/16 not attained");
    const auto r = maximize(h5);
    res.evidence["maximize"] = r.lower;
    res.require(std::abs(r.lower - 1.0 / 16) <= 1e-9, "maximize(H5) != 1/16");
    return res;
}

inline CheckResult check_realizable_configs(std::uint64_t) {
    CheckResult res;
    const auto samples = sample_triangles();

    // 30-60-90: hexagon with H(T,P) isomorphic to H5
    {
        const Triangle t(1, kSqrt3, 2);
        bool hexagon = false;
        const auto sets = realizable_point_sets(t, 7);
        for (const auto& p : sets) {
            if (p.points.size() != 6) continue;
            const auto h = congruence_hypergraph(p, t);
            if (h.edge_count() == 12 && is_isomorphic(h, named_graph(GraphName::H5).graph))
                hexagon = true;
        }
        res.evidence["right-30-60-90"]["configs"] = sets.size();
        res.require(hexagon, "regular hexagon with H5 not found for (90,60,30)");
    }
    // golden types: regular pentagon with C5
    for (const auto& s : samples) {
        if (s.name != "golden-108" && s.name != "golden-72") continue;
        bool pentagon = false;
        const auto sets = realizable_point_sets(s.triangle, 7);
        for (const auto& p : sets) {
            if (p.points.size() != 5) continue;
            const auto h = congruence_hypergraph(p, s.triangle);
            if (h.edge_count() == 5 && is_isomorphic(h, named_graph(GraphName::C5).graph))
                pentagon = true;
        }
        res.evidence[s.name]["configs"] = sets.size();
        res.require(pentagon, "regular pentagon with C5 not found for " + s.name);
    }
    // 7-gon type: the regular 7-gon carries 14 congruent triples
    {
        const Triangle t7 = samples[4].triangle;
        bool sevengon = false;
        const auto sets = realizable_point_sets(t7, 7);
        for (const auto& p : sets) {
            if (p.points.size() != 7) continue;
            if (congruence_hypergraph(p, t7).edge_count() == 14 &&
                distance_profile(p).distinct_count() == 3)
                sevengon = true;
        }
        res.evidence["7gon"]["configs"] = sets.size();
        res.require(sevengon, "regular 7-gon with 14 edges not found");
    }
    // generic scalene: nothing beyond the triangle itself
    {
        const auto sets = realizable_point_sets(Triangle(1, 1.1, 1.25), 8);
        res.evidence["generic"]["configs"] = sets.size();
        res.require(sets.size() == 1 && sets[0].points.size() == 3,
                    "generic scalene admits only the 3-point configuration");
    }
    return res;
}

inline CheckResult check_no_size8(std::uint64_t) {
    CheckResult res;
    for (const auto& s : sample_triangles()) {
        const auto sets = realizable_point_sets(s.triangle, 8);
        std::size_t biggest = 0;
        for (const auto& p : sets) biggest = std::max(biggest, p.points.size());
        res.evidence[s.name] = biggest;
        res.require(biggest <= 7, "size-8 complete-shadow configuration for " + s.name);
    }
    return res;
}

inline CheckResult check_construction_counts(std::uint64_t seed) {
    CheckResult res;
    const auto samples = sample_triangles();
    const Triangle right = samples[1].triangle, t120 = samples[3].triangle,
                   t7 = samples[4].triangle, gold = samples[5].triangle,
                   gen = samples[7].triangle, eq = samples[0].triangle;

    const auto check_counts = [&](ConstructionType type, const Triangle& t,
                                  const std::vector<long long>& ns,
                                  const std::function<long long(long long)>& formula,
                                  const std::string& label) {
        for (long long n : ns) {
            const auto c = build_construction(type, t, n);
            const long long counted = count_construction(c, t);
            res.evidence[label][std::to_string(n)] = counted;
            res.require(counted == formula(n), label + " count mismatch at n=" + std::to_string(n));
            const long long sampled = sample_and_recount(c, t, 1e-3, seed + n);
            res.require(sampled == counted,
                        label + " geometric recount mismatch at n=" + std::to_string(n));
        }
    };
    check_counts(ConstructionType::A, right, {4, 8, 12},
                 [](long long n) { return n * n * n / 16; }, "a");
    check_counts(ConstructionType::B, t120, {9, 18},
                 [](long long n) { return 4 * n * n * n / 81; }, "b");
    check_counts(ConstructionType::C, t7, {7, 14},
                 [](long long n) { return 2 * n * n * n / 49; }, "c");
    check_counts(ConstructionType::D, gold, {5, 10},
                 [](long long n) { return n * n * n / 25; }, "d");
    check_counts(ConstructionType::E, gen, {3, 6, 9},
                 [](long long n) { return n * n * n / 27; }, "e");
    check_counts(ConstructionType::Equilateral, eq, {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, s_of_n,
                 "equilateral");
    return res;
}

inline CheckResult check_turan_cancellative(std::uint64_t) {
    CheckResult res;
    const std::vector<ThreeGraph> fam{named_graph(GraphName::F5).graph,
                                      named_graph(GraphName::K4_3minus).graph};
    for (int n = 3; n <= 6; ++n) {
        const auto r = turan_number(n, fam);
        res.evidence["ex"][std::to_string(n)] = r.value;
        res.require(r.value == s_of_n(n), "ex(n) != s(n) at n=" + std::to_string(n));
        bool balanced = false;
        for (const auto& w : r.witnesses)
            if (is_isomorphic(w, balanced_3partite(n)).has_value()) balanced = true;
        res.require(balanced, "no balanced 3-partite witness at n=" + std::to_string(n));
        if (n <= 5)
            res.require(turan_number_exhaustive(n, fam).value == r.value,
                        "sweep disagrees at n=" + std::to_string(n));
    }
    return res;
}

inline CheckResult check_blow_up(std::uint64_t) {
    CheckResult res;
    const Triangle gen(1, 1.1, 1.25);
    const auto v = detail::canonical_vertices(gen, false);
    const PointConfig base{{v[0], v[1], v[2]}};
    const double eps = 1e-3;
    const ToleranceParams params{eps, kDefaultTol};
    const auto count_eps = [&](const PointConfig& p, const Triangle& t) {
        long long c = 0;
        for (int i = 0; i < p.size(); ++i)
            for (int j = i + 1; j < p.size(); ++j)
                for (int k = j + 1; k < p.size(); ++k)
                    if (is_eps_congruent(p.points[i], p.points[j], p.points[k], t, params)) ++c;
        return c;
    };
    const auto doubled = blow_up(base, 2, eps * gen.min_side() / 4);
    res.evidence["triangle_x2"] = count_eps(doubled, gen);
    res.require(count_eps(doubled, gen) == 8, "triangle blow-up count != 8");

    const auto tripled = blow_up(base, 3, eps * gen.min_side() / 4);
    res.evidence["triangle_x3"] = count_eps(tripled, gen);
    res.require(count_eps(tripled, gen) == 27, "triangle blow-up count != 27");

    const Triangle right(1, kSqrt3, 2);
    const auto hex2 = blow_up(regular_ngon(6, 1.0), 2, eps / 8);
    res.evidence["hexagon_x2"] = count_eps(hex2, right);
    res.require(count_eps(hex2, right) == 96, "hexagon blow-up count != 96");
    return res;
}

inline CheckResult check_shinohara(std::uint64_t) {
    CheckResult res;
    for (const auto& s : shinohara_six_point_sets()) {
        const auto prof = distance_profile(s.points);
        res.evidence[s.label] = {{"distances", prof.values}};
        res.require(prof.distinct_count() == 3, s.label + " is not a 3-distance set");
        if (prof.distinct_count() == 3) {
            res.require(std::abs(prof.values[0] - 1.0) <= 1e-9, s.label + " min distance != 1");
            res.require(std::abs(prof.values[1] - s.b) <= 1e-9, s.label + " b mismatch");
            res.require(std::abs(prof.values[2] - s.c) <= 1e-9, s.label + " c mismatch");
        }
    }
    return res;
}

inline CheckResult check_equilateral_values(std::uint64_t) {
    CheckResult res;
    BoundCalculator calc(Triangle(1, 1, 1));
    for (long long n = 3; n <= 12; ++n) {
        const auto r = calc.report(n);
        res.evidence[std::to_string(n)] = {{"lower", r.lower}, {"upper", r.upper}};
        res.require(r.lower == s_of_n(n), "construction count != s(n) at n=" + std::to_string(n));
        res.require(r.upper == static_cast<double>(s_of_n(n)),
                    "upper != s(n) at n=" + std::to_string(n));
    }
    return res;
}

inline CheckResult check_bound_table(std::uint64_t) {
    CheckResult res;
    const auto samples = sample_triangles();
    const std::map<std::string, std::vector<long long>> divisible{
        {"equilateral", {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}},
        {"right-30-60-90", {4, 8, 12}},
        {"right-generic", {4, 8, 12}},
        {"120-30-30", {9}},
        {"7gon", {7, 14}},
        {"golden-108", {5, 10}},
        {"golden-72", {5, 10}},
        {"generic", {3, 6, 9, 12}}};
    const std::map<std::string, Provenance> provenance{
        {"equilateral", Provenance::SelfContained},
        {"right-30-60-90", Provenance::SelfContained},
        {"right-generic", Provenance::ExternalCitation},
        {"120-30-30", Provenance::SelfContained},
        {"7gon", Provenance::ExternalCitation},
        {"golden-108", Provenance::SelfContained},
        {"golden-72", Provenance::SelfContained},
        {"generic", Provenance::SelfContained}};
    for (const auto& s : samples) {
        BoundCalculator calc(s.triangle);
        for (long long n : divisible.at(s.name)) {
            const auto r = calc.report(n);
            const std::string key = s.name + "/" + std::to_string(n);
            res.evidence[key] = {{"lower", r.lower},
                                 {"upper", r.upper},
                                 {"provenance", to_string(r.provenance)}};
            res.require(std::abs(static_cast<double>(r.lower) - r.upper) <= 1e-4,
                        key + ": lower != upper at a divisibility point");
            res.require(r.provenance == provenance.at(s.name), key + ": wrong provenance");
            if (r.provenance == Provenance::ExternalCitation)
                res.require(!r.citation.empty(), key + ": missing citation");
        }
    }
    return res;
}

inline const std::vector<std::pair<std::string, CheckFn>>& checks() {
    static const std::vector<std::pair<std::string, CheckFn>> table{
        {"four-points", check_four_points},
        {"table1-dense", check_table1_dense},
        {"cancellative-equivalence", check_cancellative_equivalence},
        {"five-vertex-classification", check_five_vertex_classification},
        {"complete-shadow-classification", check_complete_shadow_classification},
        {"no-complete-shadow-family-free", check_no_complete_shadow},
        {"h4-uniqueness", check_h4_uniqueness},
        {"forbidden-catalog", check_forbidden_catalog},
        {"lagrangian-closed-forms", check_lagrangian_closed_forms},
        {"h5-lagrangian", check_h5_lagrangian},
        {"realizable-configs", check_realizable_configs},
        {"no-size-8-configs", check_no_size8},
        {"construction-counts", check_construction_counts},
        {"turan-cancellative", check_turan_cancellative},
        {"blow-up", check_blow_up},
        {"shinohara-distance-sets", check_shinohara},
        {"equilateral-exact-values", check_equilateral_values},
        {"bound-table-divisibility", check_bound_table},
    };
    return table;
}

}  // namespace verify_detail

inline std::vector<std::string> lemma_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : verify_detail::checks()) ids.push_back(id);
    return ids;
}

inline VerificationReport run_lemma(const std::string& id, std::uint64_t seed) {
    for (const auto& [name, fn] : verify_detail::checks()) {
        if (name != id) continue;
        const auto start = std::chrono::steady_clock::now();
        VerificationReport report;
        report.lemma = id;
        try {
            auto res = fn(seed);
            report.status = !res.pass ? "fail" : (res.ambiguous ? "ambiguous" : "pass");
            report.evidence = std::move(res.evidence);
        } catch (const AmbiguousDecision& e) {
            report.status = "ambiguous";
            report.evidence = json{{"error", e.what()}};
        }
        report.evidence["seed"] = seed;
        report.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw MalformedInput("unknown lemma id: " + id);
}

inline std::vector<VerificationReport> verify_suite(const std::string& selector,
                                                    std::uint64_t seed) {
    std::vector<VerificationReport> reports;
    if (selector == "all") {
        for (const auto& id : lemma_ids()) reports.push_back(run_lemma(id, seed));
    } else {
        reports.push_back(run_lemma(selector, seed));
    }
    return reports;
}

inline json to_json(const VerificationReport& r) {
    return json{{"evidence", r.evidence},
                {"lemma", r.lemma},
                {"status", r.status},
                {"wall_seconds", r.wall_seconds}};
}

}  // namespace trigon
