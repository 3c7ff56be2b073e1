#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "trigon/geometry.hpp"
#include "trigon/named_graphs.hpp"

using namespace trigon;

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

// Independent circle-circle oracle: parametrize the first circle by angle and
// bisect sign changes of the distance defect to the second circle. Stays away
// from the closed-form path used by the implementation.
std::vector<Vec2> oracle_circle_intersections(Vec2 c1, double r1, Vec2 c2, double r2) {
    const auto defect = [&](double th) {
        Vec2 p{c1.x + r1 * std::cos(th), c1.y + r1 * std::sin(th)};
        return distance(p, c2) - r2;
    };
    std::vector<Vec2> out;
    const int steps = 20000;
    const double h = 2.0 * std::numbers::pi / steps;
    for (int i = 0; i < steps; ++i) {
        double lo = i * h, hi = (i + 1) * h;
        double flo = defect(lo), fhi = defect(hi);
        double root = std::numeric_limits<double>::quiet_NaN();
        if (flo == 0.0) root = lo;
        else if (flo * fhi < 0.0) {
            for (int it = 0; it < 200; ++it) {
                const double mid = (lo + hi) / 2, fm = defect(mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            root = (lo + hi) / 2;
        } else if (std::abs(flo) < 1e-13 && std::abs(flo) <= std::abs(fhi)) {
            root = lo;  // tangency grazing without sign change
        }
        if (!std::isnan(root)) {
            Vec2 p{c1.x + r1 * std::cos(root), c1.y + r1 * std::sin(root)};
            bool dup = false;
            for (const auto& q : out)
                if (distance(p, q) < 1e-6) dup = true;
            if (!dup) out.push_back(p);
        }
    }
    return out;
}

std::size_t oracle_candidate_count(Vec2 p, Vec2 q, const std::vector<double>& dists) {
    std::vector<Vec2> all;
    for (double r1 : dists)
        for (double r2 : dists)
            for (const auto& pt : oracle_circle_intersections(p, r1, q, r2)) {
                bool dup = false;
                for (const auto& s : all)
                    if (distance(pt, s) < 1e-6) dup = true;
                if (!dup) all.push_back(pt);
            }
    return all.size();
}

}  // namespace

TEST_CASE("classify_triangle recognizes the named types") {
    CHECK(classify_triangle(Triangle(1.0, kSqrt3, 2.0)) == TriangleType::Right306090);
    CHECK(classify_triangle(Triangle(1.0, 1.0, 1.0)) == TriangleType::Equilateral);
    // law of cosines: cos(largest angle) = (1+1-3)/2 = -1/2, i.e. 120 degrees
    CHECK(classify_triangle(Triangle(1.0, 1.0, kSqrt3)) == TriangleType::T120_30_30);
    CHECK(classify_triangle(Triangle(1.0, 2.0, std::sqrt(5.0))) == TriangleType::Right);
    CHECK(classify_triangle(Triangle(1.0, 1.1, 1.25)) == TriangleType::Generic);

    const double s5 = 2 * std::sin(std::numbers::pi / 5);   // pentagon side
    const double d5 = 2 * std::sin(2 * std::numbers::pi / 5);  // pentagon diagonal
    CHECK(classify_triangle(Triangle(s5, s5, d5)) == TriangleType::Golden108);
    CHECK(classify_triangle(Triangle(s5, d5, d5)) == TriangleType::Golden72);

    const double a7 = 2 * std::sin(std::numbers::pi / 7);
    const double b7 = 2 * std::sin(2 * std::numbers::pi / 7);
    const double c7 = 2 * std::sin(3 * std::numbers::pi / 7);
    CHECK(classify_triangle(Triangle(a7, b7, c7)) == TriangleType::T7gon);

    CHECK_THROWS_AS(Triangle(1.0, 1.0, 2.0), DegenerateTriangle);
    CHECK_THROWS_AS(Triangle(1.0, 1.0, 2.5), DegenerateTriangle);
}

TEST_CASE("classification flags borderline side data") {
    // c deviates from sqrt(3) enough to flip between fine and coarse checks
    const Classification amb = classify_triangle_checked(Triangle(1.0, 1.0, 1.7321));
    CHECK(amb.borderline);
    const Classification ok = classify_triangle_checked(Triangle(1.0, 1.0, 1.7320508));
    CHECK(ok.type == TriangleType::T120_30_30);
    CHECK_FALSE(ok.borderline);
}

TEST_CASE("circle_intersections closed form matches the bisection oracle") {
    const auto pts = circle_intersections({0, 0}, 2, {2, 0}, 2);
    REQUIRE(pts.size() == 2);
    const auto oracle = oracle_circle_intersections({0, 0}, 2, {2, 0}, 2);
    REQUIRE(oracle.size() == 2);
    for (const auto& p : pts) {
        CHECK(std::abs(p.x - 1.0) < 1e-9);
        CHECK(std::abs(std::abs(p.y) - kSqrt3) < 1e-9);
        double best = 1e9;
        for (const auto& q : oracle) best = std::min(best, distance(p, q));
        CHECK(best < 1e-6);
    }

    const auto tangent = circle_intersections({0, 0}, 1, {2, 0}, 1);
    REQUIRE(tangent.size() == 1);
    CHECK(distance(tangent[0], {1, 0}) < 1e-9);

    CHECK(circle_intersections({0, 0}, 1, {3, 0}, 1).empty());
    CHECK_THROWS_AS(circle_intersections({0, 0}, 1, {0, 0}, 2), ConcentricCircles);
}

TEST_CASE("candidate_positions enumerates all admissible third points") {
    const auto two = candidate_positions({0, 0}, {2, 0}, {2.0});
    REQUIRE(two.size() == 2);
    for (const auto& p : two) {
        CHECK(std::abs(p.x - 1.0) < 1e-9);
        CHECK(std::abs(std::abs(p.y) - kSqrt3) < 1e-9);
    }

    // Frozen from the bisection oracle: 17 points at |pq| = 2 and 10 at
    // |pq| = 3 (two tangencies, four empty radius pairs).
    const std::vector<double> dists{1.0, kSqrt3, 2.0};
    CHECK(oracle_candidate_count({0, 0}, {2, 0}, dists) == 17);
    CHECK(candidate_positions({0, 0}, {2, 0}, dists).size() == 17);
    CHECK(oracle_candidate_count({0, 0}, {3, 0}, dists) == 10);
    CHECK(candidate_positions({0, 0}, {3, 0}, dists).size() == 10);

    CHECK(candidate_positions({0, 0}, {5, 0}, {1.0}).empty());
}

TEST_CASE("candidate_positions invariants: size bound and recheck") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-3.0, 3.0), len(0.5, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        Vec2 p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)};
        if (distance(p, q) < 0.1) continue;
        std::vector<double> dists{len(rng), len(rng), len(rng)};
        const auto pts = candidate_positions(p, q, dists);
        CHECK(pts.size() <= 18);
        for (const auto& r : pts) {
            double dev_p = 1e9, dev_q = 1e9;
            for (double d : dists) {
                dev_p = std::min(dev_p, std::abs(distance(r, p) - d));
                dev_q = std::min(dev_q, std::abs(distance(r, q) - d));
            }
            CHECK(dev_p <= 2 * kDefaultTol);
            CHECK(dev_q <= 2 * kDefaultTol);
        }
    }
}

TEST_CASE("is_congruent matches side multisets and rejects degenerate triples") {
    const Triangle unit(1, 1, 1);
    CHECK(is_congruent({0, 0}, {1, 0}, {0.5, kSqrt3 / 2}, unit));
    CHECK(is_congruent({0, 0}, {1, 0}, {0, kSqrt3}, Triangle(1, kSqrt3, 2)));
    CHECK_FALSE(is_congruent({0, 0}, {1, 0}, {0, 1}, unit));
    CHECK_FALSE(is_congruent({0, 0}, {1, 0}, {2, 0}, Triangle(1, 1, 2.0 - 1e-12, 1e-13)));
}

TEST_CASE("is_congruent is invariant under rigid motions and reflections") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi), shift(-5, 5);
    const Triangle t(1, kSqrt3, 2);
    const Vec2 p{0, 0}, q{1, 0}, r{0, kSqrt3};
    for (int trial = 0; trial < 500; ++trial) {
        const double th = angle(rng);
        const Vec2 off{shift(rng), shift(rng)};
        const bool reflect = trial % 2 == 0;
        const auto move = [&](Vec2 v) {
            if (reflect) v.y = -v.y;
            return rotated(v, th) + off;
        };
        CHECK(is_congruent(move(p), move(q), move(r), t));
    }
}

TEST_CASE("is_eps_congruent decides the registration question") {
    const Triangle unit(1, 1, 1);
    const ToleranceParams params{0.01, kDefaultTol};

    CHECK(is_eps_congruent({0, 0}, {1, 0}, {0.5, kSqrt3 / 2}, unit, params));

    // identity placement leaves a residual of 0.4 * eps_prime
    const double eps = params.eps;
    CHECK(is_eps_congruent({0, 0}, {1, 0}, {0.5, kSqrt3 / 2 + 0.4 * eps}, unit, params));
    // and 4 * eps_prime is out of reach of any rigid motion
    CHECK_FALSE(is_eps_congruent({0, 0}, {1, 0}, {0.5, kSqrt3 / 2 + 4.0 * eps}, unit, params));

    CHECK_FALSE(is_eps_congruent({0, 0}, {10, 0}, {5, 5 * kSqrt3}, unit, params));
}

TEST_CASE("congruence_hypergraph on the regular hexagon is H5") {
    const PointConfig hex = regular_ngon(6, 1.0);
    const Triangle t(1, kSqrt3, 2);
    const ThreeGraph h = congruence_hypergraph(hex, t);
    CHECK(h.edge_count() == 12);
    CHECK(h == named_graph(GraphName::H5).graph);
}

TEST_CASE("congruence_hypergraph on the regular pentagon is C5") {
    const PointConfig pent = regular_ngon(5, 1.0);
    const double s = 2 * std::sin(std::numbers::pi / 5), d = 2 * std::sin(2 * std::numbers::pi / 5);
    const ThreeGraph h = congruence_hypergraph(pent, Triangle(s, s, d));
    CHECK(h.edge_count() == 5);
    CHECK(h == named_graph(GraphName::C5).graph);
}

TEST_CASE("congruence_hypergraph edge cases") {
    const PointConfig collinear{{{0, 0}, {1, 0}, {2, 0}}};
    CHECK(congruence_hypergraph(collinear, Triangle(1, 1, 1)).edge_count() == 0);

    const PointConfig dup{{{0, 0}, {0, 0}, {1, 0}}};
    CHECK_THROWS_AS(congruence_hypergraph(dup, Triangle(1, 1, 1)), CoincidentPoints);
}

TEST_CASE("exact congruence edges are a subset of eps-congruence edges") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    const Triangle t(1, kSqrt3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        PointConfig p;
        for (int i = 0; i < 6; ++i) p.points.push_back({coord(rng), coord(rng)});
        p.points[1] = p.points[0] + Vec2{1, 0};
        p.points[2] = p.points[0] + Vec2{0, kSqrt3};
        ToleranceParams params{0.02, kDefaultTol};
        const auto exact = congruence_hypergraph(p, t, params, CongruenceMode::Exact);
        const auto fuzzy = congruence_hypergraph(p, t, params, CongruenceMode::Eps);
        for (const auto& e : exact.edges()) CHECK(fuzzy.has_edge(e[0], e[1], e[2]));
    }
}

TEST_CASE("distance_profile clusters pairwise distances") {
    CHECK(distance_profile(regular_ngon(5, 1.0)).distinct_count() == 2);
    CHECK(distance_profile(regular_ngon(7, 1.0)).distinct_count() == 3);
    CHECK(distance_profile(PointConfig{{{0, 0}, {3, 4}}}).distinct_count() == 1);
}

TEST_CASE("distance_profile scales homogeneously") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coord(-2.0, 2.0), scale(0.25, 4.0);
    for (int trial = 0; trial < 50; ++trial) {
        PointConfig p;
        for (int i = 0; i < 5; ++i) p.points.push_back({coord(rng), coord(rng)});
        const double k = scale(rng);
        PointConfig q;
        for (const auto& v : p.points) q.points.push_back(v * k);
        const auto dp = distance_profile(p), dq = distance_profile(q);
        REQUIRE(dp.values.size() == dq.values.size());
        CHECK(dp.multiplicity == dq.multiplicity);
        for (std::size_t i = 0; i < dp.values.size(); ++i)
            CHECK_THAT(dq.values[i], Catch::Matchers::WithinAbs(dp.values[i] * k, 1e-7 * k));
    }
}

TEST_CASE("diameter_min_ratio basics and the four-point lower bound") {
    CHECK_THAT(diameter_min_ratio(PointConfig{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}),
               Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-12));
    CHECK_THAT(diameter_min_ratio(regular_ngon(3, 1.0)), Catch::Matchers::WithinAbs(1.0, 1e-12));

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    for (int trial = 0; trial < 20000; ++trial) {
        PointConfig p;
        for (int i = 0; i < 4; ++i) p.points.push_back({coord(rng), coord(rng)});
        bool distinct = true;
        for (int i = 0; i < 4 && distinct; ++i)
            for (int j = i + 1; j < 4 && distinct; ++j)
                if (distance(p.points[i], p.points[j]) < 1e-12) distinct = false;
        if (!distinct) continue;
        CHECK(diameter_min_ratio(p) >= std::sqrt(2.0) - 1e-9);
    }
}
