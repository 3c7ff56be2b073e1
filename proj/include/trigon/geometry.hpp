// Exact-tolerance planar primitives: distances, circle intersections,
// congruence and eps-congruence tests, distance profiles and candidate
// positions. All decisions use an absolute length tolerance (default 1e-9)
// with a coarse recheck band that flags borderline calls instead of silently
// choosing a side.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trigon/errors.hpp"
#include "trigon/hypergraph.hpp"

namespace trigon {

inline constexpr double kDefaultTol = 1e-9;
// Residuals in [tol, kBorderlineFactor*tol] are treated as borderline.
inline constexpr double kBorderlineFactor = 1e3;
// Angle tolerance (degrees) for triangle classification.
inline constexpr double kAngleTolDeg = 1e-5;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 rotated(Vec2 v, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

enum class TriangleType {
    Equilateral,
    Right306090,  // (90, 60, 30); sub-case of Right
    Right,
    T120_30_30,
    T7gon,  // (4*180/7, 2*180/7, 180/7)
    Golden108,
    Golden72,
    Generic,
};

inline std::string to_string(TriangleType t) {
    switch (t) {
        case TriangleType::Equilateral: return "equilateral";
        case TriangleType::Right306090: return "right-30-60-90";
        case TriangleType::Right: return "right";
        case TriangleType::T120_30_30: return "120-30-30";
        case TriangleType::T7gon: return "7gon";
        case TriangleType::Golden108: return "golden-108";
        case TriangleType::Golden72: return "golden-72";
        case TriangleType::Generic: return "generic";
    }
    return "generic";
}

// A triangle given by its three side lengths, stored sorted ascending.
class Triangle {
public:
    Triangle(double s1, double s2, double s3, double tol = kDefaultTol) : sides_{s1, s2, s3} {
        std::sort(sides_.begin(), sides_.end());
        if (!(sides_[0] > 0.0) || !std::isfinite(sides_[2]))
            throw DegenerateTriangle("sides must be positive finite lengths");
        if (sides_[0] + sides_[1] <= sides_[2] + tol)
            throw DegenerateTriangle("triangle inequality violated");
    }
    explicit Triangle(const std::array<double, 3>& s, double tol = kDefaultTol)
        : Triangle(s[0], s[1], s[2], tol) {}

    double a() const { return sides_[0]; }
    double b() const { return sides_[1]; }
    double c() const { return sides_[2]; }
    const std::array<double, 3>& sides() const { return sides_; }
    double min_side() const { return sides_[0]; }

    // Interior angles in degrees, sorted descending (opposite c, b, a).
    std::array<double, 3> angles_deg() const {
        const double a2 = sides_[0] * sides_[0], b2 = sides_[1] * sides_[1],
                     c2 = sides_[2] * sides_[2];
        const auto deg = [](double cosv) {
            return std::acos(std::clamp(cosv, -1.0, 1.0)) * 180.0 / std::numbers::pi;
        };
        return {deg((a2 + b2 - c2) / (2 * sides_[0] * sides_[1])),
                deg((a2 + c2 - b2) / (2 * sides_[0] * sides_[2])),
                deg((b2 + c2 - a2) / (2 * sides_[1] * sides_[2]))};
    }

    Triangle scaled(double k) const { return Triangle(sides_[0] * k, sides_[1] * k, sides_[2] * k); }

    bool operator==(const Triangle&) const = default;

private:
    std::array<double, 3> sides_;
};

namespace detail {

inline TriangleType classify_by_angles(const std::array<double, 3>& ang, double tol_deg) {
    const auto near = [tol_deg](double x, double target) { return std::abs(x - target) <= tol_deg; };
    const double alpha = ang[0], beta = ang[1];
    if (near(alpha, 60.0) && near(beta, 60.0)) return TriangleType::Equilateral;
    if (near(alpha, 90.0) && near(beta, 60.0)) return TriangleType::Right306090;
    if (near(alpha, 90.0)) return TriangleType::Right;
    if (near(alpha, 120.0) && near(beta, 30.0)) return TriangleType::T120_30_30;
    if (near(alpha, 4.0 * 180.0 / 7.0) && near(beta, 2.0 * 180.0 / 7.0)) return TriangleType::T7gon;
    if (near(alpha, 108.0) && near(beta, 36.0)) return TriangleType::Golden108;
    if (near(alpha, 72.0) && near(beta, 72.0)) return TriangleType::Golden72;
    return TriangleType::Generic;
}

}  // namespace detail

inline TriangleType classify_triangle(const Triangle& t, double tol_deg = kAngleTolDeg) {
    return detail::classify_by_angles(t.angles_deg(), tol_deg);
}

inline TriangleType classify_triangle(const std::array<double, 3>& sides, double tol = kDefaultTol,
                                      double tol_deg = kAngleTolDeg) {
    return classify_triangle(Triangle(sides, tol), tol_deg);
}

struct Classification {
    TriangleType type;
    // Set when the decision flips between the fine tolerance and the coarse
    // recheck at kBorderlineFactor times the tolerance.
    bool borderline;
};

inline Classification classify_triangle_checked(const Triangle& t, double tol_deg = kAngleTolDeg) {
    const auto ang = t.angles_deg();
    const TriangleType fine = detail::classify_by_angles(ang, tol_deg);
    const TriangleType coarse = detail::classify_by_angles(ang, tol_deg * kBorderlineFactor);
    return {fine, fine != coarse};
}

// eps is the relative congruence slack; tol the absolute length tolerance.
struct ToleranceParams {
    double eps = 1e-3;
    double tol = kDefaultTol;

    double eps_prime(const Triangle& t) const { return eps * t.min_side(); }
};

struct PointConfig {
    std::vector<Vec2> points;
    bool allow_coincident = false;

    int size() const { return static_cast<int>(points.size()); }
};

inline PointConfig regular_ngon(int k, double circumradius) {
    PointConfig p;
    p.points.reserve(k);
    for (int i = 0; i < k; ++i) {
        const double th = 2.0 * std::numbers::pi * i / k - std::numbers::pi / 2.0;
        p.points.push_back({circumradius * std::cos(th), circumradius * std::sin(th)});
    }
    return p;
}

// Sorted distinct pairwise distances after tolerance clustering. Two reported
// values always differ by more than 2*tol.
struct DistanceProfile {
    std::vector<double> values;
    std::vector<int> multiplicity;

    int distinct_count() const { return static_cast<int>(values.size()); }
};

inline DistanceProfile distance_profile(const PointConfig& p, double tol = kDefaultTol) {
    std::vector<double> ds;
    for (std::size_t i = 0; i < p.points.size(); ++i)
        for (std::size_t j = i + 1; j < p.points.size(); ++j)
            ds.push_back(distance(p.points[i], p.points[j]));
    std::sort(ds.begin(), ds.end());
    DistanceProfile out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= ds.size(); ++i) {
        if (i == ds.size() || ds[i] - ds[i - 1] > 2 * tol) {
            double sum = 0.0;
            for (std::size_t k = start; k < i; ++k) sum += ds[k];
            out.values.push_back(sum / static_cast<double>(i - start));
            out.multiplicity.push_back(static_cast<int>(i - start));
            start = i;
        }
    }
    return out;
}

inline double diameter_min_ratio(const PointConfig& p) {
    if (p.points.size() < 2) throw Error("diameter_min_ratio needs at least 2 points");
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < p.points.size(); ++i)
        for (std::size_t j = i + 1; j < p.points.size(); ++j) {
            const double d = distance(p.points[i], p.points[j]);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
    if (lo <= 0.0) throw CoincidentPoints("points must be distinct");
    return hi / lo;
}

// The 0, 1 or 2 intersection points of two circles, in closed form. Center
// distances within tol of r1+r2 or |r1-r2| count as tangency (one point).
inline std::vector<Vec2> circle_intersections(Vec2 c1, double r1, Vec2 c2, double r2,
                                              double tol = kDefaultTol) {
    const double d = distance(c1, c2);
    if (d <= tol) throw ConcentricCircles("circle centers coincide within tol");
    const double sum = r1 + r2, dif = std::abs(r1 - r2);
    const Vec2 axis = (c2 - c1) / d;
    const double a = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
    if (std::abs(d - sum) <= tol || std::abs(d - dif) <= tol)
        return {c1 + axis * a};
    if (d > sum || d < dif) return {};
    const double h2 = r1 * r1 - a * a;
    const double h = std::sqrt(std::max(0.0, h2));
    const Vec2 mid = c1 + axis * a;
    const Vec2 perp{-axis.y, axis.x};
    return {mid + perp * h, mid - perp * h};
}

// All points whose distances to p and to q both lie in dists, deduplicated
// within tol. At most 2*|dists|^2 points.
inline std::vector<Vec2> candidate_positions(Vec2 p, Vec2 q, const std::vector<double>& dists,
                                             double tol = kDefaultTol) {
    if (dists.empty()) throw Error("candidate_positions needs a nonempty distance set");
    std::vector<Vec2> out;
    for (double r1 : dists) {
        for (double r2 : dists) {
            for (const Vec2& pt : circle_intersections(p, r1, q, r2, tol)) {
                bool dup = false;
                for (const Vec2& seen : out)
                    if (distance(pt, seen) <= tol) {
                        dup = true;
                        break;
                    }
                if (!dup) out.push_back(pt);
            }
        }
    }
    return out;
}

// Max deviation of the sorted side lengths of pqr from the sides of t;
// +inf for (near-)collinear triples.
inline double congruence_residual(Vec2 p, Vec2 q, Vec2 r, const Triangle& t,
                                  double tol = kDefaultTol) {
    std::array<double, 3> s{distance(p, q), distance(p, r), distance(q, r)};
    std::sort(s.begin(), s.end());
    if (std::abs(cross(q - p, r - p)) <= tol)
        return std::numeric_limits<double>::infinity();
    double res = 0.0;
    for (int i = 0; i < 3; ++i) res = std::max(res, std::abs(s[i] - t.sides()[i]));
    return res;
}

// Congruence up to rigid motion and reflection: sorted side lengths match
// within tol. Degenerate triples are never congruent.
inline bool is_congruent(Vec2 p, Vec2 q, Vec2 r, const Triangle& t, double tol = kDefaultTol) {
    return congruence_residual(p, q, r, t, tol) <= tol;
}

namespace detail {

// Canonical placement of t: A at the origin, B at (c, 0), C in the upper
// half-plane (or lower when mirrored).
inline std::array<Vec2, 3> canonical_vertices(const Triangle& t, bool mirrored) {
    const double a = t.a(), b = t.b(), c = t.c();
    const double cx = (b * b - a * a + c * c) / (2 * c);
    const double cy = std::sqrt(std::max(0.0, b * b - cx * cx));
    return {Vec2{0, 0}, Vec2{c, 0}, Vec2{cx, mirrored ? -cy : cy}};
}

// Radius of the smallest circle enclosing three points: the minimax
// translation residual for a fixed rotation.
inline double min_enclosing_radius3(Vec2 a, Vec2 b, Vec2 c) {
    const double slack = 1e-12;
    double best = std::numeric_limits<double>::infinity();
    const std::array<std::array<Vec2, 3>, 3> pairs{{{a, b, c}, {a, c, b}, {b, c, a}}};
    for (const auto& pr : pairs) {
        const Vec2 center = (pr[0] + pr[1]) / 2.0;
        const double rad = distance(pr[0], pr[1]) / 2.0;
        if (distance(center, pr[2]) <= rad + slack) best = std::min(best, rad);
    }
    if (best < std::numeric_limits<double>::infinity()) return best;
    // circumcircle
    const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-300) return best;  // collinear; pair circles covered it
    const double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    const Vec2 u{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                 (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return distance(u, a);
}

// Minimax registration error of src onto a rotated+translated copy of dst,
// as a function of the rotation angle.
inline double registration_error_at(const std::array<Vec2, 3>& src, const std::array<Vec2, 3>& dst,
                                    double theta) {
    std::array<Vec2, 3> disp;
    for (int i = 0; i < 3; ++i) disp[i] = src[i] - rotated(dst[i], theta);
    return min_enclosing_radius3(disp[0], disp[1], disp[2]);
}

inline double golden_refine(const std::array<Vec2, 3>& src, const std::array<Vec2, 3>& dst,
                            double lo, double hi) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = registration_error_at(src, dst, x1);
    double f2 = registration_error_at(src, dst, x2);
    while (hi - lo > 1e-12) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = registration_error_at(src, dst, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = registration_error_at(src, dst, x2);
        }
    }
    return std::min(f1, f2);
}

// Least-squares rigid alignment (centroid + closed-form rotation). Gives an
// upper bound on the minimax error and a good rotation seed.
inline double least_squares_angle(const std::array<Vec2, 3>& src, const std::array<Vec2, 3>& dst) {
    const Vec2 cs = (src[0] + src[1] + src[2]) / 3.0;
    const Vec2 cd = (dst[0] + dst[1] + dst[2]) / 3.0;
    double sx = 0.0, sc = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Vec2 u = dst[i] - cd, v = src[i] - cs;
        sc += dot(u, v);
        sx += cross(u, v);
    }
    return std::atan2(sx, sc);
}

// Global minimum over rotation of the minimax registration error for one
// labeled correspondence: 64 equispaced seeds plus the least-squares angle,
// golden-section refinement to 1e-12 angle resolution around local minima.
inline double registration_error_minimax(const std::array<Vec2, 3>& src,
                                         const std::array<Vec2, 3>& dst) {
    constexpr int kSeeds = 64;
    const double step = 2.0 * std::numbers::pi / kSeeds;
    std::array<double, kSeeds> f;
    for (int i = 0; i < kSeeds; ++i) f[i] = registration_error_at(src, dst, i * step);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kSeeds; ++i) {
        const double prev = f[(i + kSeeds - 1) % kSeeds], next = f[(i + 1) % kSeeds];
        if (f[i] <= prev && f[i] <= next)
            best = std::min(best, golden_refine(src, dst, (i - 1) * step, (i + 1) * step));
    }
    const double ls = least_squares_angle(src, dst);
    best = std::min(best, golden_refine(src, dst, ls - step, ls + step));
    return best;
}

}  // namespace detail

// Minimum over all vertex labelings and both orientations of the minimax
// rigid-registration error of (p,q,r) onto a congruent copy of t.
inline double eps_congruence_error(Vec2 p, Vec2 q, Vec2 r, const Triangle& t) {
    const std::array<Vec2, 3> src{p, q, r};
    double best = std::numeric_limits<double>::infinity();
    for (bool mirrored : {false, true}) {
        const auto base = detail::canonical_vertices(t, mirrored);
        std::array<int, 3> s{0, 1, 2};
        do {
            const std::array<Vec2, 3> dst{base[s[0]], base[s[1]], base[s[2]]};
            // cheap sound shortcut: least-squares alignment residual
            const double ang = detail::least_squares_angle(src, dst);
            double ls = 0.0;
            {
                Vec2 cs = (src[0] + src[1] + src[2]) / 3.0;
                std::array<Vec2, 3> rot;
                Vec2 cr{0, 0};
                for (int i = 0; i < 3; ++i) {
                    rot[i] = rotated(dst[i], ang);
                    cr = cr + rot[i] / 3.0;
                }
                for (int i = 0; i < 3; ++i)
                    ls = std::max(ls, distance(src[i], rot[i] + cs - cr));
            }
            best = std::min(best, ls);
            best = std::min(best, detail::registration_error_minimax(src, dst));
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return best;
}

// True iff (p,q,r) fit within disks of radius eps_prime around the vertices
// of some placed congruent copy of t, for some vertex labeling. Complete up
// to a documented margin of 1e-6 * eps_prime around the threshold.
inline bool is_eps_congruent(Vec2 p, Vec2 q, Vec2 r, const Triangle& t,
                             const ToleranceParams& params) {
    const double epsp = params.eps_prime(t);
    if (!(epsp > 0.0)) throw Error("eps_prime must be positive");
    // necessary side-length window (triangle-inequality argument)
    std::array<double, 3> s{distance(p, q), distance(p, r), distance(q, r)};
    std::sort(s.begin(), s.end());
    for (int i = 0; i < 3; ++i)
        if (std::abs(s[i] - t.sides()[i]) > 2 * epsp + 10 * params.tol) return false;
    return eps_congruence_error(p, q, r, t) <= epsp;
}

enum class CongruenceMode { Exact, Eps };

// H(T,P) (exact mode) or H(T,P,eps) (eps mode): one vertex per point, one
// edge per triple congruent (or eps-congruent) to t.
inline ThreeGraph congruence_hypergraph(const PointConfig& p, const Triangle& t,
                                        const ToleranceParams& params = {},
                                        CongruenceMode mode = CongruenceMode::Exact) {
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (distance(p.points[i], p.points[j]) <= params.tol)
                throw CoincidentPoints("congruence_hypergraph requires distinct points");
    ThreeGraph h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const bool edge =
                    mode == CongruenceMode::Exact
                        ? is_congruent(p.points[i], p.points[j], p.points[k], t, params.tol)
                        : is_eps_congruent(p.points[i], p.points[j], p.points[k], t, params);
                if (edge) h.add_edge(i, j, k);
            }
    return h;
}

}  // namespace trigon
