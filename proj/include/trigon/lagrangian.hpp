// Hypergraph Lagrangian: polynomial evaluation, projected-gradient ascent
// over the standard simplex with the support-shifting polish, and certified
// upper bounds by branch-and-bound subdivision with outward-rounded
// arithmetic.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "trigon/errors.hpp"
#include "trigon/hypergraph.hpp"

namespace trigon {

struct SimplexWeights {
    std::vector<double> x;

    int size() const { return static_cast<int>(x.size()); }

    static SimplexWeights uniform(int n) {
        return {std::vector<double>(n, 1.0 / n)};
    }

    bool valid(double slack = 1e-12) const {
        double sum = 0.0;
        for (double v : x) {
            if (v < -slack || v > 1.0 + slack) return false;
            sum += v;
        }
        return std::abs(sum - 1.0) <= slack * std::max<double>(1, x.size());
    }
};

inline double evaluate(const ThreeGraph& h, std::span<const double> x) {
    if (static_cast<int>(x.size()) != h.vertex_count())
        throw DimensionMismatch("weight vector length must equal vertex count");
    double sum = 0.0;
    for (const auto& e : h.edges()) sum += x[e[0]] * x[e[1]] * x[e[2]];
    return sum;
}
inline double evaluate(const ThreeGraph& h, const SimplexWeights& w) {
    return evaluate(h, std::span<const double>(w.x));
}

inline std::vector<double> gradient(const ThreeGraph& h, std::span<const double> x) {
    if (static_cast<int>(x.size()) != h.vertex_count())
        throw DimensionMismatch("weight vector length must equal vertex count");
    std::vector<double> g(x.size(), 0.0);
    for (const auto& e : h.edges()) {
        g[e[0]] += x[e[1]] * x[e[2]];
        g[e[1]] += x[e[0]] * x[e[2]];
        g[e[2]] += x[e[0]] * x[e[1]];
    }
    return g;
}

// Euclidean projection onto the simplex (sorted-threshold method).
inline std::vector<double> project_to_simplex(std::vector<double> v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double css = 0.0, theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        css += u[j];
        const double t = (css - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) theta = t;
    }
    for (double& x : v) x = std::max(0.0, x - theta);
    return v;
}

struct LagrangianResult {
    double lower = 0.0;
    SimplexWeights maximizer;
    std::optional<double> certified_upper;
    long long iterations = 0;
    int restarts = 0;
};

namespace detail {

struct AscentOutcome {
    std::vector<double> x;
    double value;
    long long iterations;
};

inline AscentOutcome ascend(const ThreeGraph& h, std::vector<double> x, int max_iters) {
    double fx = evaluate(h, x);
    long long iters = 0;
    for (int it = 0; it < max_iters; ++it) {
        ++iters;
        const auto g = gradient(h, x);
        double step = 1.0;
        bool improved = false;
        while (step > 1e-16) {
            std::vector<double> y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + step * g[i];
            y = project_to_simplex(std::move(y));
            const double fy = evaluate(h, y);
            if (fy > fx) {
                const double gain = fy - fx;
                x = std::move(y);
                fx = fy;
                improved = gain >= 1e-14;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return {std::move(x), fx, iters};
}

// Sum over edges through i of the product of the two other weights.
inline double incident_sum(const ThreeGraph& h, std::span<const double> x, int i) {
    double s = 0.0;
    for (const auto& e : h.edges()) {
        if (e[0] == i) s += x[e[1]] * x[e[2]];
        else if (e[1] == i) s += x[e[0]] * x[e[2]];
        else if (e[2] == i) s += x[e[0]] * x[e[1]];
    }
    return s;
}

// If two positive-weight vertices share no positive-weight edge, shift all
// weight to the one with the larger incident sum (ties to the lower index).
// Never decreases the Lagrangian. Returns true if a shift happened.
inline bool support_shift_once(const ThreeGraph& h, std::vector<double>& x) {
    const double live = 1e-15;
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) {
        if (x[i] <= live) continue;
        for (int j = i + 1; j < n; ++j) {
            if (x[j] <= live) continue;
            bool covered = false;
            for (const auto& e : h.edges()) {
                const bool hi = e[0] == i || e[1] == i || e[2] == i;
                const bool hj = e[0] == j || e[1] == j || e[2] == j;
                if (!hi || !hj) continue;
                const int k = e[0] + e[1] + e[2] - i - j;
                if (x[k] > live) {
                    covered = true;
                    break;
                }
            }
            if (covered) continue;
            const double si = incident_sum(h, x, i), sj = incident_sum(h, x, j);
            if (si >= sj) {
                x[i] += x[j];
                x[j] = 0.0;
            } else {
                x[j] += x[i];
                x[i] = 0.0;
            }
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Multi-start projected-gradient ascent: uniform start, closed-neighborhood
// centroids, and seeded Dirichlet draws up to `restarts` runs, each polished
// by the support-shifting argument.
inline LagrangianResult maximize(const ThreeGraph& h, int restarts = 200, int max_iters = 2000) {
    const int n = h.vertex_count();
    if (restarts < 1) throw Error("maximize needs restarts >= 1");
    if (n == 0 || h.edge_count() == 0) {
        LagrangianResult r;
        r.maximizer.x.assign(std::max(n, 0), 0.0);
        if (n > 0) r.maximizer.x[0] = 1.0;
        r.restarts = 0;
        return r;
    }

    std::vector<std::vector<double>> starts;
    starts.push_back(std::vector<double>(n, 1.0 / n));
    for (int v = 0; v < n; ++v) {
        std::vector<bool> in(n, false);
        in[v] = true;
        for (const auto& e : h.edges())
            if (e[0] == v || e[1] == v || e[2] == v)
                for (int u : e) in[u] = true;
        const int count = static_cast<int>(std::count(in.begin(), in.end(), true));
        if (count < 3) continue;
        std::vector<double> s(n, 0.0);
        for (int u = 0; u < n; ++u)
            if (in[u]) s[u] = 1.0 / count;
        starts.push_back(std::move(s));
    }
    std::mt19937_64 rng(0);
    std::exponential_distribution<double> expo(1.0);
    while (static_cast<int>(starts.size()) < restarts) {
        std::vector<double> s(n);
        double sum = 0.0;
        for (double& v : s) {
            v = expo(rng);
            sum += v;
        }
        for (double& v : s) v /= sum;
        starts.push_back(std::move(s));
    }

    LagrangianResult best;
    best.lower = -1.0;
    best.restarts = static_cast<int>(starts.size());
    for (auto& start : starts) {
        auto run = detail::ascend(h, std::move(start), max_iters);
        // alternate polish and re-ascent while that helps, then settle on a
        // shift fixed point: shifts never decrease the value
        for (int round = 0; round < 2 * n; ++round) {
            if (!detail::support_shift_once(h, run.x)) break;
            auto more = detail::ascend(h, std::move(run.x), max_iters);
            more.iterations += run.iterations;
            run = std::move(more);
        }
        for (int round = 0; round < n; ++round)
            if (!detail::support_shift_once(h, run.x)) break;
        run.value = evaluate(h, run.x);
        best.iterations += run.iterations;
        if (run.value > best.lower) {
            best.lower = run.value;
            best.maximizer.x = run.x;
        }
    }
    return best;
}

namespace detail {

inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
inline double dn(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }

inline double eval_up(const std::vector<std::array<int, 3>>& edges, std::span<const double> x) {
    double acc = 0.0;
    for (const auto& e : edges)
        acc = up(acc + up(up(x[e[0]] * x[e[1]]) * x[e[2]]));
    return acc;
}

inline double eval_dn(const std::vector<std::array<int, 3>>& edges, std::span<const double> x) {
    double acc = 0.0;
    for (const auto& e : edges)
        acc = dn(acc + dn(dn(x[e[0]] * x[e[1]]) * x[e[2]]));
    return acc;
}

struct Cell {
    std::vector<double> lo, hi;
    int depth = 0;
};

// max of g.x over the box intersected with the simplex, by greedy filling in
// decreasing-g order; g >= 0 and the result is rounded outward.
inline double lp_max_up(const std::vector<double>& g, const std::vector<double>& lo,
                        const std::vector<double>& hi) {
    const int n = static_cast<int>(g.size());
    double sum_lo_dn = 0.0;
    for (double v : lo) sum_lo_dn = dn(sum_lo_dn + v);
    double budget = up(1.0 - sum_lo_dn);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g[a] > g[b]; });
    double val = 0.0;
    for (int i : order) val = up(val + up(g[i] * lo[i]));
    for (int i : order) {
        if (budget <= 0.0) break;
        const double room = up(hi[i] - lo[i]);
        const double take = std::min(room, budget);
        if (take > 0.0) {
            val = up(val + up(g[i] * take));
            budget -= take;
        }
    }
    return val;
}

}  // namespace detail

// Proves lambda(h) <= bound by recursive subdivision of the simplex with two
// rigorous per-cell estimates: the multilinear bound sum(u_i u_j u_k) and a
// Taylor/linear-program bound that is second-order tight near maximizers.
// Outward rounding throughout. Returns false when a feasible point beats the
// bound (not certified at this depth is reported by DepthExceeded).
inline bool certify_upper_bound(const ThreeGraph& h, double bound, int depth = 120) {
    if (bound < 0.0) throw Error("certify_upper_bound needs bound >= 0");
    const int n = h.vertex_count();
    const auto edges = h.edges();
    if (edges.empty()) return true;  // zero polynomial

    // quick disproof: best ascent point already beats the bound
    {
        const auto probe = maximize(h, 50, 2000);
        if (probe.lower > bound + 1e-12) return false;
    }

    std::vector<std::vector<int>> link_pairs(n);
    for (std::size_t idx = 0; idx < edges.size(); ++idx)
        for (int rot = 0; rot < 3; ++rot) {
            const int i = edges[idx][rot];
            const int j = edges[idx][(rot + 1) % 3];
            const int k = edges[idx][(rot + 2) % 3];
            link_pairs[i].push_back(j);
            link_pairs[i].push_back(k);
        }

    std::vector<detail::Cell> stack;
    stack.push_back({std::vector<double>(n, 0.0), std::vector<double>(n, 1.0), 0});

    while (!stack.empty()) {
        detail::Cell cell = std::move(stack.back());
        stack.pop_back();

        double sum_lo = 0.0, sum_hi = 0.0;
        for (int i = 0; i < n; ++i) {
            sum_lo = detail::dn(sum_lo + cell.lo[i]);
            sum_hi = detail::up(sum_hi + cell.hi[i]);
        }
        if (sum_lo > 1.0 || sum_hi < 1.0) continue;

        // box consistency with the simplex constraint
        bool infeasible = false;
        for (int i = 0; i < n; ++i) {
            double rest_lo = 0.0, rest_hi = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                rest_lo = detail::dn(rest_lo + cell.lo[j]);
                rest_hi = detail::up(rest_hi + cell.hi[j]);
            }
            cell.hi[i] = std::min(cell.hi[i], std::max(0.0, detail::up(1.0 - rest_lo)));
            cell.lo[i] = std::max(cell.lo[i], std::max(0.0, detail::dn(1.0 - rest_hi)));
            if (cell.lo[i] > cell.hi[i]) {
                infeasible = true;
                break;
            }
        }
        if (infeasible) continue;

        // multilinear bound
        double multi = 0.0;
        for (const auto& e : edges)
            multi = detail::up(multi + detail::up(detail::up(cell.hi[e[0]] * cell.hi[e[1]]) * cell.hi[e[2]]));
        if (multi <= bound) continue;

        // Taylor bound around the cell center
        std::vector<double> center(n);
        for (int i = 0; i < n; ++i) center[i] = 0.5 * (cell.lo[i] + cell.hi[i]);
        const double f_up = detail::eval_up(edges, center);
        std::vector<double> g_up(n, 0.0), g_dn(n, 0.0);
        for (const auto& e : edges)
            for (int rot = 0; rot < 3; ++rot) {
                const int i = e[rot], j = e[(rot + 1) % 3], k = e[(rot + 2) % 3];
                g_up[i] = detail::up(g_up[i] + detail::up(center[j] * center[k]));
                g_dn[i] = detail::dn(g_dn[i] + detail::dn(center[j] * center[k]));
            }
        const double lp = detail::lp_max_up(g_up, cell.lo, cell.hi);
        double base = 0.0;
        for (int i = 0; i < n; ++i) base = detail::dn(base + detail::dn(g_dn[i] * center[i]));
        double lambda_bound = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int v : link_pairs[i]) row = detail::up(row + cell.hi[v]);
            lambda_bound = std::max(lambda_bound, row);
        }
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double half = 0.5 * (cell.hi[i] - cell.lo[i]);
            r2 = detail::up(r2 + detail::up(half * half));
        }
        const double taylor =
            detail::up(f_up + detail::up(detail::up(lp - base) +
                                         detail::up(0.5 * detail::up(lambda_bound * r2))));
        if (taylor <= bound) continue;

        // feasible witness beating the bound disproves it outright
        {
            const auto w = project_to_simplex(center);
            if (evaluate(h, w) > bound + 1e-12) return false;
        }

        if (cell.depth >= depth)
            throw DepthExceeded("certification cells unresolved at max depth");
        int widest = 0;
        double width = -1.0;
        for (int i = 0; i < n; ++i)
            if (cell.hi[i] - cell.lo[i] > width) {
                width = cell.hi[i] - cell.lo[i];
                widest = i;
            }
        const double mid = 0.5 * (cell.lo[widest] + cell.hi[widest]);
        detail::Cell left = cell, right = cell;
        left.hi[widest] = mid;
        right.lo[widest] = mid;
        left.depth = right.depth = cell.depth + 1;
        stack.push_back(std::move(left));
        stack.push_back(std::move(right));
    }
    return true;
}

}  // namespace trigon
