// Command-line front end: subcommand parsing, JSON output, exit-code policy
// (0 success, 2 validation error, 3 ambiguous numeric verdict), and the
// optional result cache keyed by (command, inputs, toolkit version).
#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigon/json_io.hpp"
#include "trigon/verify.hpp"

namespace trigon {

inline constexpr const char* kVersion = "1.0.0";

namespace cli_detail {

inline Triangle parse_sides(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            vals.push_back(std::stod(item, &used));
            if (used != item.size()) throw MalformedInput("bad side value: " + item);
        } catch (const std::exception&) {
            throw MalformedInput("bad side value: " + item);
        }
    }
    if (vals.size() != 3) throw MalformedInput("--sides needs three comma-separated lengths");
    try {
        return Triangle(vals[0], vals[1], vals[2]);
    } catch (const DegenerateTriangle& e) {
        throw MalformedInput(std::string("invalid triangle: ") + e.what());
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedInput("invalid JSON in " + path + ": " + e.what());
    }
}

inline ThreeGraph resolve_graph(const std::string& spec) {
    if (const auto name = graph_name_from_string(spec)) return named_graph(*name).graph;
    return three_graph_from_json(load_json_file(spec));
}

inline std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::optional<std::filesystem::path> cache_path(const std::vector<std::string>& args) {
    const char* dir = std::getenv("TRIGON_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::string key = kVersion;
    for (const auto& a : args) {
        key.push_back('\x1f');
        key += a;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(key)));
    return std::filesystem::path(dir) / (std::string("trigon-") + hex + ".json");
}

}  // namespace cli_detail

// Runs one subcommand; JSON payload on `out`, diagnostics on `err`.
// Exit codes: 0 success, 2 validation error, 3 ambiguous numeric verdict.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"verification toolkit for congruence hypergraphs of planar point sets"};
    app.name("trigon");
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    int jobs = 1;
    app.add_option("--seed", seed, "seed for randomized procedures");
    app.add_option("--jobs", jobs, "cap on worker threads")->check(CLI::PositiveNumber);

    std::string sides_csv, points_file, graph_spec, mode = "exact", emit_file, lemma = "all";
    std::string construct_type, forbid_csv;
    double eps = 1e-3;
    double certify_bound = -1.0;
    int restarts = 200, depth = 120;
    long long bound_n = 0;
    int enum_n = 5, min_edges = 0;
    long long construct_n = 0;
    bool witnesses = false, allow_slow = false, strict = false, complete_shadow = false;
    std::string free_of_csv;

    auto* classify = app.add_subcommand("classify", "classify a triangle by its angles");
    classify->add_option("--sides", sides_csv, "a,b,c")->required();

    auto* cgraph = app.add_subcommand("congruence-graph",
                                      "congruence hypergraph H(T,P) of a point configuration");
    cgraph->add_option("--points", points_file, "PointConfig JSON file")->required();
    cgraph->add_option("--sides", sides_csv, "a,b,c")->required();
    cgraph->add_option("--mode", mode, "exact|eps")->check(CLI::IsMember({"exact", "eps"}));
    cgraph->add_option("--eps", eps, "relative congruence slack for eps mode");

    auto* forbidden = app.add_subcommand("forbidden", "forbidden catalog for a triangle");
    forbidden->add_option("--sides", sides_csv, "a,b,c")->required();

    auto* realize = app.add_subcommand("realize", "search point realizations of a dense 3-graph");
    realize->add_option("--graph", graph_spec, "named graph or ThreeGraph JSON file")->required();
    realize->add_option("--sides", sides_csv, "a,b,c")->required();

    auto* lagrangian_cmd = app.add_subcommand("lagrangian", "maximize the hypergraph Lagrangian");
    lagrangian_cmd->add_option("--graph", graph_spec, "named graph or ThreeGraph JSON file")
        ->required();
    lagrangian_cmd->add_option("--certify", certify_bound, "certify lambda <= bound");
    lagrangian_cmd->add_option("--restarts", restarts, "ascent restarts")->check(CLI::PositiveNumber);
    lagrangian_cmd->add_option("--depth", depth, "max certification subdivision depth")
        ->check(CLI::PositiveNumber);

    auto* bounds_cmd = app.add_subcommand("bounds", "lower/upper bound report for h(n,T)");
    bounds_cmd->add_option("--sides", sides_csv, "a,b,c")->required();
    bounds_cmd->add_option("--n", bound_n, "number of points")->required()
        ->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "cluster construction for a triangle type");
    construct->add_option("--type", construct_type, "a|b|c|d|e|equilateral")->required();
    construct->add_option("--n", construct_n, "number of points")->required()
        ->check(CLI::PositiveNumber);
    construct->add_option("--sides", sides_csv, "a,b,c")->required();
    construct->add_option("--eps", eps, "relative congruence slack");
    construct->add_option("--emit", emit_file, "write sampled points to this JSON file");
    construct->add_flag("--strict", strict, "reject n violating the divisibility condition");

    auto* turan_cmd = app.add_subcommand("turan", "exact Turan number for a forbidden family");
    turan_cmd->add_option("--n", enum_n, "vertex count (3..7)")->required();
    turan_cmd->add_option("--forbid", forbid_csv, "comma-separated named graphs")->required();
    turan_cmd->add_flag("--witnesses", witnesses, "include extremal witnesses");
    turan_cmd->add_flag("--allow-slow", allow_slow, "enable the slow n=7 search");

    auto* enumerate = app.add_subcommand("enumerate", "isomorphism classes of small 3-graphs");
    enumerate->add_option("--n", enum_n, "vertex count (<= 6)")->required();
    enumerate->add_option("--min-edges", min_edges, "keep classes with at least this many edges");
    enumerate->add_option("--free-of", free_of_csv, "comma-separated named graphs to exclude");
    enumerate->add_flag("--complete-shadow", complete_shadow, "keep complete-shadow classes only");

    auto* verify = app.add_subcommand("verify", "run the per-lemma verification suite");
    verify->add_option("--lemma", lemma, "lemma id or 'all'");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const auto cache = cli_detail::cache_path(args);
    const bool cacheable = forbidden->parsed() || realize->parsed() ||
                           lagrangian_cmd->parsed() || bounds_cmd->parsed() ||
                           turan_cmd->parsed() || enumerate->parsed();

    try {
        json payload;
        int code = 0;

        if (cacheable && cache && std::filesystem::exists(*cache)) {
            payload = cli_detail::load_json_file(cache->string());
            code = payload.value("/exit/code"_json_pointer, 0);
            payload.erase("exit");
            out << payload.dump(2) << "\n";
            return code;
        }

        if (classify->parsed()) {
            const auto cls = classify_triangle_checked(cli_detail::parse_sides(sides_csv));
            payload = json{{"type", to_string(cls.type)}};
            if (cls.borderline) {
                err << "borderline classification: decision changes at the coarse tolerance\n";
                code = 3;
            }
        } else if (cgraph->parsed()) {
            const Triangle t = cli_detail::parse_sides(sides_csv);
            const PointConfig p =
                point_config_from_json(cli_detail::load_json_file(points_file));
            const auto h = congruence_hypergraph(
                p, t, ToleranceParams{eps, kDefaultTol},
                mode == "eps" ? CongruenceMode::Eps : CongruenceMode::Exact);
            payload = to_json(h);
        } else if (forbidden->parsed()) {
            const auto cat = build_forbidden_catalog(cli_detail::parse_sides(sides_csv));
            payload = to_json(cat);
            for (const auto& [name, entry] : cat.verdicts)
                if (entry.verdict == Verdict::Ambiguous) code = 3;
        } else if (realize->parsed()) {
            const Triangle t = cli_detail::parse_sides(sides_csv);
            const auto g = cli_detail::resolve_graph(graph_spec);
            const auto search = find_realizations(g, t);
            json rs = json::array();
            for (const auto& r : search.found) rs.push_back(to_json(r));
            payload = json{{"ambiguous", search.ambiguous},
                           {"graph", to_json(g)},
                           {"realizations", rs},
                           {"triangle", to_json(t)}};
            if (search.ambiguous) code = 3;
        } else if (lagrangian_cmd->parsed()) {
            const auto g = cli_detail::resolve_graph(graph_spec);
            auto result = maximize(g, restarts);
            if (certify_bound >= 0.0) {
                try {
                    if (certify_upper_bound(g, certify_bound, depth))
                        result.certified_upper = certify_bound;
                } catch (const DepthExceeded& e) {
                    err << e.what() << "\n";
                    code = 3;
                }
            }
            payload = to_json(result);
            if (certify_bound >= 0.0 && code == 0)
                payload["certified"] = result.certified_upper.has_value();
        } else if (bounds_cmd->parsed()) {
            payload = to_json(upper_bound(cli_detail::parse_sides(sides_csv), bound_n));
        } else if (construct->parsed()) {
            const auto type = construction_type_from_string(construct_type);
            if (!type) throw MalformedInput("unknown construction type: " + construct_type);
            const Triangle t = cli_detail::parse_sides(sides_csv);
            const auto c = build_construction(*type, t, construct_n, eps, strict);
            payload = to_json(c);
            payload["count"] = count_construction(c, t);
            if (!emit_file.empty()) {
                const long long recount = sample_and_recount(c, t, eps, seed);
                std::mt19937_64 rng(seed);
                std::uniform_real_distribution<double> unit(0.0, 1.0);
                PointConfig pts;
                for (std::size_t g = 0; g < c.sizes.size(); ++g)
                    for (long long i = 0; i < c.sizes[g]; ++i) {
                        const double r = c.radius * std::sqrt(unit(rng));
                        const double th = 2 * std::numbers::pi * unit(rng);
                        pts.points.push_back(c.centers.points[g] +
                                             Vec2{r * std::cos(th), r * std::sin(th)});
                    }
                std::ofstream of(emit_file);
                if (!of) throw MalformedInput("cannot write file: " + emit_file);
                of << to_json(pts).dump(2) << "\n";
                payload["emitted"] = emit_file;
                payload["recount"] = recount;
            }
        } else if (turan_cmd->parsed()) {
            std::vector<ThreeGraph> family;
            std::vector<std::string> names;
            for (const auto& name : cli_detail::split_csv(forbid_csv)) {
                const auto g = graph_name_from_string(name);
                if (!g) throw MalformedInput("unknown graph name: " + name);
                family.push_back(named_graph(*g).graph);
                names.push_back(name);
            }
            if (family.empty()) throw MalformedInput("--forbid needs at least one graph");
            auto result = turan_number(enum_n, family, allow_slow);
            result.family = names;
            payload = to_json(result, witnesses);
        } else if (enumerate->parsed()) {
            std::vector<ThreeGraph> avoid;
            for (const auto& name : cli_detail::split_csv(free_of_csv)) {
                if (name.empty()) continue;
                const auto g = graph_name_from_string(name);
                if (!g) throw MalformedInput("unknown graph name: " + name);
                avoid.push_back(named_graph(*g).graph);
            }
            const auto classes = enumerate_classes(enum_n, [&](const ThreeGraph& g) {
                if (g.edge_count() < min_edges) return false;
                if (!is_family_free(g, avoid)) return false;
                if (complete_shadow && !shadow_graph(g).is_complete()) return false;
                return true;
            });
            json cs = json::array();
            for (const auto& c : classes) cs.push_back(to_json(c));
            payload = json{{"classes", cs}, {"count", classes.size()}, {"n", enum_n}};
        } else if (verify->parsed()) {
            const auto reports = verify_suite(lemma, seed);
            json rs = json::array();
            bool any_fail = false, any_ambiguous = false;
            for (const auto& r : reports) {
                rs.push_back(to_json(r));
                any_fail = any_fail || r.status == "fail";
                any_ambiguous = any_ambiguous || r.status == "ambiguous";
            }
            payload = json{{"reports", rs}};
            code = any_fail ? 1 : (any_ambiguous ? 3 : 0);
        }

        if (cacheable && cache) {
            std::filesystem::create_directories(cache->parent_path());
            json stored = payload;
            stored["exit"] = json{{"code", code}};
            std::ofstream of(*cache);
            if (of) of << stored.dump(2) << "\n";
        }
        out << payload.dump(2) << "\n";
        return code;
    } catch (const MalformedInput& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const AmbiguousDecision& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace trigon
