#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trigon/cli.hpp"

using namespace trigon;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("classify emits the type and uses exit codes") {
    const auto r = run({"classify", "--sides", "1,1,1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json{{"type", "equilateral"}});

    // eight-digit sides still classify cleanly
    const auto b = run({"classify", "--sides", "1,1,1.7320508"});
    CHECK(b.code == 0);
    CHECK(json::parse(b.out)["type"] == "120-30-30");

    // borderline data flips between fine and coarse tolerance: exit 3
    const auto amb = run({"classify", "--sides", "1,1,1.7321"});
    CHECK(amb.code == 3);

    CHECK(run({"classify", "--sides", "1,1"}).code == 2);
    CHECK(run({"classify", "--sides", "1,1,5"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("congruence-graph reads a point file and emits 1-indexed edges") {
    const auto path = temp_file("trigon_test_hexagon.json");
    {
        std::ofstream of(path);
        of << to_json(regular_ngon(6, 1.0)).dump();
    }
    const auto r = run({"congruence-graph", "--points", path.string(), "--sides",
                        "1,1.7320508075688772,2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 6);
    REQUIRE(j["edges"].size() == 12);
    CHECK(j["edges"][0] == json::array({1, 2, 4}));
    std::filesystem::remove(path);

    CHECK(run({"congruence-graph", "--points", "/nonexistent.json", "--sides", "1,1,1"}).code == 2);
}

TEST_CASE("lagrangian subcommand reports the C5 closed form") {
    const auto r = run({"lagrangian", "--graph", "C5"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK_THAT(j["lower"].get<double>(), Catch::Matchers::WithinAbs(0.04, 1e-9));

    const auto cert = run({"lagrangian", "--graph", "C5", "--certify", "0.040001"});
    REQUIRE(cert.code == 0);
    const json cj = json::parse(cert.out);
    CHECK(cj["certified"] == true);
    CHECK_THAT(cj["certified_upper"].get<double>(), Catch::Matchers::WithinAbs(0.040001, 1e-12));

    CHECK(run({"lagrangian", "--graph", "NoSuchGraph.json"}).code == 2);
}

TEST_CASE("realize reports witnesses and emptiness") {
    const auto none = run({"realize", "--graph", "J4", "--sides", "1,1,1"});
    REQUIRE(none.code == 0);
    CHECK(json::parse(none.out)["realizations"].empty());

    const auto rect = run({"realize", "--graph", "K4_3", "--sides", "1,1.7320508075688772,2"});
    REQUIRE(rect.code == 0);
    CHECK_FALSE(json::parse(rect.out)["realizations"].empty());
}

TEST_CASE("bounds subcommand") {
    const auto r = run({"bounds", "--sides", "1,1.7320508075688772,2", "--n", "8"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["lower"] == 32);
    CHECK(j["provenance"] == "self-contained");
    CHECK_THAT(j["upper"].get<double>(), Catch::Matchers::WithinAbs(32.0, 1e-4));
}

TEST_CASE("construct emits sampled points whose recount matches") {
    const auto path = temp_file("trigon_test_points.json");
    const auto r = run({"construct", "--type", "b", "--n", "9", "--sides", "1,1,1.7320508",
                        "--emit", path.string()});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["count"] == 36);
    CHECK(j["recount"] == 36);
    CHECK(j["sizes"] == json::array({2, 2, 2, 3}));
    REQUIRE(std::filesystem::exists(path));
    const auto pts = point_config_from_json(json::parse(std::ifstream(path)));
    CHECK(pts.size() == 9);
    std::filesystem::remove(path);

    CHECK(run({"construct", "--type", "b", "--n", "8", "--sides", "1,1,1.7320508", "--strict"})
              .code == 2);
    CHECK(run({"construct", "--type", "a", "--n", "8", "--sides", "1,1,1"}).code == 2);
}

TEST_CASE("turan and enumerate subcommands") {
    const auto t = run({"turan", "--n", "6", "--forbid", "F5,K4_3minus", "--witnesses"});
    REQUIRE(t.code == 0);
    const json tj = json::parse(t.out);
    CHECK(tj["value"] == 8);
    CHECK(tj["witnesses"].size() == 1);

    CHECK(run({"turan", "--n", "7", "--forbid", "F5"}).code == 2);
    CHECK(run({"turan", "--n", "5", "--forbid", "Nope"}).code == 2);

    const auto e = run({"enumerate", "--n", "5", "--free-of", "K4_3minus", "--min-edges", "3"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["count"] == 7);

    const auto cs = run({"enumerate", "--n", "5", "--free-of", "K4_3minus", "--complete-shadow"});
    REQUIRE(cs.code == 0);
    CHECK(json::parse(cs.out)["count"] == 2);
}

TEST_CASE("verify subcommand exit codes") {
    const auto ok = run({"verify", "--lemma", "five-vertex-classification"});
    CHECK(ok.code == 0);
    const json j = json::parse(ok.out);
    REQUIRE(j["reports"].size() == 1);
    CHECK(j["reports"][0]["status"] == "pass");

    CHECK(run({"verify", "--lemma", "nonexistent"}).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"lagrangian", "--graph", "F32"},
          std::vector<std::string>{"bounds", "--sides", "1,1.1,1.25", "--n", "9"},
          std::vector<std::string>{"verify", "--lemma", "table1-dense"}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == b.code);
        // wall-clock fields vary; compare after stripping them
        json ja = json::parse(a.out), jb = json::parse(b.out);
        if (ja.contains("reports"))
            for (auto* j : {&ja, &jb})
                for (auto& rep : (*j)["reports"]) rep.erase("wall_seconds");
        CHECK(ja == jb);
        if (!ja.contains("reports")) CHECK(a.out == b.out);
    }
}

TEST_CASE("cache round-trips results when enabled") {
    const auto dir = std::filesystem::temp_directory_path() / "trigon_test_cache";
    std::filesystem::remove_all(dir);
    setenv("TRIGON_CACHE_DIR", dir.c_str(), 1);
    const std::vector<std::string> args{"bounds", "--sides", "1,1.1,1.25", "--n", "6"};
    const auto fresh = run(args);
    REQUIRE(fresh.code == 0);
    CHECK_FALSE(std::filesystem::is_empty(dir));
    const auto cached = run(args);
    unsetenv("TRIGON_CACHE_DIR");
    CHECK(cached.code == 0);
    CHECK(cached.out == fresh.out);
    std::filesystem::remove_all(dir);
}
