#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisect/commands.hpp"
#include "trisect/errors.hpp"
#include "trisect/scenario.hpp"

using namespace trisect;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    args.insert(args.begin(), "trisect");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string scenario(const std::string& name) { return std::string(TRISECT_SCENARIO_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("bounds") {
    const auto a = cli({"bounds", "--gx", "13", "--gy", "1", "--e", "0", "--d", "10"});
    CHECK(a.code == 0);
    CHECK(has(a.out, "Guaranteed"));
    CHECK(has(a.out, "(12 + 0)/2 = 6"));
    const auto b = cli({"bounds", "--gx", "5", "--gy", "0", "--e", "1", "--d", "3"});
    CHECK(b.code == 0);
    CHECK(has(b.out, "Impossible"));
    const auto c = cli({"bounds", "--gx", "13", "--gy", "1", "--e", "1"});
    CHECK(c.code == 2);
    CHECK(has(c.err, "parity"));
    CHECK(cli({"bounds", "--gx", "13", "--gy", "1", "--e", "1", "--raw"}).code == 0);
    const auto d = cli({"bounds", "--gx", "12", "--gy", "1", "--e", "1"});
    CHECK(d.code == 0);
    CHECK(has(d.out, "precondition"));
    CHECK(cli({"bounds", "--gy", "1", "--e", "0"}).code == 2);
}

TEST_CASE("run") {
    const auto a = cli({"run", scenario("product_one_step.json")});
    CHECK(a.code == 0);
    CHECK(has(a.out, "e 0 -> -1"));
    CHECK(has(a.out, "oracle Agree"));
    const auto b = cli({"run", scenario("minimal_degree_relation.json")});
    CHECK(b.code == 0);
    CHECK(has(b.out, "Consistent"));
    CHECK(has(b.out, "e=0"));
    CHECK(cli({"run", scenario("minimal_degree_no_relation.json")}).code == 0);
    CHECK(cli({"run", temp_file("trisect_bad.json", "{ not json")}).code == 2);
    CHECK(cli({"run", temp_file("trisect_noversion.json", R"({"surface": {"g_y": 1, "g_x": 13, "e": 0}})")}).code == 2);
    CHECK(cli({"run", "/nonexistent/scenario.json"}).code == 2);
}

TEST_CASE("run reports a failed expectation with exit 1") {
    std::ifstream in(scenario("product_one_step.json"));
    nlohmann::json doc = nlohmann::json::parse(in);
    doc["checks"]["final_e"] = 1;
    CHECK(cli({"run", temp_file("trisect_wrong_e.json", doc.dump())}).code == 1);
}

TEST_CASE("resolve") {
    const auto a = cli({"resolve", scenario("singular_chain_222.json"), "--exhaustive"});
    CHECK(a.code == 0);
    CHECK(has(a.out, "alpha = 3"));
    const auto b = cli({"resolve", scenario("minimal_degree_nodes.json"), "--exhaustive"});
    CHECK(b.code == 0);
    CHECK(has(b.out, "raising e at every step exists"));
    CHECK(cli({"resolve", scenario("minimal_degree_nodes.json"), "--exhaustive", "--budget", "1"}).code == 1);
}

TEST_CASE("plan") {
    const auto a = cli({"plan", "--gy", "1", "--gx", "35", "--d", "18"});
    CHECK(a.code == 0);
    CHECK(has(a.out, "Direct plan"));
    CHECK(has(a.out, "Verified"));
    const auto b = cli({"plan", "--gy", "1", "--gx", "35", "--d", "17"});
    CHECK(b.code == 0);
    CHECK(has(b.out, "Infeasible"));
    CHECK(cli({"plan", "--gy", "0", "--gx", "10", "--d", "5"}).code == 2);
    CHECK(cli({"plan", "--gy", "5", "--gx", "183", "--d", "89", "--halphen"}).code == 0);
    CHECK(cli({"plan", "--gy", "1", "--gx", "35", "--d", "26"}).code == 0);
}

TEST_CASE("verify-paper") {
    const auto a = cli({"verify-paper", "--suite", "product-genus", "--suite", "bounds-ordering"});
    CHECK(a.code == 0);
    CHECK(has(a.out, "2 pass, 0 fail"));
    CHECK(cli({"verify-paper", "--suite", "nope"}).code == 2);
    CHECK(cli({"verify-paper", "--grid", "huge"}).code == 2);
}

TEST_CASE("json report") {
    const auto path = (std::filesystem::temp_directory_path() / "trisect_report.json").string();
    std::remove(path.c_str());
    const auto a = cli({"plan", "--gy", "1", "--gx", "35", "--d", "18", "--json-out", path});
    CHECK(a.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto j = nlohmann::json::parse(in);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["exit_code"] == 0);
    CHECK(j["data"]["plan"]["route"] == "Direct");
    CHECK(j["data"]["plan"]["deg_Dprime"] == 14);
    CHECK(j["checks"].size() >= 2);
}

TEST_CASE("help exits cleanly and a missing subcommand is an input error") {
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({}).code == 2);
}

TEST_CASE("scenario schema validation") {
    CHECK_THROWS_AS(parse_scenario_text(R"({"schema_version": 2, "surface": {"g_y": 1, "g_x": 13, "e": 0}})"), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"schema_version": 1, "surface": {"g_y": 1, "g_x": 13, "e": 1}})"), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"schema_version": 1, "surface": {"g_y": 1, "g_x": 13, "e": 0},
        "sections": [{"id": "S", "fib_deg": 1, "formal": {"Z": 1}}]})"), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"schema_version": 1, "surface": {"g_y": 1, "g_x": 13, "e": 0},
        "symbols": {"Z": 2}, "sections": [{"id": "S", "fib_deg": 1, "formal": {"Z": 1}}]})"), SchemaError);
    CHECK_THROWS_AS(parse_scenario_text(R"({"schema_version": 1, "surface": {"g_y": 1, "g_x": 13, "e": 0},
        "sections": [{"id": "S", "fib_deg": 1, "marked": ["P"]}]})"), SchemaError);
    const Scenario ok = parse_scenario_text(R"({"schema_version": 1, "raw_surface": true,
        "surface": {"g_y": 1, "b": 0, "n": 0}, "trisection": {"fib_deg": 4}})");
    CHECK(ok.initial.surface.e == 0);
    CHECK(ok.initial.trisection->cls.fib_deg == 4);
}
