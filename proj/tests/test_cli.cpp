#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "degstab/cli.hpp"
#include "degstab/deciders.hpp"
#include "degstab/io.hpp"

using namespace degstab;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "degstab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DEGSTAB_TEST_DATA) + "/" + name; }

int expected_code(Verdict v) { return v == Verdict::Yes ? 0 : v == Verdict::No ? 1 : 2; }

}  // namespace

TEST_CASE("decide verdicts match the library") {
    for (const char* file : {"t30_3.txt", "t30_3_planted.txt", "c5.txt"}) {
        for (int ell : {2, 3}) {
            auto lib = decide_k_colorable(read_hypergraph_file(data(file)), ell);
            auto run = cli({"decide", "kcolor", "--l", std::to_string(ell), data(file)});
            CHECK(run.code == expected_code(lib.verdict));
            auto j = nlohmann::json::parse(run.out);
            CHECK(j["verdict"] == to_string(lib.verdict));
        }
    }
    auto g = read_hypergraph_file(data("t120_2_minus2.txt"));
    for (std::uint64_t k : {0u, 2u, 4u}) {
        auto lib = clique_avg_decide(g, 2, k);
        auto run = cli({"decide", "avg", "--l", "2", "--k", std::to_string(k), data("t120_2_minus2.txt")});
        CHECK(run.code == expected_code(lib.verdict));
    }
}

TEST_CASE("report schema") {
    auto run = cli({"--seed", "9", "decide", "kcolor", "--l", "3", data("t30_3.txt")});
    REQUIRE(run.code == 0);
    auto j = nlohmann::json::parse(run.out);
    CHECK(j["schema"] == "degstab.report/1");
    CHECK(j["version"] == "0.1.0");
    CHECK(j["command"] == "decide kcolor");
    CHECK(j["seed"] == 9);
    CHECK(j["parameters"]["l"] == 3);
    CHECK(j["inputs"]["input"].get<std::string>().size() == 16);
    CHECK(j["witness"].size() == 3);
    CHECK(j["class_sizes"] == nlohmann::json::parse("[10,10,10]"));
    CHECK(j["stats"]["distance_evaluations"].get<int>() <= 90);
    CHECK(j.contains("wall_seconds"));
}

TEST_CASE("numerical commands") {
    auto run = cli({"lagrangian", data("k3.pat")});
    REQUIRE(run.code == 0);
    auto j = nlohmann::json::parse(run.out);
    CHECK(j["result"]["value"].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-6));
    CHECK(j["result"]["exact"] == "1/3");

    auto numeric = cli({"lagrangian", "--no-closed-forms", data("k3.pat")});
    auto jn = nlohmann::json::parse(numeric.out);
    CHECK(std::abs(jn["result"]["value"].get<double>() - 1.0 / 3) <= 1e-6);
    CHECK_FALSE(jn["result"].contains("exact"));

    auto rig = nlohmann::json::parse(cli({"rigidity", data("c4.pat")}).out);
    CHECK(rig["result"]["rigid"] == false);
    CHECK(rig["result"]["twins"] == true);
    CHECK(rig["result"].contains("violating_witness"));
}

TEST_CASE("generators are reproducible through the CLI") {
    auto a = cli({"--seed", "11", "gen", "perturb", data("t30_3.txt"), "--delete", "5"});
    auto b = cli({"--seed", "11", "gen", "perturb", data("t30_3.txt"), "--delete", "5"});
    auto c = cli({"--seed", "12", "gen", "perturb", data("t30_3.txt"), "--delete", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    CHECK(parse_hypergraph(a.out).size() == 295);
}

TEST_CASE("error exit codes") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"decide"}).code == kExitUsage);
    CHECK(cli({"decide", "kcolor", data("t30_3.txt")}).code == kExitUsage);
    CHECK(cli({"decide", "kcolor", "--l", "2", data("bad_repeat.txt")}).code == kExitParse);
    CHECK(cli({"decide", "kcolor", "--l", "2", data("missing.txt")}).code == kExitError);
    CHECK(cli({"decide", "kfree", data("t30_3.txt")}).code == kExitUsage);
    CHECK(cli({"gen", "catalog", "nonesuch"}).code == kExitUsage);
    CHECK(cli({"gen", "perturb", data("t30_3.txt"), "--plant"}).code == kExitUsage);
    CHECK(cli({"gen", "turan", "--n", "2", "--l", "3"}).code == kExitError);
    CHECK(cli({"--help"}).code == 0);
}
