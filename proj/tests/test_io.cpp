#include <doctest.h>

#include <sstream>

#include "degstab/corpus.hpp"
#include "degstab/error.hpp"
#include "degstab/io.hpp"
#include "degstab/report.hpp"

using namespace degstab;

namespace {

template <class F>
std::pair<ErrorKind, std::size_t> parse_failure(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return {e.kind(), e.line()};
    }
    FAIL("expected ParseError");
    return {ErrorKind::InvalidInput, 0};
}

}  // namespace

TEST_CASE("parse_hypergraph examples") {
    CHECK(parse_hypergraph("2 3 3\n0 1\n0 2\n1 2\n") == complete_pattern(3).to_hypergraph());
    CHECK(parse_hypergraph("3 5 3\n0 1 2\n0 1 3\n2 3 4\n") == catalog("generalized_triangle", {3, 2, 3, {}}));
    auto bad = parse_failure([] { parse_hypergraph("2 3 1\n0 0\n"); });
    CHECK(bad.first == ErrorKind::ParseError);
    CHECK(bad.second == 2);
}

TEST_CASE("parse_hypergraph errors") {
    CHECK(parse_failure([] { parse_hypergraph("2 3 1\n0 3\n"); }) == std::pair{ErrorKind::IndexOutOfRange, std::size_t{2}});
    CHECK(parse_failure([] { parse_hypergraph("2 3 2\n0 1\n1 0\n"); }) == std::pair{ErrorKind::DuplicateEdge, std::size_t{3}});
    CHECK(parse_failure([] { parse_hypergraph("2 3 2\n0 1\n"); }).first == ErrorKind::ParseError);
    CHECK(parse_failure([] { parse_hypergraph("2 3 1\n0 1\n1 2\n"); }).second == 3);
    CHECK(parse_failure([] { parse_hypergraph("2 3 1\n0 x\n"); }).second == 2);
    CHECK(parse_failure([] { parse_hypergraph("2 3 1\n0 1 2\n"); }).second == 2);
    CHECK(parse_failure([] { parse_hypergraph(""); }).first == ErrorKind::ParseError);
    CHECK(parse_failure([] { parse_hypergraph("2 3\n"); }).second == 1);
}

TEST_CASE("comments and blank lines") {
    auto h = parse_hypergraph("# triangle\n\n2 3 3   # header\n0 1\n\n0 2 # edge\n1 2\n");
    CHECK(h.size() == 3);
}

TEST_CASE("hypergraph round trip") {
    for (const auto& name : catalog_names()) {
        CatalogParams prm;
        if (name == "cycle") prm.k = 6;
        auto h = catalog(name, prm);
        CHECK(parse_hypergraph(serialize(h)) == h);
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = noisy_turan(30, 3, seed, true).graph;
        CHECK(parse_hypergraph(serialize(g)) == g);
    }
}

TEST_CASE("pattern format") {
    auto p = parse_pattern("3 2 1\n1 1 2\n");
    CHECK(p == Pattern::from_multisets(3, 2, {{0, 0, 1}}));
    CHECK(parse_pattern(serialize(cycle_pattern(5))) == cycle_pattern(5));
    CHECK(parse_pattern(serialize(p)) == p);
    CHECK(parse_failure([] { parse_pattern("2 3 1\n1 4\n"); }).first == ErrorKind::IndexOutOfRange);
    CHECK(parse_failure([] { parse_pattern("2 3 1\n0 1\n"); }).first == ErrorKind::IndexOutOfRange);
    CHECK(parse_failure([] { parse_pattern("2 3 2\n1 2\n2 1\n"); }).first == ErrorKind::DuplicateEdge);
}

TEST_CASE("report json") {
    Decision d;
    d.verdict = Verdict::Yes;
    d.witness = Partition(4, {{2, 3}, {0, 1}, {}});
    RunManifest m;
    m.command = "decide kcolor";
    auto j = report_json(m, d);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["verdict"] == "Yes");
    CHECK(j["witness"] == nlohmann::json::parse("[[0,1],[2,3]]"));
    CHECK(j["class_sizes"] == nlohmann::json::parse("[2,2,0]"));
    CHECK(j.dump() == report_json(m, d).dump());
    CHECK(hex_digest(0xabc) == "0000000000000abc");
}
