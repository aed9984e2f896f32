#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "degstab/corpus.hpp"
#include "degstab/error.hpp"
#include "degstab/oracles.hpp"

using namespace degstab;

namespace {

Hypergraph graph_k(int ell) { return complete_pattern(ell).to_hypergraph(); }
Hypergraph c5() { return cycle_pattern(5).to_hypergraph(); }

bool is_embedding(const Hypergraph& f, const Hypergraph& h, const std::vector<Vertex>& psi) {
    std::vector<Vertex> sorted = psi;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<Vertex> img;
        for (auto v : f.edge(i)) img.push_back(psi[v]);
        if (!h.has_edge(img)) return false;
    }
    return true;
}

// Largest triangle-free edge count over all graphs on n vertices.
std::size_t brute_ex_k3(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1) {
                adj[pairs[e].first] |= 1u << pairs[e].second;
                adj[pairs[e].second] |= 1u << pairs[e].first;
            }
        bool tri = false;
        for (std::size_t e = 0; e < pairs.size() && !tri; ++e)
            if (mask >> e & 1) tri = (adj[pairs[e].first] & adj[pairs[e].second]) != 0;
        if (!tri) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

}  // namespace

TEST_CASE("find_embedding examples") {
    CHECK_FALSE(find_embedding(graph_k(3), c5()));
    auto e = find_embedding(graph_k(3), graph_k(4));
    REQUIRE(e);
    CHECK(is_embedding(graph_k(3), graph_k(4), *e));
    auto host = pattern_blowup(complete_pattern(3, 3), {2, 2, 2});
    CHECK_FALSE(find_embedding(catalog("generalized_triangle", {3, 2, 3, {}}), host));
    CHECK_THROWS_AS(find_embedding(graph_k(3), host), Error);
}

TEST_CASE("find_embedding returns valid maps") {
    auto fano = catalog("fano");
    auto e = find_embedding(catalog("generalized_triangle", {3, 2, 3, {}}), catalog("complete", {6, 2, 3, {}}));
    REQUIRE(e);
    CHECK(is_embedding(catalog("generalized_triangle", {3, 2, 3, {}}), catalog("complete", {6, 2, 3, {}}), *e));
    auto self = find_embedding(fano, fano);
    REQUIRE(self);
    CHECK(is_embedding(fano, fano, *self));
    CHECK_FALSE(find_embedding(fano, pattern_blowup(complete_pattern(3, 3), {3, 3, 3})));
}

TEST_CASE("Turan graphs are clique free") {
    for (int ell = 1; ell <= 4; ++ell)
        for (std::size_t n = static_cast<std::size_t>(ell); n <= 40; n += 3)
            CHECK_FALSE(find_embedding(graph_k(ell + 1), turan_graph(n, ell)));
}

TEST_CASE("find_homomorphism examples") {
    CHECK(find_homomorphism(c5(), complete_pattern(3), false));
    CHECK_FALSE(find_homomorphism(c5(), complete_pattern(2), false));
    auto k33 = turan_graph(6, 2);
    CHECK_FALSE(find_homomorphism(k33, cycle_pattern(5), true));
    auto h = find_homomorphism(k33, cycle_pattern(5), false);
    REQUIRE(h);
    for (std::size_t i = 0; i < k33.size(); ++i) {
        auto e = k33.edge(i);
        Multiplicity m(5, 0);
        ++m[(*h)[e[0]]];
        ++m[(*h)[e[1]]];
        CHECK(cycle_pattern(5).contains(m));
    }
}

TEST_CASE("blow-ups map onto their pattern") {
    auto p = Pattern::from_multisets(3, 3, {{0, 0, 1}, {1, 2, 2}, {0, 1, 2}});
    auto h = pattern_blowup(p, {2, 2, 2});
    auto m = find_homomorphism(h, p, true);
    REQUIRE(m);
    auto c = pattern_blowup(cycle_pattern(5), {2, 2, 2, 2, 2});
    CHECK(find_homomorphism(c, cycle_pattern(5), true));
    CHECK(find_homomorphism(pattern_blowup(complete_pattern(4, 3), {2, 2, 2, 2}), complete_pattern(4, 3), true));
}

TEST_CASE("turan_number") {
    CHECK(turan_number(5, 2) == 6);
    CHECK(turan_number(6, 3) == 12);
    CHECK(turan_number(3, 3) == 3);
    CHECK(turan_number(120, 2) == 3600);
    CHECK(turan_number(0, 2) == 0);
    for (int n = 1; n <= 7; ++n) CHECK(turan_number(static_cast<std::uint64_t>(n), 2) == brute_ex_k3(n));
    for (std::uint64_t ell = 1; ell <= 8; ++ell) {
        for (std::uint64_t n = 1; n <= 200; ++n) {
            CHECK(turan_number(n, ell) - turan_number(n - 1, ell) == n - (n + ell - 1) / ell);
            // The floor formula is exact only up to ell = 7; t(12, 8) = 62 < 63.
            if (ell <= 7) CHECK(turan_number(n, ell) == (ell - 1) * n * n / (2 * ell));
            CHECK(turan_number(n, ell) <= (ell - 1) * n * n / (2 * ell));
        }
        CHECK(turan_number(12, ell) == turan_graph(12, static_cast<int>(ell)).size());
    }
}

TEST_CASE("turan_number floor formula breaks at ell = 8") {
    CHECK(turan_number(12, 8) == 62);
    CHECK(turan_graph(12, 8).size() == 62);
}

TEST_CASE("grid oracle") {
    CHECK(std::abs(lagrangian_grid(complete_pattern(3), 300) - 1.0 / 3) <= 1e-5);
    CHECK(std::abs(lagrangian_grid(complete_pattern(3, 3), 300) - 1.0 / 27) <= 1e-5);
    CHECK(lagrangian_grid(Pattern(2, 3, {}), 10) == 0.0);
    CHECK(std::abs(phi_grid(complete_pattern(3), 300) - 2.0 / 3) <= 1e-5);
    CHECK(std::abs(phi_grid(cycle_pattern(5), 60) - 0.4) <= 1e-3);
    CHECK(grid_size(3, 2) == 6);
    CHECK_THROWS_AS(lagrangian_grid(complete_pattern(10), 300), Error);
}

TEST_CASE("oracle timeout") {
    OracleOptions opts;
    opts.time_budget_seconds = 0.0;
    auto host = turan_graph(60, 6);
    try {
        find_embedding(graph_k(7), host, opts);
        FAIL("expected timeout");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OracleTimeout);
    }
}
