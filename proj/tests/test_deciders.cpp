#include <doctest.h>

#include "degstab/bench.hpp"
#include "degstab/corpus.hpp"
#include "degstab/deciders.hpp"
#include "degstab/error.hpp"
#include "degstab/oracles.hpp"

using namespace degstab;

namespace {

Hypergraph graph_k(int ell) { return complete_pattern(ell).to_hypergraph(); }

bool independent_in_pattern(const Hypergraph& h, const Pattern& p, const Partition& part) {
    auto lab = part.labels();
    for (std::size_t i = 0; i < h.size(); ++i) {
        Multiplicity m(static_cast<std::size_t>(p.vertex_count()), 0);
        for (auto v : h.edge(i)) ++m[static_cast<std::size_t>(lab[v])];
        if (!p.contains(m)) return false;
    }
    return true;
}

bool feasible(std::size_t n, int ell) {
    const auto L = static_cast<std::size_t>(ell);
    return (3 * L - 1) * (n - (n + L - 1) / L) > (3 * L - 4) * n;
}

DeciderConfig with_n_small(std::size_t n) {
    DeciderConfig cfg;
    cfg.n_small = n;
    return cfg;
}

}  // namespace

TEST_CASE("hamming_clustering examples") {
    auto k23 = turan_graph(5, 2);
    auto c = hamming_clustering(k23, 2, Rational(2, 5));
    CHECK(c.partition.classes() == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}});
    CHECK(c.radius == 2);

    auto empty = hamming_clustering(Hypergraph(2, 5, {}), 2, Rational(0));
    CHECK(empty.partition.classes() == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}, {}});

    auto k3 = hamming_clustering(graph_k(3), 3, Rational(1, 4));
    CHECK(k3.partition.classes() == std::vector<std::vector<Vertex>>{{0}, {1}, {2}});
    CHECK(k3.seeds == std::vector<Vertex>{0, 1});
}

TEST_CASE("clustering is a partition with bounded work") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        if (!feasible(25 + seed, 3)) continue;
        auto inst = noisy_turan(25 + seed, 3, seed, seed % 2 == 0);
        const auto n = inst.graph.order();
        auto c = hamming_clustering(inst.graph, 3, Rational(2, 8));
        CHECK(c.partition.vertex_count() == n);
        CHECK(c.partition.class_count() == 3);
        CHECK(c.distance_evaluations <= 2 * (n - 1));
    }
}

TEST_CASE("clustering ignores order-preserving relabeling") {
    // Embed the graph into a larger index space without changing vertex order.
    auto g = turan_graph(12, 3);
    auto a = hamming_clustering(g, 3, Rational(2, 8));
    std::vector<Vertex> perm(12);
    for (Vertex v = 0; v < 12; ++v) perm[v] = v;
    CHECK(hamming_clustering(relabel(g, perm), 3, Rational(2, 8)).partition == a.partition);
}

TEST_CASE("decide_k_colorable examples") {
    auto t = turan_graph(30, 3);
    auto d = decide_k_colorable(t, 3);
    REQUIRE(d.verdict == Verdict::Yes);
    REQUIRE(d.witness);
    CHECK(d.witness->same_classes(turan_parts(30, 3)));
    CHECK(d.stats.distance_evaluations <= 3 * 30);

    auto planted = plant_violation(t, turan_parts(30, 3), 5);
    auto no = decide_k_colorable(planted, 3);
    CHECK(no.verdict == Verdict::No);
    REQUIRE(no.violating_edge);
    CHECK_FALSE(t.has_edge(*no.violating_edge));
    CHECK(planted.has_edge(*no.violating_edge));
    CHECK_FALSE(find_homomorphism(planted, complete_pattern(3), false));

    auto c5 = decide_k_colorable(cycle_pattern(5).to_hypergraph(), 2);
    CHECK(c5.verdict == Verdict::PreconditionViolated);
    REQUIRE(c5.precondition);
    CHECK(c5.precondition->actual == "2");

    DeciderConfig lax;
    lax.strict = false;
    auto fb = decide_k_colorable(cycle_pattern(5).to_hypergraph(), 2, lax);
    CHECK(fb.verdict == Verdict::No);
    CHECK(fb.stats.used_oracle);
}

TEST_CASE("decide_k_colorable agrees with the oracle on noisy instances") {
    for (int ell = 2; ell <= 4; ++ell) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            if (!feasible(20 + 2 * seed, ell)) continue;
            auto inst = noisy_turan(20 + 2 * seed, ell, seed * 7 + static_cast<std::uint64_t>(ell), seed % 2 == 1);
            auto d = decide_k_colorable(inst.graph, ell);
            REQUIRE(d.verdict != Verdict::PreconditionViolated);
            auto oracle = find_homomorphism(inst.graph, complete_pattern(ell), false);
            CHECK((d.verdict == Verdict::Yes) == oracle.has_value());
            CHECK((d.verdict == Verdict::No) == inst.planted);
            if (oracle && d.witness) {
                auto ref = Partition::from_labels(*oracle, static_cast<std::size_t>(ell));
                CHECK(d.witness->same_classes(ref));
            }
        }
    }
}

TEST_CASE("decide_hom_minimal examples") {
    auto p = complete_pattern(3, 3);
    auto host = pattern_blowup(p, {10, 10, 10});
    auto d = decide_hom_minimal(host, p);
    REQUIRE(d.verdict == Verdict::Yes);
    CHECK(independent_in_pattern(host, p, *d.witness));
    CHECK(find_homomorphism(pattern_blowup(p, {2, 2, 2}), p, false));

    auto planted = plant_violation(host, block_partition({10, 10, 10}), 3);
    CHECK(decide_hom_minimal(planted, p).verdict == Verdict::No);

    DeciderConfig lax = with_n_small(30);
    lax.strict = false;
    auto small = pattern_blowup(p, {2, 2, 2});
    auto fb = decide_hom_minimal(small, p, lax);
    CHECK(fb.verdict == Verdict::Yes);
    CHECK(fb.stats.used_oracle);

    auto strict = decide_hom_minimal(small, p, with_n_small(30));
    CHECK(strict.verdict == Verdict::PreconditionViolated);

    CHECK_THROWS_AS(decide_hom_minimal(host, cycle_pattern(5)), Error);
}

TEST_CASE("decide_hom_minimal below the degree threshold") {
    auto p = complete_pattern(3, 3);
    auto host = delete_random_edges(pattern_blowup(p, {10, 10, 10}), 1, 9);
    CHECK(decide_hom_minimal(host, p).verdict == Verdict::PreconditionViolated);
    DeciderConfig slack;
    slack.eps = 0.01;
    CHECK(decide_hom_minimal(host, p, slack).verdict == Verdict::Yes);
}

TEST_CASE("decide_shom_rigid examples") {
    auto c5 = cycle_pattern(5);
    auto host = pattern_blowup(c5, {5, 5, 5, 5, 5});
    auto d = decide_shom_rigid(host, c5, with_n_small(10));
    REQUIRE(d.verdict == Verdict::Yes);
    CHECK(d.witness->full_support());
    CHECK(independent_in_pattern(host, c5, *d.witness));
    CHECK(find_homomorphism(pattern_blowup(c5, {2, 2, 2, 2, 2}), c5, true));

    auto planted = plant_violation(host, block_partition({5, 5, 5, 5, 5}), 1);
    CHECK(decide_shom_rigid(planted, c5, with_n_small(10)).verdict == Verdict::No);

    auto k1010 = turan_graph(20, 2);
    CHECK(decide_shom_rigid(k1010, c5, with_n_small(10)).verdict == Verdict::No);
    CHECK(find_homomorphism(k1010, c5, false));
    CHECK_FALSE(find_homomorphism(turan_graph(6, 2), c5, true));

    // Default n_small is 3 l r = 30 > 25.
    CHECK(decide_shom_rigid(host, c5).verdict == Verdict::PreconditionViolated);
    CHECK_THROWS_AS(decide_shom_rigid(host, cycle_pattern(4), with_n_small(10)), Error);
}

TEST_CASE("embed_min_decide examples") {
    auto k3 = graph_k(3);
    auto k2 = complete_pattern(2);
    auto t = turan_graph(40, 2);
    CHECK(embed_min_decide(t, k3, k2).verdict == Verdict::Yes);
    auto planted = plant_violation(t, turan_parts(40, 2), 2);
    CHECK(embed_min_decide(planted, k3, k2).verdict == Verdict::No);
    CHECK(find_embedding(k3, planted));

    auto fano = catalog("fano");
    auto p = complete_pattern(3, 3);
    DeciderConfig small = with_n_small(10);
    auto self = embed_min_decide(fano, fano, p, small);
    CHECK(self.verdict == Verdict::No);
    CHECK(self.stats.used_oracle);
    auto other = embed_min_decide(catalog("f32"), fano, p, small);
    CHECK(other.stats.used_oracle);
    CHECK(other.verdict == Verdict::Yes);
}

TEST_CASE("peel") {
    auto t = peel(turan_graph(120, 2), 2);
    CHECK(t.z == 0);
    CHECK(t.survivors.size() == 120);
    // Star K_{1,5}: after four leaves go, the edge between center and the last
    // leaf has degree 1 > (2/5) * 2.
    Hypergraph star(2, 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    auto s = peel(star, 2);
    CHECK(s.z == 4);
    CHECK(s.order == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(s.survivors == std::vector<Vertex>{0, 5});
    auto e = peel(Hypergraph(2, 4, {}), 2);
    CHECK(e.z == 4);
    CHECK(e.survivors.empty());
}

TEST_CASE("clique_avg_decide examples") {
    auto t = turan_graph(120, 2);
    auto minus2 = delete_random_edges(t, 2, 4);
    auto yes = clique_avg_decide(minus2, 2, 2);
    CHECK(yes.verdict == Verdict::Yes);
    CHECK_FALSE(find_embedding(graph_k(3), minus2));

    auto planted = plant_violation(t, turan_parts(120, 2), 8);
    auto no = clique_avg_decide(planted, 2, 0);
    CHECK(no.verdict == Verdict::No);
    CHECK(find_embedding(graph_k(3), planted));

    auto small = delete_random_edges(turan_graph(100, 2), 2, 4);
    auto pv = clique_avg_decide(small, 2, 2);
    CHECK(pv.verdict == Verdict::PreconditionViolated);

    auto sparse = delete_random_edges(t, 10, 4);
    CHECK(clique_avg_decide(sparse, 2, 2).verdict == Verdict::PreconditionViolated);
}

TEST_CASE("clique_avg_decide peeling gate") {
    // T(120,2) (parts 0..59, 60..119): vertex 0 loses 12 cross edges and 12
    // edges go inside the part 60..119, so the edge count stays at ex(n, K_3).
    auto t = turan_graph(120, 2);
    std::vector<Edge> kept;
    for (const auto& e : t.edge_list())
        if (!(e[0] == 0 && e[1] < 72)) kept.push_back(e);
    for (Vertex i = 0; i < 12; ++i) kept.push_back({static_cast<Vertex>(60 + 2 * i), static_cast<Vertex>(61 + 2 * i)});
    Hypergraph h(2, 120, kept);
    REQUIRE(h.size() == turan_number(120, 2));
    auto pr = peel(h, 2);
    CHECK(pr.z == 1);
    CHECK(pr.order == std::vector<Vertex>{0});
    auto d = clique_avg_decide(h, 2, 0);
    CHECK(d.verdict == Verdict::No);
    CHECK(d.stats.peeled == 1);
    CHECK(find_embedding(graph_k(3), h));
}

TEST_CASE("bench rows") {
    BenchOptions quick{0.0, 1};
    auto hom = bench("hom", {200, 400}, 3, quick);
    REQUIRE(hom.size() == 2);
    for (const auto& r : hom) {
        CHECK(r.verdict == Verdict::Yes);
        CHECK(r.within_bound);
    }
    const double ratio = static_cast<double>(hom[1].distance_work) / static_cast<double>(hom[0].distance_work);
    CHECK(ratio == doctest::Approx(8.0).epsilon(0.05));

    auto kc = bench("kcolor", {300}, 3, quick);
    CHECK(kc[0].distance_evaluations <= 3 * 300);
    for (const char* s : {"shom", "avg"})
        for (const auto& r : bench(s, {150}, 3, quick)) CHECK(r.verdict == Verdict::Yes);
    CHECK_THROWS_AS(bench("nope", {10}, 1, quick), Error);
}
