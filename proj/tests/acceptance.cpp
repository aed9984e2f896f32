// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "degstab/bench.hpp"
#include "degstab/corpus.hpp"
#include "degstab/deciders.hpp"
#include "degstab/lagrangian.hpp"
#include "degstab/oracles.hpp"
#include "degstab/rng.hpp"

using namespace degstab;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string why) {
        pass = false;
        if (failures.size() < 5) failures.push_back(std::move(why));
    }
};

int g_failed = 0;

void report(int id, const char* title, const Outcome& o) {
    std::printf("criterion %2d %-36s %s  %s\n", id, title, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    for (const auto& f : o.failures) std::printf("             - %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++g_failed;
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Hypergraph graph_k(int ell) { return complete_pattern(ell).to_hypergraph(); }

// --- criteria 1-3 -----------------------------------------------------------

bool kl_feasible(std::size_t n, int ell) {
    const auto L = static_cast<std::size_t>(ell);
    return (3 * L - 1) * (n - (n + L - 1) / L) > (3 * L - 4) * n;
}

void k_colorable_suite() {
    Outcome c1, c2, c3;
    const auto start = Clock::now();
    std::size_t instances = 0, yes = 0, compared = 0, mismatches = 0, precondition_misses = 0;
    std::uint64_t worst_eval = 0, worst_work = 0;  // in per-mille of the budget
    for (int ell = 2; ell <= 4; ++ell) {
        std::vector<std::size_t> sizes;
        for (std::size_t n = 20; n <= 80; ++n)
            if (kl_feasible(n, ell)) sizes.push_back(n);
        for (std::uint64_t i = 0; i < 500; ++i) {
            const std::uint64_t seed = 0x1000u * static_cast<std::uint64_t>(ell) + i;
            SplitMix64 pick(seed);
            const std::size_t n = sizes[pick.below(sizes.size())];
            const bool plant = i % 2 == 1;
            auto inst = noisy_turan(n, ell, seed, plant);
            const auto& g = inst.graph;
            ++instances;
            const auto L = static_cast<std::size_t>(ell);
            if ((3 * L - 1) * g.min_degree() <= (3 * L - 4) * n) {
                ++precondition_misses;
                c1.fail(fmt("l=%d seed=%llu: instance below the degree bound", ell, (unsigned long long)seed));
                continue;
            }
            auto d = decide_k_colorable(g, ell);
            auto oracle = find_homomorphism(g, complete_pattern(ell), false);
            const bool dec_yes = d.verdict == Verdict::Yes;
            if (d.verdict == Verdict::PreconditionViolated || dec_yes != oracle.has_value()) {
                ++mismatches;
                c1.fail(fmt("l=%d n=%zu seed=%llu: decider %s, oracle %s", ell, n, (unsigned long long)seed,
                            to_string(d.verdict), oracle ? "colorable" : "not colorable"));
            }
            if (dec_yes && d.witness) {
                ++yes;
                if (oracle) {
                    ++compared;
                    auto ref = Partition::from_labels(*oracle, L);
                    if (!d.witness->same_classes(ref))
                        c2.fail(fmt("l=%d n=%zu seed=%llu: partitions differ", ell, n, (unsigned long long)seed));
                }
            }
            const auto eval_budget = L * n, work_budget = (L + 1) * n * n;
            worst_eval = std::max<std::uint64_t>(worst_eval, 1000 * d.stats.distance_evaluations / eval_budget);
            worst_work = std::max<std::uint64_t>(worst_work, 1000 * d.stats.work / work_budget);
            if (d.stats.distance_evaluations > eval_budget)
                c3.fail(fmt("l=%d n=%zu: %llu distance evaluations > %zu", ell, n,
                            (unsigned long long)d.stats.distance_evaluations, eval_budget));
            if (d.stats.work > work_budget)
                c3.fail(fmt("l=%d n=%zu: work %llu > %zu", ell, n, (unsigned long long)d.stats.work, work_budget));
        }
    }
    const double secs = since(start);
    if (secs >= 60.0) c1.fail(fmt("runtime %.1f s >= 60 s", secs));
    if (instances != 1500) c1.fail("instance count off");
    c1.detail = fmt("%zu instances, %zu mismatches, %zu below bound, %.1f s", instances, mismatches,
                    precondition_misses, secs);
    if (compared != yes) c2.fail("oracle missing on a Yes-instance");
    c2.detail = fmt("%zu Yes-instances, %zu partitions compared", yes, compared);
    c3.detail = fmt("max evaluations %.3f l*n, max work %.3f (l+1)n^2", worst_eval / 1000.0, worst_work / 1000.0);
    report(1, "oracle equivalence, K_l decider", c1);
    report(2, "uniqueness of the coloring", c2);
    report(3, "work bound", c3);
}

// --- criterion 4 ------------------------------------------------------------

void clique_avg_suite() {
    Outcome o;
    const int ell = 2;
    std::size_t runs = 0, yes = 0, no = 0, pv = 0;
    std::size_t max_z = 0;
    const auto start = Clock::now();
    for (std::size_t n : {120u, 132u, 150u}) {
        auto t = turan_graph(n, ell);
        auto parts = turan_parts(n, ell);
        for (std::uint64_t k : {0u, 1u, 2u, 4u}) {
            const bool size_ok = n >= std::max<std::uint64_t>(6 * ell * ell, 30 * k * ell);
            for (std::uint64_t seed = 0; seed < 200; ++seed) {
                auto perm = random_permutation(n, seed ^ 0xabcdef);
                auto base = delete_random_edges(t, k, seed);
                auto planted = plant_violation(base, parts, seed + 1);
                for (int variant = 0; variant < 2; ++variant) {
                    auto g = relabel(variant == 0 ? base : planted, perm);
                    ++runs;
                    auto d = clique_avg_decide(g, ell, k);
                    const bool triangle = find_embedding(graph_k(3), g).has_value();
                    Verdict expect = triangle ? Verdict::No : Verdict::Yes;
                    if (!size_ok) expect = Verdict::PreconditionViolated;
                    if (d.verdict != expect) {
                        o.fail(fmt("n=%zu k=%llu seed=%llu %s: got %s, expected %s", n, (unsigned long long)k,
                                   (unsigned long long)seed, variant ? "planted" : "clean", to_string(d.verdict),
                                   to_string(expect)));
                        continue;
                    }
                    if (d.verdict == Verdict::Yes) {
                        ++yes;
                        // z <= (12 l^2 / n)(k + l/8)  <=>  8 z n <= 12 l^2 (8k + l)
                        const auto z = d.stats.peeled;
                        max_z = std::max(max_z, z);
                        if (8 * z * n > 12u * ell * ell * (8 * k + ell))
                            o.fail(fmt("n=%zu k=%llu seed=%llu: z=%zu over the bound", n, (unsigned long long)k,
                                       (unsigned long long)seed, z));
                    } else if (d.verdict == Verdict::No) {
                        ++no;
                    } else {
                        ++pv;
                    }
                }
            }
        }
    }
    // Sub-threshold orders.
    for (std::size_t n : {100u, 110u, 119u}) {
        auto g = delete_random_edges(turan_graph(n, ell), 2, n);
        ++runs;
        auto d = clique_avg_decide(g, ell, 2);
        if (d.verdict != Verdict::PreconditionViolated) o.fail(fmt("n=%zu k=2 not rejected", n));
        else ++pv;
    }
    o.detail = fmt("%zu runs: %zu Yes, %zu No, %zu PreconditionViolated, max z %zu, %.1f s", runs, yes, no, pv, max_z,
                   since(start));
    report(4, "clique_avg_decide reproduction", o);
}

// --- criteria 5-6 -----------------------------------------------------------

OptConfig numeric_cfg() {
    OptConfig cfg;
    cfg.closed_forms = false;
    return cfg;
}

void lagrangian_suite() {
    Outcome o;
    auto cfg = numeric_cfg();
    double worst = 0;
    auto check = [&](const std::string& what, double got, double want, double tol) {
        const double err = std::abs(got - want);
        worst = std::max(worst, err);
        if (err > tol) o.fail(fmt("%s: %.12f vs %.12f", what.c_str(), got, want));
    };
    for (int ell = 2; ell <= 6; ++ell) {
        check(fmt("lambda(K_%d)", ell), lagrangian(complete_pattern(ell), cfg).value, (ell - 1.0) / (2.0 * ell), 1e-6);
        check(fmt("Phi(K_%d)", ell), phi(complete_pattern(ell), cfg).value, (ell - 1.0) / ell, 1e-6);
    }
    check("lambda(K_3^3)", lagrangian(complete_pattern(3, 3), cfg).value, 1.0 / 27, 1e-6);
    for (const auto& [name, p] : std::vector<std::pair<std::string, Pattern>>{{"K_3", complete_pattern(3)},
                                                                               {"K_4", complete_pattern(4)},
                                                                               {"K_5", complete_pattern(5)},
                                                                               {"K_3^3", complete_pattern(3, 3)}}) {
        if (!is_minimal(p, cfg).minimal) {
            o.fail(name + " not certified minimal");
            continue;
        }
        check("r*lambda - Phi for " + name, p.uniformity() * lagrangian(p, cfg).value, phi(p, cfg).value, 2e-6);
    }
    o.detail = fmt("max abs error %.2e (optimizer, closed forms off)", worst);
    report(5, "Lagrangian numerics", o);
}

void gradient_suite() {
    Outcome o;
    SplitMix64 rng(0x6a09e667);
    auto interior = [&](std::size_t dim) {
        std::vector<double> x(dim);
        double s = 0;
        for (auto& v : x) s += (v = -std::log1p(-rng.uniform()) + 1e-6);
        for (auto& v : x) v /= s;
        return x;
    };
    std::vector<Pattern> fixtures{complete_pattern(2),         complete_pattern(3),     complete_pattern(5),
                                  complete_pattern(3, 3),      complete_pattern(4, 3),  cycle_pattern(4),
                                  cycle_pattern(5),            cycle_pattern(7),        path_pattern(3),
                                  Pattern::from_multisets(3, 2, {{0, 0, 1}}),
                                  Pattern::from_multisets(4, 3, {{0, 0, 1, 2}, {1, 1, 1, 2}, {0, 1, 2, 2}})};
    double worst_fd = 0, worst_euler = 0;
    const double h = 1e-5;
    for (const auto& p : fixtures) {
        const auto ell = static_cast<std::size_t>(p.vertex_count());
        for (int t = 0; t < 100; ++t) {
            auto x = interior(ell);
            auto g = lagrange_gradient(p, x);
            for (std::size_t i = 0; i < ell; ++i) {
                auto up = x, dn = x;
                up[i] += h;
                dn[i] -= h;
                const double fd = (lagrange_value(p, up) - lagrange_value(p, dn)) / (2 * h);
                const double rel = std::abs(fd - g[i]) / std::max(std::abs(g[i]), 1e-12);
                worst_fd = std::max(worst_fd, rel);
                if (rel > 1e-4) o.fail(fmt("finite difference off by %.2e", rel));
            }
        }
        for (int t = 0; t < 1000; ++t) {
            auto x = interior(ell);
            auto g = lagrange_gradient(p, x);
            double s = 0;
            for (std::size_t i = 0; i < ell; ++i) s += x[i] * g[i];
            const double err = std::abs(s - p.uniformity() * lagrange_value(p, x));
            worst_euler = std::max(worst_euler, err);
            if (err > 1e-10) o.fail(fmt("Euler identity off by %.2e", err));
        }
    }
    o.detail = fmt("%zu patterns, max rel. FD error %.2e, max Euler error %.2e", fixtures.size(), worst_fd, worst_euler);
    report(6, "gradient and Euler identities", o);
}

// --- criterion 7 ------------------------------------------------------------

// All graphs on ell vertices up to isomorphism, as edge lists.
std::vector<std::vector<std::pair<int, int>>> graphs_up_to_iso(int ell) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) pairs.emplace_back(i, j);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t e = 0; e < pairs.size(); ++e) index[pairs[e]] = static_cast<int>(e);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(ell));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    std::vector<std::vector<std::pair<int, int>>> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::uint32_t canon = mask;
        for (const auto& p : perms) {
            std::uint32_t m = 0;
            for (std::size_t e = 0; e < pairs.size(); ++e) {
                if (!(mask >> e & 1)) continue;
                int a = p[pairs[e].first], b = p[pairs[e].second];
                m |= 1u << index[{std::min(a, b), std::max(a, b)}];
            }
            canon = std::min(canon, m);
        }
        if (!seen.insert(canon).second) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (canon >> e & 1) edges.push_back(pairs[e]);
        out.push_back(edges);
    }
    return out;
}

Pattern graph_pattern(int ell, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> m;
    for (auto [a, b] : edges) m.push_back({a, b});
    return Pattern::from_multisets(2, ell, m);
}

void rigidity_suite() {
    Outcome o;
    const auto start = Clock::now();
    OptConfig cfg;
    auto expect_rigid = [&](const std::string& name, const Pattern& p, bool want) {
        auto rep = rigidity_report(p, cfg);
        if (rep.rigid != want) o.fail(name + (want ? " reported non-rigid" : " reported rigid"));
    };
    for (int ell = 2; ell <= 5; ++ell) expect_rigid(fmt("K_%d", ell), complete_pattern(ell), true);
    expect_rigid("C_5", cycle_pattern(5), true);
    expect_rigid("C_7", cycle_pattern(7), true);
    expect_rigid("C_4", cycle_pattern(4), false);
    expect_rigid("P_3", path_pattern(3), false);

    std::size_t graphs = 0, twins = 0, minimal_count = 0;
    const int resolution = 60;
    for (int ell = 2; ell <= 5; ++ell) {
        for (const auto& edges : graphs_up_to_iso(ell)) {
            ++graphs;
            auto p = graph_pattern(ell, edges);
            const bool complete = p.is_complete();
            std::string name = fmt("graph on %d vertices with %zu edges", ell, edges.size());
            // Grid oracle: exact for graphs, since the maximum sits on a clique's
            // uniform point and every clique order up to 5 divides 60.
            const double grid = lagrangian_grid(p, resolution);
            bool grid_minimal = true;
            for (int i = 0; i < ell; ++i)
                grid_minimal = grid_minimal && lagrangian_grid(p.remove_vertex(i), resolution) < grid - 1e-9;
            auto mini = is_minimal(p, cfg);
            minimal_count += mini.minimal;
            if (mini.minimal != grid_minimal) o.fail(name + ": minimality disagrees with grid oracle");
            if (mini.minimal != complete) o.fail(name + ": minimal != complete");
            if (has_twins(p)) {
                ++twins;
                if (rigidity_report(p, cfg).rigid) o.fail(name + ": has twins but reported rigid");
            }
        }
    }
    o.detail = fmt("%zu graphs up to iso, %zu minimal, %zu with twins, %.1f s", graphs, minimal_count, twins,
                   since(start));
    report(7, "rigidity and minimality", o);
}

// --- criterion 8 ------------------------------------------------------------

void shom_suite() {
    Outcome o;
    const auto c5 = cycle_pattern(5);
    const auto prof = profile_pattern(c5);
    DeciderConfig cfg;
    // Smallest host in the suite is K_{3,3}.
    cfg.n_small = 6;
    std::size_t runs = 0, oracle_checks = 0;
    auto same = [&](const Hypergraph& h, Verdict want, bool surjective_oracle_expected, const std::string& name) {
        ++runs;
        auto d = decide_shom_rigid(h, c5, prof, cfg);
        if (d.verdict != want) o.fail(name + ": got " + to_string(d.verdict));
        const bool surj = find_homomorphism(h, c5, true).has_value();
        ++oracle_checks;
        if (surj != surjective_oracle_expected) o.fail(name + ": oracle disagrees with expectation");
        if ((d.verdict == Verdict::Yes) != surj) o.fail(name + ": decider and oracle disagree");
        return d;
    };
    for (std::size_t m = 3; m <= 6; ++m) {
        std::vector<std::size_t> sizes(5, m);
        auto parts = block_partition(sizes);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto perm = random_permutation(5 * m, seed * 31 + m);
            auto host = relabel(pattern_blowup(c5, sizes), perm);
            auto d = same(host, Verdict::Yes, true, fmt("C_5[%zu] seed %llu", m, (unsigned long long)seed));
            if (d.witness && !(d.witness->full_support() && d.witness->same_classes(relabel(parts, perm))))
                o.fail(fmt("C_5[%zu]: witness is not the 5-class blow-up partition", m));
            auto planted = relabel(plant_violation(pattern_blowup(c5, sizes), parts, seed), perm);
            same(planted, Verdict::No, false, fmt("C_5[%zu] + internal edge", m));
        }
        auto kmm = turan_graph(2 * m, 2);
        same(kmm, Verdict::No, false, fmt("K_{%zu,%zu}", m, m));
        if (!find_homomorphism(kmm, c5, false)) o.fail(fmt("K_{%zu,%zu}: no homomorphism to C_5", m, m));
    }
    // Shrunk copies.
    if (!find_homomorphism(pattern_blowup(c5, {2, 2, 2, 2, 2}), c5, true)) o.fail("C_5[2] not onto C_5");
    if (find_homomorphism(plant_violation(pattern_blowup(c5, {2, 2, 2, 2, 2}), block_partition({2, 2, 2, 2, 2}), 0),
                          c5, false))
        o.fail("C_5[2] + edge maps to C_5");
    if (find_homomorphism(turan_graph(6, 2), c5, true)) o.fail("K_{3,3} onto C_5");
    o.detail = fmt("%zu decisions, %zu oracle comparisons", runs, oracle_checks + 3);
    report(8, "surjective homomorphism suite", o);
}

// --- criterion 9 ------------------------------------------------------------

void join_suite() {
    Outcome o;
    std::size_t checks = 0, containing = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SplitMix64 rng(0xfeed0000 + seed);
        const std::size_t n = 5 + rng.below(11);
        const double p = 0.3 + 0.6 * rng.uniform();
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.uniform() < p) edges.push_back({u, v});
        Hypergraph g(2, n, edges);
        for (std::size_t q = 1; q <= 2; ++q) {
            auto j = join_construction(g, q, n);
            if (j.min_degree() < q * n) o.fail(fmt("seed %llu q=%zu: min degree below q*n", (unsigned long long)seed, q));
            for (int ell = 2; ell <= 4; ++ell) {
                ++checks;
                const bool base = find_embedding(graph_k(ell + 1), g).has_value();
                const bool big = find_embedding(graph_k(ell + 1 + static_cast<int>(q)), j).has_value();
                containing += base;
                if (base != big)
                    o.fail(fmt("seed %llu n=%zu q=%zu l=%d: %d vs %d", (unsigned long long)seed, n, q, ell, base, big));
            }
        }
    }
    o.detail = fmt("50 graphs, %zu equivalences checked (%zu clique-containing)", checks, containing);
    report(9, "join construction", o);
}

// --- criterion 10 -----------------------------------------------------------

void scaling_suite() {
    Outcome o;
    const auto start = Clock::now();
    auto rows = bench("kcolor", {1000, 2000, 4000}, 1);
    const double total = since(start);
    std::string ratios;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].verdict != Verdict::Yes) o.fail(fmt("n=%zu not Yes", rows[i].n));
        if (!rows[i].within_bound) o.fail(fmt("n=%zu: distance evaluations over l*n", rows[i].n));
        if (i == 0) continue;
        const double r = rows[i].seconds / rows[i - 1].seconds;
        ratios += fmt("%s%.2f", ratios.empty() ? "" : ", ", r);
        if (r < 3.0 || r > 6.0) o.fail(fmt("ratio %zu->%zu is %.2f", rows[i - 1].n, rows[i].n, r));
    }
    if (total >= 120.0) o.fail(fmt("took %.1f s", total));
    o.detail = fmt("ratios %s; per-call %.4f/%.4f/%.4f s; %.1f s total", ratios.c_str(), rows[0].seconds,
                   rows[1].seconds, rows[2].seconds, total);
    report(10, "scaling smoke test", o);
}

}  // namespace

int main() {
    const std::array<std::function<void()>, 8> suites{k_colorable_suite, clique_avg_suite, lagrangian_suite,
                                                      gradient_suite,    rigidity_suite,   shom_suite,
                                                      join_suite,        scaling_suite};
    for (const auto& s : suites) s();
    std::printf("%s: %d criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
    return g_failed ? 1 : 0;
}
