#include "degstab/bench.hpp"

#include <chrono>
#include <functional>

#include "degstab/corpus.hpp"
#include "degstab/error.hpp"

namespace degstab {

namespace {

BenchRow time_row(std::size_t n, int ell, const std::function<Decision()>& run, const BenchOptions& opts) {
    using clock = std::chrono::steady_clock;
    BenchRow row;
    row.n = n;
    Decision last;
    const auto start = clock::now();
    double elapsed = 0.0;
    while (row.repetitions < opts.min_repetitions || elapsed < opts.min_seconds) {
        last = run();
        ++row.repetitions;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
    }
    row.seconds = elapsed / row.repetitions;
    row.verdict = last.verdict;
    row.distance_evaluations = last.stats.distance_evaluations;
    row.distance_work = last.stats.distance_work;
    row.work = last.stats.work;
    row.within_bound = row.distance_evaluations <= static_cast<std::uint64_t>(ell) * n;
    return row;
}

std::vector<std::size_t> equal_parts(std::size_t n, int parts) {
    std::vector<std::size_t> s(static_cast<std::size_t>(parts), n / static_cast<std::size_t>(parts));
    for (std::size_t i = 0; i < n % static_cast<std::size_t>(parts); ++i) ++s[i];
    return s;
}

}  // namespace

std::vector<BenchRow> bench(const std::string& scenario, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                            const BenchOptions& opts) {
    std::vector<BenchRow> rows;
    if (scenario == "kcolor") {
        for (auto n : sizes) {
            auto g = relabel(turan_graph(n, 3), random_permutation(n, seed ^ n));
            rows.push_back(time_row(n, 3, [&] { return decide_k_colorable(g, 3); }, opts));
        }
    } else if (scenario == "hom") {
        auto p = complete_pattern(3, 3);
        auto prof = profile_pattern(p);
        // Parts differ by one when 3 does not divide n, which leaves the
        // minimum degree just under n^2/9.
        DeciderConfig cfg;
        cfg.eps = 0.01;
        for (auto n : sizes) {
            auto h = pattern_blowup(p, equal_parts(n, 3));
            h = relabel(h, random_permutation(h.order(), seed ^ n));
            rows.push_back(time_row(n, 3, [&] { return decide_hom_minimal(h, p, prof, cfg); }, opts));
        }
    } else if (scenario == "shom") {
        auto p = cycle_pattern(5);
        auto prof = profile_pattern(p);
        DeciderConfig cfg;
        cfg.n_small = 2;
        for (auto n : sizes) {
            auto h = pattern_blowup(p, equal_parts(n, 5));
            h = relabel(h, random_permutation(h.order(), seed ^ n));
            rows.push_back(time_row(n, 5, [&] { return decide_shom_rigid(h, p, prof, cfg); }, opts));
        }
    } else if (scenario == "avg") {
        for (auto n : sizes) {
            auto g = delete_random_edges(turan_graph(n, 2), 2, seed ^ n);
            g = relabel(g, random_permutation(n, seed ^ (n << 1)));
            rows.push_back(time_row(n, 2, [&] { return clique_avg_decide(g, 2, 2); }, opts));
        }
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown bench scenario '" + scenario + "'");
    }
    return rows;
}

}  // namespace degstab
