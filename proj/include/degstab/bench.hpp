#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degstab/deciders.hpp"

namespace degstab {

struct BenchRow {
    std::size_t n = 0;
    /// Mean wall time of one decider call.
    double seconds = 0.0;
    int repetitions = 0;
    std::uint64_t distance_evaluations = 0;
    std::uint64_t distance_work = 0;
    std::uint64_t work = 0;
    Verdict verdict = Verdict::PreconditionViolated;
    /// distance_evaluations <= ell * n.
    bool within_bound = false;
};

struct BenchOptions {
    /// Each row repeats the call until both limits are reached.
    double min_seconds = 0.2;
    int min_repetitions = 3;
};

/// Scenarios: kcolor (T(n,3)), hom (K_3^3 blow-up, eps = 0.01), shom (C_5 blow-up),
/// avg (T(n,2) minus 2 edges, k = 2). Instances are relabeled by a
/// permutation drawn from the seed; generation is not timed.
std::vector<BenchRow> bench(const std::string& scenario, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                            const BenchOptions& opts = {});

}  // namespace degstab
