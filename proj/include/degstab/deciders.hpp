#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degstab/hypergraph.hpp"
#include "degstab/lagrangian.hpp"
#include "degstab/partition.hpp"
#include "degstab/pattern.hpp"
#include "degstab/rational.hpp"

namespace degstab {

enum class Verdict { Yes, No, PreconditionViolated };

const char* to_string(Verdict v);

struct DecisionStats {
    /// dist() calls made by the clustering step.
    std::uint64_t distance_evaluations = 0;
    /// distance_evaluations * n^(r-1): the cost model of one evaluation.
    std::uint64_t distance_work = 0;
    /// Edges inspected by the independence checks.
    std::uint64_t edge_checks = 0;
    /// distance_work + edge_checks.
    std::uint64_t work = 0;
    /// Vertices removed by peeling (clique_avg_decide only).
    std::size_t peeled = 0;
    bool used_oracle = false;
};

/// Which inequality failed, in printable form.
struct PreconditionInfo {
    std::string condition;
    std::string actual;
    std::string bound;
};

struct Decision {
    Verdict verdict = Verdict::PreconditionViolated;
    /// Yes: the coloring. For pattern deciders class i is the preimage of
    /// pattern vertex i.
    std::optional<Partition> witness;
    /// No: an edge of the input certifying the answer, when one exists.
    std::optional<Edge> violating_edge;
    /// No from clique_avg_decide step 3: the peeled vertex with no free class.
    std::optional<Vertex> stuck_vertex;
    std::optional<PreconditionInfo> precondition;
    std::string reason;
    DecisionStats stats;
    /// clique_avg_decide: the removal order.
    std::vector<Vertex> peel_order;
};

struct DeciderConfig {
    /// Slack below the degree threshold the caller accepts; eps >= 0.
    double eps = 0.0;
    /// Below this order the oracle answers (embed) or the input is rejected
    /// (hom, shom; oracle when strict is off). Defaults: 3 v(F) for embed,
    /// 3 ell r for hom and shom.
    std::optional<std::size_t> n_small;
    /// true: sub-threshold inputs give PreconditionViolated; false: the
    /// brute-force oracle answers instead (exponential worst case).
    bool strict = true;
    OptConfig opt;
};

struct ClusterResult {
    Partition partition;
    /// Seed of each W_i, i < ell, in order of selection.
    std::vector<Vertex> seeds;
    std::uint64_t radius = 0;
    std::uint64_t distance_evaluations = 0;
};

/// Hamming clustering with the ball radius floor(delta * n^(r-1)).
ClusterResult hamming_clustering(const Hypergraph& h, int ell, const Rational& delta);
ClusterResult hamming_clustering(const Hypergraph& h, int ell, double delta);
ClusterResult hamming_clustering_radius(const Hypergraph& h, int ell, std::uint64_t radius);

/// K_ell-colorability of a graph above the minimum degree
/// (3 ell - 4) n / (3 ell - 1).
Decision decide_k_colorable(const Hypergraph& g, int ell, const DeciderConfig& cfg = {});

/// P-colorability for a minimal pattern. Throws PatternNotMinimal.
Decision decide_hom_minimal(const Hypergraph& h, const Pattern& p, const DeciderConfig& cfg = {});
/// Same with the pattern quantities supplied by the caller.
Decision decide_hom_minimal(const Hypergraph& h, const Pattern& p, const PatternProfile& prof,
                            const DeciderConfig& cfg = {});

/// Surjective P-colorability for a rigid pattern. Throws PatternNotRigid.
Decision decide_shom_rigid(const Hypergraph& h, const Pattern& p, const DeciderConfig& cfg = {});
Decision decide_shom_rigid(const Hypergraph& h, const Pattern& p, const PatternProfile& prof,
                           const DeciderConfig& cfg = {});

/// F-freeness for a Turan pair (F, P) supplied by the caller. Yes means
/// F-free.
Decision embed_min_decide(const Hypergraph& h, const Hypergraph& f, const Pattern& p, const DeciderConfig& cfg = {});
Decision embed_min_decide(const Hypergraph& h, const Hypergraph& f, const Pattern& p, const PatternProfile& prof,
                          const DeciderConfig& cfg = {});

struct PeelResult {
    std::vector<Vertex> order;
    std::size_t z = 0;
    /// Survivors, ascending.
    std::vector<Vertex> survivors;
};

/// Removes minimum-degree vertices (lowest index on ties) until the minimum
/// degree of the rest exceeds (3 ell - 4)(n - i) / (3 ell - 1).
PeelResult peel(const Hypergraph& g, int ell);

/// K_{ell+1}-freeness for graphs with at least ex(n, K_{ell+1}) - k edges.
/// Yes means K_{ell+1}-free.
Decision clique_avg_decide(const Hypergraph& g, int ell, std::uint64_t k, const DeciderConfig& cfg = {});

}  // namespace degstab
