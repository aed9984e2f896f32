#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degstab/hypergraph.hpp"
#include "degstab/partition.hpp"
#include "degstab/pattern.hpp"

namespace degstab {

// Instance generators. Every random choice goes through SplitMix64, so a
// (seed, parameters) pair reproduces the same instance on any platform.

/// Balanced complete ell-partite graph; the first n mod ell parts get the
/// extra vertex. Parts are consecutive index ranges.
Hypergraph turan_graph(std::size_t n, int ell);
Partition turan_parts(std::size_t n, int ell);

/// Consecutive classes of the given sizes.
Partition block_partition(const std::vector<std::size_t>& sizes);

/// Classes of the given sizes (consecutive ranges); a pattern edge with
/// multiplicities e contributes every r-set taking e(i) distinct vertices
/// from class i. Throws InvalidInput when a class is smaller than a
/// multiplicity it must host.
Hypergraph pattern_blowup(const Pattern& p, const std::vector<std::size_t>& sizes);

/// H minus k edges chosen uniformly without replacement.
Hypergraph delete_random_edges(const Hypergraph& h, std::size_t k, std::uint64_t seed);

/// H plus one missing r-set inside a single class, class and set drawn from
/// the seed. Throws InvalidInput when no class admits one.
Hypergraph plant_violation(const Hypergraph& h, const Partition& parts, std::uint64_t seed);

/// G plus q independent sets of part_size vertices, completely joined to
/// each other and to V(G). Graphs only; q, part_size >= 1.
Hypergraph join_construction(const Hypergraph& g, std::size_t q, std::size_t part_size);

/// Vertex v becomes perm[v].
Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm);
Partition relabel(const Partition& p, const std::vector<Vertex>& perm);
std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed);

struct CatalogParams {
    int k = 3;  // vertex count, edge count or cycle length, per family
    int t = 2;  // blow-up factor
    int r = 3;  // uniformity where the family has one
    /// Graph to expand (expansion); K_k when absent.
    std::optional<Hypergraph> base;
};

/// Named fixtures: complete (K_k^r), blowup (K_k^r[t]), generalized_triangle
/// (T_r), matching (M_k^r), sunflower (L_k^r), fano, f7, f32, f43, k43_k33,
/// cycle (C_k), expansion (H_F^r of params.base). Throws InvalidInput on an
/// unknown name or bad parameters.
Hypergraph catalog(const std::string& name, const CatalogParams& params = {});
const std::vector<std::string>& catalog_names();

/// Complete ell-partite graph with randomly shifted part sizes and random
/// cross-edge deletions, every vertex kept above the degree bound
/// (3 ell - 4) n / (3 ell - 1), then relabeled by a random permutation. With
/// plant set, one edge is added inside a class.
struct NoisyInstance {
    Hypergraph graph;
    Partition parts;
    bool planted = false;
};
NoisyInstance noisy_turan(std::size_t n, int ell, std::uint64_t seed, bool plant);

/// 64-bit FNV-1a over (r, n, sorted edge list).
std::uint64_t digest(const Hypergraph& h);

}  // namespace degstab
