#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "degstab/hypergraph.hpp"
#include "degstab/pattern.hpp"

namespace degstab {

// Brute-force reference implementations. All searches visit candidates in a
// fixed order, so repeated calls return the same answer.

struct OracleOptions {
    /// Wall-clock budget per call; exceeding it throws OracleTimeout.
    double time_budget_seconds = 60.0;
};

/// Injective map psi: V(F) -> V(H) with psi(e) in H for every e in F, or
/// nothing. Throws InvalidInput when the uniformities differ.
std::optional<std::vector<Vertex>> find_embedding(const Hypergraph& F, const Hypergraph& H,
                                                  const OracleOptions& opts = {});

/// Map V(H) -> [ell] sending every edge to a pattern edge (as a multiset), or
/// nothing. With surjective set, every pattern vertex must be hit.
/// Requires ell <= 64.
std::optional<std::vector<int>> find_homomorphism(const Hypergraph& H, const Pattern& P, bool surjective,
                                                  const OracleOptions& opts = {});

/// Edge count of the balanced complete ell-partite graph on n vertices.
std::uint64_t turan_number(std::uint64_t n, std::uint64_t ell);

/// Max of the Lagrange polynomial over simplex points with denominator
/// `resolution`. Throws InvalidInput when the grid exceeds 1e7 points.
double lagrangian_grid(const Pattern& P, int resolution);
/// Max over the same grid of the smallest partial derivative.
double phi_grid(const Pattern& P, int resolution);

/// Number of points of the grid above.
std::uint64_t grid_size(int ell, int resolution);

}  // namespace degstab
