#pragma once

#include <span>
#include <vector>

#include "degstab/hypergraph.hpp"

namespace degstab {

/// Multiplicity vector of an r-multiset over the pattern vertices: entry i
/// counts how often vertex i appears, entries sum to r.
using Multiplicity = std::vector<int>;

/// An r-pattern: ell vertices and a set of r-multisets over them. Vertices are
/// 0-based here; the text format and reports use 1-based labels.
class Pattern {
public:
    Pattern() = default;
    /// Throws InvalidInput on wrong length, negative entries, a sum other
    /// than r, or repeated edges.
    Pattern(int r, int ell, std::vector<Multiplicity> edges);

    /// Edges listed as r vertex labels (0-based) with repetition.
    static Pattern from_multisets(int r, int ell, const std::vector<std::vector<int>>& members);
    static Pattern from_hypergraph(const Hypergraph& h);

    int uniformity() const noexcept { return r_; }
    int vertex_count() const noexcept { return ell_; }
    std::size_t size() const noexcept { return edges_.size(); }
    /// Sorted lexicographically.
    const std::vector<Multiplicity>& edges() const noexcept { return edges_; }

    bool contains(std::span<const int> multiplicity) const;
    /// Every multiplicity is at most 1.
    bool is_simple() const;
    /// Simple and containing all C(ell, r) r-sets.
    bool is_complete() const;
    int max_multiplicity(int vertex) const;

    /// Members of edge i, e.g. {1,1,2} -> {0,0,1}.
    std::vector<int> members(std::size_t i) const;

    /// Throws InvalidInput when some edge repeats a vertex.
    Hypergraph to_hypergraph() const;

    /// Drops vertex i and every edge touching it; later vertices shift down.
    Pattern remove_vertex(int i) const;

    friend bool operator==(const Pattern& a, const Pattern& b) {
        return a.r_ == b.r_ && a.ell_ == b.ell_ && a.edges_ == b.edges_;
    }

private:
    int r_ = 2;
    int ell_ = 0;
    std::vector<Multiplicity> edges_;
};

/// Complete r-pattern on ell vertices (K_ell for r = 2).
Pattern complete_pattern(int ell, int r = 2);
/// Cycle C_k as a graph pattern.
Pattern cycle_pattern(int k);
/// Path on k vertices as a graph pattern.
Pattern path_pattern(int k);

}  // namespace degstab
