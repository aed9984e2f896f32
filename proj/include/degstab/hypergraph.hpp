#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace degstab {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// An r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored once, as strictly increasing r-tuples in lexicographic
/// order, in a flat array. Two derived indexes back the distance queries:
/// for r = 2 every vertex owns a packed adjacency bit row, so the link
/// distance is a popcount over XORed rows; for r >= 3 every vertex owns a
/// sorted list of integer keys, one per (r-1)-set of its link, and the
/// distance is a merge count over two lists.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Edges may be given in any vertex order. Throws InvalidInput for r < 2
    /// or a repeated vertex inside an edge, InvalidVertex for an index >= n,
    /// and DuplicateEdge when two edges coincide as sets.
    Hypergraph(int r, std::size_t n, const std::vector<Edge>& edges);

    /// Same contract, with edges packed as consecutive r-tuples.
    static Hypergraph from_flat(int r, std::size_t n, std::vector<Vertex> flat);

    int uniformity() const noexcept { return r_; }
    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return r_ == 0 ? 0 : edges_.size() / static_cast<std::size_t>(r_); }

    std::span<const Vertex> edge(std::size_t i) const {
        return {edges_.data() + i * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
    }
    std::span<const Vertex> flat_edges() const noexcept { return edges_; }
    std::vector<Edge> edge_list() const;

    /// The tuple may be unsorted; returns false for malformed tuples.
    bool has_edge(std::span<const Vertex> tuple) const;
    /// r = 2 only.
    bool adjacent(Vertex u, Vertex v) const;

    std::size_t degree(Vertex v) const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;
    double average_degree() const;
    std::span<const std::size_t> degrees() const noexcept { return degrees_; }

    /// Link of v: every (r-1)-set A with A + {v} an edge, each sorted, in
    /// lexicographic order.
    std::vector<Edge> link(Vertex v) const;

    /// |L(u) symmetric-difference L(v)|. Throws InvalidInput when u == v.
    std::size_t hamming_distance(Vertex u, Vertex v) const;

    /// Packed adjacency row of v (r = 2 only); bit w set iff {v,w} is an edge.
    std::span<const std::uint64_t> adjacency_row(Vertex v) const;
    std::size_t words_per_row() const noexcept { return words_; }

    /// n^(r-1), saturating at UINT64_MAX.
    std::uint64_t link_universe() const noexcept;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;
    void build_indexes();
    std::size_t link_distance_unchecked(Vertex u, Vertex v) const;

    int r_ = 2;
    std::size_t n_ = 0;
    std::vector<Vertex> edges_;
    std::vector<std::size_t> degrees_;

    // r = 2
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;

    // r >= 3: CSR of sorted link keys
    std::vector<std::size_t> link_offsets_;
    std::vector<std::uint64_t> link_keys_;
};

struct InducedSubgraph {
    Hypergraph graph;
    /// to_parent[i] is the vertex of the original hypergraph behind vertex i.
    std::vector<Vertex> to_parent;
};

/// Sub-hypergraph induced on the vertex set S (duplicates ignored), relabeled
/// to 0..|S|-1 in increasing order of original index.
InducedSubgraph induced(const Hypergraph& h, std::span<const Vertex> subset);

}  // namespace degstab
