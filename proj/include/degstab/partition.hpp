#pragma once

#include <cstddef>
#include <vector>

#include "degstab/hypergraph.hpp"

namespace degstab {

/// Ordered list of disjoint vertex classes covering 0..n-1. Classes may be
/// empty; members of each class are kept sorted.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless the classes are disjoint and cover [0, n).
    Partition(std::size_t n, std::vector<std::vector<Vertex>> classes);

    /// Partition from a class label per vertex (labels in [0, count)).
    static Partition from_labels(std::span<const int> labels, std::size_t count);

    std::size_t class_count() const noexcept { return classes_.size(); }
    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
    const std::vector<Vertex>& operator[](std::size_t i) const { return classes_[i]; }

    /// Class index per vertex.
    std::vector<int> labels() const;

    /// True when no class is empty.
    bool full_support() const;

    /// Nonempty classes sorted by smallest member, empty classes dropped.
    std::vector<std::vector<Vertex>> canonical_classes() const;

    /// Same classes up to order (empty classes ignored).
    bool same_classes(const Partition& other) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n_ == b.n_ && a.classes_ == b.classes_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::vector<Vertex>> classes_;
};

}  // namespace degstab
