#include "degstab/partition.hpp"

#include <algorithm>
#include <string>

#include "degstab/error.hpp"

namespace degstab {

Partition::Partition(std::size_t n, std::vector<std::vector<Vertex>> classes) : n_(n), classes_(std::move(classes)) {
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (auto& c : classes_) {
        std::sort(c.begin(), c.end());
        for (auto v : c) {
            if (v >= n) throw Error(ErrorKind::InvalidInput, "partition member " + std::to_string(v) + " out of range");
            if (seen[v]) throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " in two classes");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) throw Error(ErrorKind::InvalidInput, "partition does not cover every vertex");
}

Partition Partition::from_labels(std::span<const int> labels, std::size_t count) {
    std::vector<std::vector<Vertex>> classes(count);
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] < 0 || static_cast<std::size_t>(labels[v]) >= count) {
            throw Error(ErrorKind::InvalidInput, "class label out of range");
        }
        classes[static_cast<std::size_t>(labels[v])].push_back(static_cast<Vertex>(v));
    }
    return Partition(labels.size(), std::move(classes));
}

std::vector<int> Partition::labels() const {
    std::vector<int> out(n_, -1);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (auto v : classes_[i]) out[v] = static_cast<int>(i);
    }
    return out;
}

bool Partition::full_support() const {
    return std::none_of(classes_.begin(), classes_.end(), [](const auto& c) { return c.empty(); });
}

std::vector<std::vector<Vertex>> Partition::canonical_classes() const {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : classes_) {
        if (!c.empty()) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

bool Partition::same_classes(const Partition& other) const {
    return n_ == other.n_ && canonical_classes() == other.canonical_classes();
}

}  // namespace degstab
