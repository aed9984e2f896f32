#include "degstab/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degstab/error.hpp"

namespace degstab {

Pattern::Pattern(int r, int ell, std::vector<Multiplicity> edges) : r_(r), ell_(ell), edges_(std::move(edges)) {
    if (r < 2) throw Error(ErrorKind::InvalidInput, "pattern uniformity must be at least 2");
    if (ell < 1) throw Error(ErrorKind::InvalidInput, "pattern needs at least one vertex");
    for (const auto& e : edges_) {
        if (e.size() != static_cast<std::size_t>(ell)) {
            throw Error(ErrorKind::InvalidInput, "multiplicity vector of wrong length");
        }
        if (std::any_of(e.begin(), e.end(), [](int c) { return c < 0; })) {
            throw Error(ErrorKind::InvalidInput, "negative multiplicity");
        }
        if (std::accumulate(e.begin(), e.end(), 0) != r) {
            throw Error(ErrorKind::InvalidInput, "multiplicities must sum to " + std::to_string(r));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw Error(ErrorKind::InvalidInput, "repeated pattern edge");
    }
}

Pattern Pattern::from_multisets(int r, int ell, const std::vector<std::vector<int>>& members) {
    std::vector<Multiplicity> edges;
    edges.reserve(members.size());
    for (const auto& m : members) {
        if (m.size() != static_cast<std::size_t>(r)) {
            throw Error(ErrorKind::InvalidInput, "pattern edge with " + std::to_string(m.size()) + " entries, expected " +
                                                     std::to_string(r));
        }
        Multiplicity e(static_cast<std::size_t>(ell), 0);
        for (int v : m) {
            if (v < 0 || v >= ell) throw Error(ErrorKind::InvalidVertex, "pattern vertex out of range");
            ++e[static_cast<std::size_t>(v)];
        }
        edges.push_back(std::move(e));
    }
    return Pattern(r, ell, std::move(edges));
}

Pattern Pattern::from_hypergraph(const Hypergraph& h) {
    std::vector<std::vector<int>> members;
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto e = h.edge(i);
        members.emplace_back(e.begin(), e.end());
    }
    return from_multisets(h.uniformity(), static_cast<int>(h.order()), members);
}

bool Pattern::contains(std::span<const int> multiplicity) const {
    Multiplicity key(multiplicity.begin(), multiplicity.end());
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

bool Pattern::is_simple() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Multiplicity& e) { return std::all_of(e.begin(), e.end(), [](int c) { return c <= 1; }); });
}

bool Pattern::is_complete() const {
    if (!is_simple() || ell_ < r_) return false;
    // C(ell, r) without overflow for the small sizes patterns have.
    long double c = 1;
    for (int i = 0; i < r_; ++i) c = c * (ell_ - i) / (i + 1);
    return static_cast<long double>(edges_.size()) == c;
}

int Pattern::max_multiplicity(int vertex) const {
    int out = 0;
    for (const auto& e : edges_) out = std::max(out, e[static_cast<std::size_t>(vertex)]);
    return out;
}

std::vector<int> Pattern::members(std::size_t i) const {
    std::vector<int> out;
    for (int v = 0; v < ell_; ++v) {
        for (int k = 0; k < edges_[i][static_cast<std::size_t>(v)]; ++k) out.push_back(v);
    }
    return out;
}

Hypergraph Pattern::to_hypergraph() const {
    if (!is_simple()) throw Error(ErrorKind::InvalidInput, "pattern has a repeated vertex inside an edge");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto m = members(i);
        edges.emplace_back(m.begin(), m.end());
    }
    return Hypergraph(r_, static_cast<std::size_t>(ell_), edges);
}

Pattern Pattern::remove_vertex(int i) const {
    if (i < 0 || i >= ell_) throw Error(ErrorKind::InvalidVertex, "pattern vertex out of range");
    if (ell_ == 1) throw Error(ErrorKind::InvalidInput, "cannot remove the only pattern vertex");
    std::vector<Multiplicity> edges;
    for (const auto& e : edges_) {
        if (e[static_cast<std::size_t>(i)] != 0) continue;
        Multiplicity f = e;
        f.erase(f.begin() + i);
        edges.push_back(std::move(f));
    }
    return Pattern(r_, ell_ - 1, std::move(edges));
}

Pattern complete_pattern(int ell, int r) {
    if (ell < 1 || r < 2) throw Error(ErrorKind::InvalidInput, "complete pattern needs ell >= 1, r >= 2");
    std::vector<Multiplicity> edges;
    if (ell >= r) {
        std::vector<int> pick(static_cast<std::size_t>(ell), 0);
        std::fill(pick.end() - r, pick.end(), 1);
        do {
            edges.push_back(pick);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return Pattern(r, ell, std::move(edges));
}

Pattern cycle_pattern(int k) {
    if (k < 3) throw Error(ErrorKind::InvalidInput, "cycle needs at least 3 vertices");
    std::vector<std::vector<int>> members;
    for (int i = 0; i < k; ++i) members.push_back({i, (i + 1) % k});
    return Pattern::from_multisets(2, k, members);
}

Pattern path_pattern(int k) {
    if (k < 2) throw Error(ErrorKind::InvalidInput, "path needs at least 2 vertices");
    std::vector<std::vector<int>> members;
    for (int i = 0; i + 1 < k; ++i) members.push_back({i, i + 1});
    return Pattern::from_multisets(2, k, members);
}

}  // namespace degstab
