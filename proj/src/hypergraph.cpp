#include "degstab/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "degstab/error.hpp"

namespace degstab {

namespace {

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// n^k with saturation.
std::uint64_t saturating_pow(std::uint64_t n, int k) {
    std::uint64_t out = 1;
    for (int i = 0; i < k; ++i) {
        if (n != 0 && out > std::numeric_limits<std::uint64_t>::max() / n) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        out *= n;
    }
    return out;
}

}  // namespace

Hypergraph::Hypergraph(int r, std::size_t n, const std::vector<Edge>& edges) {
    if (r < 2) throw Error(ErrorKind::InvalidInput, "uniformity must be at least 2");
    std::vector<Vertex> flat;
    flat.reserve(edges.size() * static_cast<std::size_t>(r));
    for (const auto& e : edges) {
        if (e.size() != static_cast<std::size_t>(r)) {
            throw Error(ErrorKind::InvalidInput, "edge of size " + std::to_string(e.size()) +
                                                     " in a " + std::to_string(r) + "-graph");
        }
        flat.insert(flat.end(), e.begin(), e.end());
    }
    *this = from_flat(r, n, std::move(flat));
}

Hypergraph Hypergraph::from_flat(int r, std::size_t n, std::vector<Vertex> flat) {
    if (r < 2) throw Error(ErrorKind::InvalidInput, "uniformity must be at least 2");
    const auto rr = static_cast<std::size_t>(r);
    if (flat.size() % rr != 0) throw Error(ErrorKind::InvalidInput, "flat edge array is not a multiple of r");
    if (n > std::numeric_limits<Vertex>::max()) throw Error(ErrorKind::InvalidInput, "too many vertices");

    Hypergraph h;
    h.r_ = r;
    h.n_ = n;
    const std::size_t m = flat.size() / rr;
    for (std::size_t i = 0; i < m; ++i) {
        auto first = flat.begin() + static_cast<std::ptrdiff_t>(i * rr);
        std::sort(first, first + r);
        for (std::size_t j = 0; j < rr; ++j) {
            if (first[static_cast<std::ptrdiff_t>(j)] >= n) {
                throw Error(ErrorKind::InvalidVertex,
                            "vertex " + std::to_string(first[static_cast<std::ptrdiff_t>(j)]) + " out of range [0," +
                                std::to_string(n) + ")");
            }
            if (j > 0 && first[static_cast<std::ptrdiff_t>(j)] == first[static_cast<std::ptrdiff_t>(j - 1)]) {
                throw Error(ErrorKind::InvalidInput, "edge repeats vertex " + std::to_string(first[static_cast<std::ptrdiff_t>(j)]));
            }
        }
    }

    if (r == 2) {
        std::vector<std::uint64_t> keys(m);
        for (std::size_t i = 0; i < m; ++i) {
            keys[i] = (static_cast<std::uint64_t>(flat[2 * i]) << 32) | flat[2 * i + 1];
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < m; ++i) {
            if (i > 0 && keys[i] == keys[i - 1]) {
                throw Error(ErrorKind::DuplicateEdge, "duplicate edge {" + std::to_string(keys[i] >> 32) + "," +
                                                          std::to_string(keys[i] & 0xffffffffU) + "}");
            }
            flat[2 * i] = static_cast<Vertex>(keys[i] >> 32);
            flat[2 * i + 1] = static_cast<Vertex>(keys[i] & 0xffffffffU);
        }
        h.edges_ = std::move(flat);
    } else {
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto tuple = [&](std::size_t i) { return std::span<const Vertex>(flat.data() + i * rr, rr); };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_less(tuple(a), tuple(b)); });
        h.edges_.reserve(flat.size());
        for (std::size_t k = 0; k < m; ++k) {
            if (k > 0 && std::ranges::equal(tuple(order[k]), tuple(order[k - 1]))) {
                std::string s;
                for (auto v : tuple(order[k])) s += (s.empty() ? "" : ",") + std::to_string(v);
                throw Error(ErrorKind::DuplicateEdge, "duplicate edge {" + s + "}");
            }
            auto t = tuple(order[k]);
            h.edges_.insert(h.edges_.end(), t.begin(), t.end());
        }
    }
    h.build_indexes();
    return h;
}

void Hypergraph::build_indexes() {
    const auto rr = static_cast<std::size_t>(r_);
    degrees_.assign(n_, 0);
    for (auto v : edges_) ++degrees_[v];

    if (r_ == 2) {
        words_ = (n_ + 63) / 64;
        rows_.assign(n_ * words_, 0);
        for (std::size_t i = 0; i < size(); ++i) {
            Vertex a = edges_[2 * i];
            Vertex b = edges_[2 * i + 1];
            rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
            rows_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        }
        return;
    }

    // One entry per (edge, position): the (r-1)-set left after dropping that
    // position, keyed by its mixed-radix code when n^(r-1) fits in 64 bits
    // and by its rank among all such sets otherwise.
    const std::size_t m = size();
    link_offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) link_offsets_[v + 1] = link_offsets_[v] + degrees_[v];
    link_keys_.assign(m * rr, 0);
    std::vector<std::size_t> fill(link_offsets_.begin(), link_offsets_.end() - 1);

    const bool encodable = link_universe() != std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> rank;
    if (!encodable) {
        std::vector<std::uint64_t> inc(m * rr);
        std::iota(inc.begin(), inc.end(), std::uint64_t{0});
        auto less = [&](std::uint64_t a, std::uint64_t b) {
            const Vertex* ea = edges_.data() + (a / rr) * rr;
            const Vertex* eb = edges_.data() + (b / rr) * rr;
            std::size_t pa = a % rr, pb = b % rr;
            for (std::size_t k = 0; k + 1 < rr; ++k) {
                Vertex x = ea[k < pa ? k : k + 1];
                Vertex y = eb[k < pb ? k : k + 1];
                if (x != y) return x < y;
            }
            return false;
        };
        std::sort(inc.begin(), inc.end(), less);
        rank.assign(m * rr, 0);
        std::uint64_t next = 0;
        for (std::size_t k = 0; k < inc.size(); ++k) {
            if (k > 0 && less(inc[k - 1], inc[k])) ++next;
            rank[inc[k]] = next;
        }
    }

    for (std::size_t e = 0; e < m; ++e) {
        const Vertex* t = edges_.data() + e * rr;
        for (std::size_t p = 0; p < rr; ++p) {
            std::uint64_t key = 0;
            if (encodable) {
                for (std::size_t q = 0; q < rr; ++q) {
                    if (q != p) key = key * n_ + t[q];
                }
            } else {
                key = rank[e * rr + p];
            }
            link_keys_[fill[t[p]]++] = key;
        }
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(link_keys_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[v]),
                  link_keys_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[v + 1]));
    }
}

std::uint64_t Hypergraph::link_universe() const noexcept { return saturating_pow(n_, r_ - 1); }

std::vector<Edge> Hypergraph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

void Hypergraph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw Error(ErrorKind::InvalidVertex,
                    "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }
}

bool Hypergraph::has_edge(std::span<const Vertex> tuple) const {
    if (tuple.size() != static_cast<std::size_t>(r_)) return false;
    Edge t(tuple.begin(), tuple.end());
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= n_ || (i > 0 && t[i] == t[i - 1])) return false;
    }
    if (r_ == 2) return adjacent(t[0], t[1]);
    const auto rr = static_cast<std::size_t>(r_);
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (lex_less(edge(mid), t)) lo = mid + 1;
        else hi = mid;
    }
    return lo < size() && std::equal(t.begin(), t.end(), edges_.begin() + static_cast<std::ptrdiff_t>(lo * rr));
}

bool Hypergraph::adjacent(Vertex u, Vertex v) const {
    if (r_ != 2) throw Error(ErrorKind::InvalidInput, "adjacency rows exist only for graphs");
    check_vertex(u);
    check_vertex(v);
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t Hypergraph::degree(Vertex v) const {
    check_vertex(v);
    return degrees_[v];
}

std::size_t Hypergraph::min_degree() const {
    if (n_ == 0) throw Error(ErrorKind::InvalidInput, "minimum degree of an empty vertex set");
    return *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Hypergraph::max_degree() const {
    if (n_ == 0) throw Error(ErrorKind::InvalidInput, "maximum degree of an empty vertex set");
    return *std::max_element(degrees_.begin(), degrees_.end());
}

double Hypergraph::average_degree() const {
    if (n_ == 0) throw Error(ErrorKind::InvalidInput, "average degree of an empty vertex set");
    return static_cast<double>(size()) * r_ / static_cast<double>(n_);
}

std::vector<Edge> Hypergraph::link(Vertex v) const {
    check_vertex(v);
    std::vector<Edge> out;
    const auto rr = static_cast<std::size_t>(r_);
    for (std::size_t i = 0; i < size(); ++i) {
        auto e = edge(i);
        if (!std::binary_search(e.begin(), e.end(), v)) continue;
        Edge a;
        a.reserve(rr - 1);
        for (auto w : e) {
            if (w != v) a.push_back(w);
        }
        out.push_back(std::move(a));
    }
    return out;  // edges are lexicographic, and dropping a fixed v preserves that order
}

std::size_t Hypergraph::hamming_distance(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorKind::InvalidInput, "distance needs two distinct vertices");
    return link_distance_unchecked(u, v);
}

std::size_t Hypergraph::link_distance_unchecked(Vertex u, Vertex v) const {
    if (r_ == 2) {
        const std::uint64_t* a = rows_.data() + u * words_;
        const std::uint64_t* b = rows_.data() + v * words_;
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
        return d;
    }
    auto i = link_keys_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[u]);
    auto ie = link_keys_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[u + 1]);
    auto j = link_keys_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[v]);
    auto je = link_keys_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[v + 1]);
    std::size_t common = 0;
    while (i != ie && j != je) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            ++common;
            ++i;
            ++j;
        }
    }
    return degrees_[u] + degrees_[v] - 2 * common;
}

std::span<const std::uint64_t> Hypergraph::adjacency_row(Vertex v) const {
    if (r_ != 2) throw Error(ErrorKind::InvalidInput, "adjacency rows exist only for graphs");
    check_vertex(v);
    return {rows_.data() + v * words_, words_};
}

InducedSubgraph induced(const Hypergraph& h, std::span<const Vertex> subset) {
    std::vector<Vertex> verts(subset.begin(), subset.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> local(h.order(), absent);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] >= h.order()) {
            throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(verts[i]) + " out of range");
        }
        local[verts[i]] = static_cast<Vertex>(i);
    }
    std::vector<Vertex> flat;
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto e = h.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return local[v] != absent; })) {
            for (auto v : e) flat.push_back(local[v]);
        }
    }
    return {Hypergraph::from_flat(h.uniformity(), verts.size(), std::move(flat)), std::move(verts)};
}

}  // namespace degstab
