#include "degstab/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "degstab/error.hpp"
#include "degstab/rng.hpp"

namespace degstab {

namespace {

std::vector<std::size_t> balanced_sizes(std::size_t n, int ell) {
    const auto L = static_cast<std::size_t>(ell);
    std::vector<std::size_t> sizes(L, n / L);
    for (std::size_t i = 0; i < n % L; ++i) ++sizes[i];
    return sizes;
}

Hypergraph complete_multipartite(const std::vector<std::size_t>& sizes) {
    std::vector<int> cls;
    for (std::size_t i = 0; i < sizes.size(); ++i) cls.insert(cls.end(), sizes[i], static_cast<int>(i));
    const std::size_t n = cls.size();
    std::vector<Vertex> flat;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (cls[u] != cls[v]) {
                flat.push_back(static_cast<Vertex>(u));
                flat.push_back(static_cast<Vertex>(v));
            }
        }
    }
    return Hypergraph::from_flat(2, n, std::move(flat));
}

// All k-subsets of [begin, begin + size), appended to `out` in lexicographic
// order.
void subsets(Vertex begin, std::size_t size, int k, std::vector<std::vector<Vertex>>& out) {
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < begin + size; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, begin);
}

Hypergraph from_one_based(int r, std::size_t n, const std::vector<std::vector<Vertex>>& edges) {
    std::vector<Edge> out;
    for (const auto& e : edges) {
        Edge z;
        for (auto v : e) z.push_back(v - 1);
        out.push_back(std::move(z));
    }
    return Hypergraph(r, n, out);
}

void need(bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::InvalidInput, what);
}

}  // namespace

Hypergraph turan_graph(std::size_t n, int ell) {
    need(ell >= 1 && n >= static_cast<std::size_t>(ell), "turan_graph needs n >= ell >= 1");
    return complete_multipartite(balanced_sizes(n, ell));
}

Partition turan_parts(std::size_t n, int ell) {
    need(ell >= 1, "turan_parts needs ell >= 1");
    return block_partition(balanced_sizes(n, ell));
}

Partition block_partition(const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<Vertex>> classes;
    Vertex next = 0;
    for (auto s : sizes) {
        std::vector<Vertex> c(s);
        std::iota(c.begin(), c.end(), next);
        next += static_cast<Vertex>(s);
        classes.push_back(std::move(c));
    }
    return Partition(next, std::move(classes));
}

Hypergraph pattern_blowup(const Pattern& p, const std::vector<std::size_t>& sizes) {
    const int ell = p.vertex_count();
    need(sizes.size() == static_cast<std::size_t>(ell), "one size per pattern vertex required");
    std::vector<Vertex> start(sizes.size(), 0);
    for (std::size_t i = 1; i < sizes.size(); ++i) start[i] = start[i - 1] + static_cast<Vertex>(sizes[i - 1]);
    const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    for (int i = 0; i < ell; ++i) {
        if (sizes[static_cast<std::size_t>(i)] < static_cast<std::size_t>(p.max_multiplicity(i))) {
            throw Error(ErrorKind::InvalidInput, "class " + std::to_string(i + 1) + " smaller than a multiplicity");
        }
    }
    std::vector<Vertex> flat;
    for (const auto& e : p.edges()) {
        // Per pattern vertex, the choices of e(i) distinct class members.
        std::vector<std::vector<std::vector<Vertex>>> choices;
        for (int i = 0; i < ell; ++i) {
            int c = e[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            std::vector<std::vector<Vertex>> s;
            subsets(start[static_cast<std::size_t>(i)], sizes[static_cast<std::size_t>(i)], c, s);
            choices.push_back(std::move(s));
        }
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            for (std::size_t j = 0; j < choices.size(); ++j) {
                const auto& part = choices[j][idx[j]];
                flat.insert(flat.end(), part.begin(), part.end());
            }
            std::size_t j = choices.size();
            while (j > 0 && ++idx[j - 1] == choices[j - 1].size()) idx[--j] = 0;
            if (j == 0) break;
        }
    }
    return Hypergraph::from_flat(p.uniformity(), n, std::move(flat));
}

Hypergraph delete_random_edges(const Hypergraph& h, std::size_t k, std::uint64_t seed) {
    const std::size_t m = h.size();
    need(k <= m, "cannot delete more edges than the hypergraph has");
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<char> drop(m, 0);
    for (std::size_t i = 0; i < k; ++i) drop[idx[i]] = 1;
    std::vector<Vertex> flat;
    for (std::size_t e = 0; e < m; ++e) {
        if (drop[e]) continue;
        auto ed = h.edge(e);
        flat.insert(flat.end(), ed.begin(), ed.end());
    }
    return Hypergraph::from_flat(h.uniformity(), h.order(), std::move(flat));
}

Hypergraph plant_violation(const Hypergraph& h, const Partition& parts, std::uint64_t seed) {
    need(parts.vertex_count() == h.order(), "partition does not match the hypergraph");
    const int r = h.uniformity();
    std::vector<std::vector<std::vector<Vertex>>> missing;
    for (const auto& cls : parts.classes()) {
        std::vector<std::vector<Vertex>> gaps;
        if (cls.size() >= static_cast<std::size_t>(r)) {
            std::vector<std::vector<Vertex>> all;
            subsets(0, cls.size(), r, all);
            for (auto& s : all) {
                for (auto& v : s) v = cls[v];
                if (!h.has_edge(s)) gaps.push_back(std::move(s));
            }
        }
        if (!gaps.empty()) missing.push_back(std::move(gaps));
    }
    need(!missing.empty(), "no class can receive an internal edge");
    SplitMix64 rng(seed);
    const auto& gaps = missing[rng.below(missing.size())];
    const auto& pick = gaps[rng.below(gaps.size())];
    auto flat = std::vector<Vertex>(h.flat_edges().begin(), h.flat_edges().end());
    flat.insert(flat.end(), pick.begin(), pick.end());
    return Hypergraph::from_flat(r, h.order(), std::move(flat));
}

Hypergraph join_construction(const Hypergraph& g, std::size_t q, std::size_t part_size) {
    need(g.uniformity() == 2, "join_construction needs a graph");
    need(q >= 1, "q must be at least 1");
    need(part_size >= 1, "part_size must be at least 1");
    const std::size_t n0 = g.order();
    const std::size_t n = n0 + q * part_size;
    auto part_of = [&](std::size_t v) { return v < n0 ? std::size_t{0} : 1 + (v - n0) / part_size; };
    std::vector<Vertex> flat(g.flat_edges().begin(), g.flat_edges().end());
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = std::max(u + 1, n0); v < n; ++v) {
            if (part_of(u) != part_of(v)) {
                flat.push_back(static_cast<Vertex>(u));
                flat.push_back(static_cast<Vertex>(v));
            }
        }
    }
    return Hypergraph::from_flat(2, n, std::move(flat));
}

Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm) {
    need(perm.size() == h.order(), "permutation size mismatch");
    std::vector<Vertex> flat(h.flat_edges().begin(), h.flat_edges().end());
    for (auto& v : flat) v = perm[v];
    return Hypergraph::from_flat(h.uniformity(), h.order(), std::move(flat));
}

Partition relabel(const Partition& p, const std::vector<Vertex>& perm) {
    need(perm.size() == p.vertex_count(), "permutation size mismatch");
    auto classes = p.classes();
    for (auto& c : classes) {
        for (auto& v : c) v = perm[v];
    }
    return Partition(p.vertex_count(), std::move(classes));
}

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    SplitMix64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"complete", "blowup", "generalized_triangle", "matching",
                                                   "sunflower", "fano", "f7", "f32", "f43", "k43_k33",
                                                   "cycle", "expansion"};
    return names;
}

Hypergraph catalog(const std::string& name, const CatalogParams& prm) {
    const int k = prm.k, r = prm.r;
    if (name == "complete") {
        need(k >= 1 && r >= 2, "complete needs k >= 1, r >= 2");
        return complete_pattern(k, r).to_hypergraph();
    }
    if (name == "blowup") {
        need(k >= 1 && r >= 2 && prm.t >= 1, "blowup needs k >= 1, r >= 2, t >= 1");
        return pattern_blowup(complete_pattern(k, r), std::vector<std::size_t>(static_cast<std::size_t>(k),
                                                                                static_cast<std::size_t>(prm.t)));
    }
    if (name == "generalized_triangle") {
        need(r >= 2, "generalized_triangle needs r >= 2");
        std::vector<Edge> edges(3);
        for (int i = 0; i < r - 1; ++i) {
            edges[0].push_back(static_cast<Vertex>(i));
            edges[1].push_back(static_cast<Vertex>(i));
        }
        edges[0].push_back(static_cast<Vertex>(r - 1));
        edges[1].push_back(static_cast<Vertex>(r));
        for (int i = r - 1; i < 2 * r - 1; ++i) edges[2].push_back(static_cast<Vertex>(i));
        return Hypergraph(r, static_cast<std::size_t>(2 * r - 1), edges);
    }
    if (name == "matching") {
        need(k >= 1 && r >= 2, "matching needs k >= 1, r >= 2");
        const auto n = static_cast<std::size_t>(k * r);
        std::vector<Vertex> flat(n);
        std::iota(flat.begin(), flat.end(), Vertex{0});
        return Hypergraph::from_flat(r, n, std::move(flat));
    }
    if (name == "sunflower") {
        need(k >= 1 && r >= 2, "sunflower needs k >= 1, r >= 2");
        std::vector<Vertex> flat;
        Vertex next = 1;
        for (int i = 0; i < k; ++i) {
            flat.push_back(0);
            for (int j = 0; j < r - 1; ++j) flat.push_back(next++);
        }
        return Hypergraph::from_flat(r, next, std::move(flat));
    }
    if (name == "fano") {
        return from_one_based(3, 7, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {1, 7, 4}, {2, 7, 5}, {3, 7, 6}, {2, 4, 6}});
    }
    if (name == "f7") return from_one_based(4, 7, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {4, 5, 6, 7}});
    if (name == "f43") {
        return from_one_based(4, 7, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 3, 7}, {4, 5, 6, 7}});
    }
    if (name == "f32") return from_one_based(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}});
    if (name == "k43_k33") {
        return from_one_based(3, 7, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {5, 6, 7}});
    }
    if (name == "cycle") {
        need(k >= 3, "cycle needs k >= 3");
        return cycle_pattern(k).to_hypergraph();
    }
    if (name == "expansion") {
        need(r >= 2, "expansion needs r >= 2");
        Hypergraph base = prm.base ? *prm.base : complete_pattern(std::max(k, 2)).to_hypergraph();
        need(base.uniformity() == 2, "expansion base must be a graph");
        std::vector<Vertex> flat;
        auto next = static_cast<Vertex>(base.order());
        for (std::size_t e = 0; e < base.size(); ++e) {
            auto ed = base.edge(e);
            flat.insert(flat.end(), ed.begin(), ed.end());
            for (int j = 0; j < r - 2; ++j) flat.push_back(next++);
        }
        return Hypergraph::from_flat(r, next, std::move(flat));
    }
    throw Error(ErrorKind::InvalidInput, "unknown catalog name '" + name + "'");
}

NoisyInstance noisy_turan(std::size_t n, int ell, std::uint64_t seed, bool plant) {
    need(ell >= 2 && n >= static_cast<std::size_t>(ell), "noisy_turan needs n >= ell >= 2");
    SplitMix64 rng(seed);
    const auto a = static_cast<long long>(3 * ell - 1), b = static_cast<long long>(3 * ell - 4);
    const auto N = static_cast<long long>(n);
    auto degree_ok = [&](long long d) { return a * d > b * N; };

    auto sizes = balanced_sizes(n, ell);
    need(degree_ok(N - static_cast<long long>(sizes.front())),
         "no ell-partite graph on n vertices meets the degree bound");
    const std::size_t moves = static_cast<std::size_t>(rng.below(n / 4 + 1));
    for (std::size_t i = 0; i < moves; ++i) {
        auto from = static_cast<std::size_t>(rng.below(sizes.size()));
        auto to = static_cast<std::size_t>(rng.below(sizes.size()));
        if (from == to || sizes[from] <= 1) continue;
        --sizes[from];
        ++sizes[to];
        // The largest part fixes the minimum degree n - max.
        if (!degree_ok(N - static_cast<long long>(*std::max_element(sizes.begin(), sizes.end())))) {
            ++sizes[from];
            --sizes[to];
        }
    }
    std::vector<int> cls;
    for (std::size_t i = 0; i < sizes.size(); ++i) cls.insert(cls.end(), sizes[i], static_cast<int>(i));
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<long long> deg(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && cls[u] != cls[v]) {
                adj[u][v] = 1;
                ++deg[u];
            }
        }
    }
    const std::size_t deletions = static_cast<std::size_t>(rng.below(n + 1));
    for (std::size_t t = 0; t < 4 * deletions; ++t) {
        auto u = static_cast<std::size_t>(rng.below(n));
        auto v = static_cast<std::size_t>(rng.below(n));
        if (!adj[u][v] || !degree_ok(deg[u] - 1) || !degree_ok(deg[v] - 1)) continue;
        adj[u][v] = adj[v][u] = 0;
        --deg[u];
        --deg[v];
    }
    std::vector<Vertex> flat;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (adj[u][v]) {
                flat.push_back(static_cast<Vertex>(u));
                flat.push_back(static_cast<Vertex>(v));
            }
        }
    }
    NoisyInstance out;
    out.graph = Hypergraph::from_flat(2, n, std::move(flat));
    out.parts = block_partition(sizes);
    if (plant) {
        out.graph = plant_violation(out.graph, out.parts, rng.next());
        out.planted = true;
    }
    auto perm = random_permutation(n, rng.next());
    out.graph = relabel(out.graph, perm);
    out.parts = relabel(out.parts, perm);
    return out;
}

std::uint64_t digest(const Hypergraph& h) {
    std::uint64_t x = 0xcbf29ce484222325ULL;
    auto feed = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            x ^= (v >> (8 * i)) & 0xff;
            x *= 0x100000001b3ULL;
        }
    };
    feed(static_cast<std::uint64_t>(h.uniformity()));
    feed(h.order());
    for (auto v : h.flat_edges()) feed(v);
    return x;
}

}  // namespace degstab
