#include "degstab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "degstab/error.hpp"

namespace degstab {

namespace {

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(seconds))) {}

    // Polled every 4096 nodes to keep clock reads off the hot path.
    void tick(const char* who) {
        if ((++count_ & 4095) != 0) return;
        if (std::chrono::steady_clock::now() > end_) {
            throw Error(ErrorKind::OracleTimeout, std::string(who) + ": time budget exhausted");
        }
    }

private:
    std::chrono::steady_clock::time_point end_;
    std::uint64_t count_ = 0;
};

class HomSearch {
public:
    HomSearch(const Hypergraph& h, const Pattern& p, bool surjective, const OracleOptions& opts)
        : h_(h), p_(p), surjective_(surjective), deadline_(opts.time_budget_seconds), ell_(p.vertex_count()),
          n_(h.order()), incidence_(h.order()), color_(h.order(), -1), hits_(static_cast<std::size_t>(ell_), 0),
          scratch_(static_cast<std::size_t>(ell_), 0) {
        const std::uint64_t full = ell_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ell_) - 1;
        domain_.assign(n_, full);
        for (std::size_t e = 0; e < h.size(); ++e) {
            for (auto v : h.edge(e)) incidence_[v].push_back(e);
        }
        unassigned_ = n_;
    }

    std::optional<std::vector<int>> run() {
        if (surjective_ && n_ < static_cast<std::size_t>(ell_)) return std::nullopt;
        if (!search()) return std::nullopt;
        return color_;
    }

private:
    bool extendable(const std::vector<int>& partial) const {
        for (const auto& e : p_.edges()) {
            bool ok = true;
            for (int i = 0; i < ell_ && ok; ++i) ok = e[static_cast<std::size_t>(i)] >= partial[static_cast<std::size_t>(i)];
            if (ok) return true;
        }
        return false;
    }

    bool narrow(Vertex w, std::uint64_t mask) {
        if (mask == domain_[w]) return true;
        trail_.emplace_back(w, domain_[w]);
        domain_[w] = mask;
        return mask != 0;
    }

    // Checks every edge through v after v was colored; edges with one open
    // vertex restrict that vertex's domain.
    bool propagate(Vertex v) {
        for (auto e : incidence_[v]) {
            Vertex open = 0;
            int open_count = 0;
            for (auto u : h_.edge(e)) {
                if (color_[u] < 0) {
                    open = u;
                    ++open_count;
                } else {
                    ++scratch_[static_cast<std::size_t>(color_[u])];
                }
            }
            bool ok = true;
            if (open_count == 0) {
                ok = p_.contains(scratch_);
            } else if (!extendable(scratch_)) {
                ok = false;
            } else if (open_count == 1) {
                std::uint64_t keep = 0;
                for (std::uint64_t m = domain_[open]; m != 0; m &= m - 1) {
                    auto c = static_cast<std::size_t>(std::countr_zero(m));
                    ++scratch_[c];
                    if (p_.contains(scratch_)) keep |= std::uint64_t{1} << c;
                    --scratch_[c];
                }
                ok = narrow(open, keep);
            }
            for (auto u : h_.edge(e)) {
                if (color_[u] >= 0) scratch_[static_cast<std::size_t>(color_[u])] = 0;
            }
            if (!ok) return false;
        }
        return true;
    }

    bool surjection_possible() const {
        std::size_t missing = 0;
        std::uint64_t reachable = 0;
        for (int c = 0; c < ell_; ++c) missing += hits_[static_cast<std::size_t>(c)] == 0;
        if (missing == 0) return true;
        if (missing > unassigned_) return false;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] < 0) reachable |= domain_[v];
        }
        for (int c = 0; c < ell_; ++c) {
            if (hits_[static_cast<std::size_t>(c)] == 0 && !(reachable >> c & 1)) return false;
        }
        return true;
    }

    bool search() {
        deadline_.tick("find_homomorphism");
        // Smallest domain first, lowest index on ties.
        std::size_t best = n_;
        int best_size = 65;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            int s = std::popcount(domain_[v]);
            if (s < best_size) {
                best_size = s;
                best = v;
            }
        }
        if (best == n_) {
            return !surjective_ || std::all_of(hits_.begin(), hits_.end(), [](int x) { return x > 0; });
        }
        const auto v = static_cast<Vertex>(best);
        for (std::uint64_t m = domain_[v]; m != 0; m &= m - 1) {
            const int c = std::countr_zero(m);
            const std::size_t mark = trail_.size();
            color_[v] = c;
            ++hits_[static_cast<std::size_t>(c)];
            --unassigned_;
            bool ok = propagate(v) && (!surjective_ || surjection_possible());
            if (ok && search()) return true;
            ++unassigned_;
            --hits_[static_cast<std::size_t>(c)];
            color_[v] = -1;
            while (trail_.size() > mark) {
                domain_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
        }
        return false;
    }

    const Hypergraph& h_;
    const Pattern& p_;
    bool surjective_;
    Deadline deadline_;
    int ell_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<int> color_;
    std::vector<std::uint64_t> domain_;
    std::vector<int> hits_;
    std::vector<int> scratch_;
    std::vector<std::pair<Vertex, std::uint64_t>> trail_;
    std::size_t unassigned_ = 0;
};

class EmbedSearch {
public:
    EmbedSearch(const Hypergraph& f, const Hypergraph& h, const OracleOptions& opts)
        : f_(f), h_(h), deadline_(opts.time_budget_seconds), r_(f.uniformity()), image_(f.order(), kUnmapped),
          used_(h.order(), 0), f_incidence_(f.order()) {
        for (std::size_t e = 0; e < f.size(); ++e) {
            for (auto v : f.edge(e)) f_incidence_[v].push_back(e);
        }
        order_.resize(f.order());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return f.degree(a) > f.degree(b); });
        build_symmetry();
        if (r_ >= 3) build_shadows();
    }

    std::optional<std::vector<Vertex>> run() {
        if (f_.order() > h_.order()) return std::nullopt;
        if (!search(0)) return std::nullopt;
        return image_;
    }

private:
    static constexpr Vertex kUnmapped = ~Vertex{0};

    // Vertices whose transposition is an automorphism of F are
    // interchangeable; their images are forced to increase along the search
    // order, which removes the symmetric repeats.
    void build_symmetry() {
        const std::size_t k = f_.order();
        previous_twin_.assign(k, kUnmapped);
        auto edges = f_.edge_list();
        auto swapped_is_automorphism = [&](Vertex a, Vertex b) {
            for (const auto& e : edges) {
                Edge s = e;
                for (auto& x : s) x = x == a ? b : (x == b ? a : x);
                if (!f_.has_edge(s)) return false;
            }
            return true;
        };
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i; j-- > 0;) {
                if (f_.degree(order_[i]) == f_.degree(order_[j]) && swapped_is_automorphism(order_[i], order_[j])) {
                    previous_twin_[order_[i]] = order_[j];
                    break;
                }
            }
        }
    }

    void build_shadows() {
        const auto n = static_cast<std::uint64_t>(h_.order());
        long double cap = 1;
        for (int i = 0; i < r_ - 1; ++i) cap *= static_cast<long double>(std::max<std::uint64_t>(n, 1));
        if (cap > 1.8e19L) return;
        shadows_.resize(static_cast<std::size_t>(r_));
        for (std::size_t e = 0; e < h_.size(); ++e) {
            auto edge = h_.edge(e);
            for (std::uint32_t mask = 1; mask < (1u << r_); ++mask) {
                int s = std::popcount(mask);
                if (s < 2 || s >= r_) continue;
                std::uint64_t key = 0;
                for (int i = 0; i < r_; ++i) {
                    if (mask >> i & 1) key = key * n + edge[static_cast<std::size_t>(i)];
                }
                shadows_[static_cast<std::size_t>(s)].insert(key);
            }
        }
        use_shadows_ = true;
    }

    bool edges_ok(Vertex f) {
        std::vector<Vertex> img;
        for (auto e : f_incidence_[f]) {
            img.clear();
            for (auto u : f_.edge(e)) {
                if (image_[u] != kUnmapped) img.push_back(image_[u]);
            }
            if (img.size() == static_cast<std::size_t>(r_)) {
                if (!h_.has_edge(img)) return false;
            } else if (use_shadows_ && img.size() >= 2) {
                std::sort(img.begin(), img.end());
                std::uint64_t key = 0;
                for (auto x : img) key = key * h_.order() + x;
                if (!shadows_[img.size()].count(key)) return false;
            }
        }
        return true;
    }

    bool search(std::size_t depth) {
        deadline_.tick("find_embedding");
        if (depth == order_.size()) return true;
        const Vertex f = order_[depth];
        const std::size_t need = f_.degree(f);
        const Vertex floor = previous_twin_[f] == kUnmapped ? 0 : image_[previous_twin_[f]] + 1;

        if (r_ == 2) {
            const std::size_t words = h_.words_per_row();
            std::vector<std::uint64_t> cand(words, ~std::uint64_t{0});
            for (auto e : f_incidence_[f]) {
                auto pair = f_.edge(e);
                Vertex g = pair[0] == f ? pair[1] : pair[0];
                if (image_[g] == kUnmapped) continue;
                auto row = h_.adjacency_row(image_[g]);
                for (std::size_t w = 0; w < words; ++w) cand[w] &= row[w];
            }
            for (std::size_t w = 0; w < words; ++w) {
                for (std::uint64_t m = cand[w]; m != 0; m &= m - 1) {
                    auto h = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
                    if (h >= h_.order()) break;
                    if (h < floor || used_[h] || h_.degree(h) < need) continue;
                    if (try_map(f, h, depth)) return true;
                }
            }
            return false;
        }
        for (Vertex h = floor; h < h_.order(); ++h) {
            if (used_[h] || h_.degree(h) < need) continue;
            if (try_map(f, h, depth)) return true;
        }
        return false;
    }

    bool try_map(Vertex f, Vertex h, std::size_t depth) {
        image_[f] = h;
        used_[h] = 1;
        if ((r_ == 2 || edges_ok(f)) && search(depth + 1)) return true;
        used_[h] = 0;
        image_[f] = kUnmapped;
        return false;
    }

    const Hypergraph& f_;
    const Hypergraph& h_;
    Deadline deadline_;
    int r_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::vector<std::vector<std::size_t>> f_incidence_;
    std::vector<Vertex> order_;
    std::vector<Vertex> previous_twin_;
    std::vector<std::unordered_set<std::uint64_t>> shadows_;
    bool use_shadows_ = false;
};

std::uint64_t choose2(std::uint64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

double monomial(const Multiplicity& e, const std::vector<double>& x, int skip) {
    double out = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        int c = e[i] - (static_cast<int>(i) == skip ? 1 : 0);
        out *= std::pow(x[i], c) / std::tgamma(e[i] + 1.0);
    }
    return static_cast<int>(skip) >= 0 ? out * e[static_cast<std::size_t>(skip)] : out;
}

template <class Visit>
void for_each_grid_point(int ell, int resolution, Visit&& visit) {
    std::vector<int> a(static_cast<std::size_t>(ell), 0);
    std::vector<double> x(static_cast<std::size_t>(ell), 0.0);
    // Odometer over compositions of `resolution` into ell nonnegative parts.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == ell - 1) {
            a[static_cast<std::size_t>(pos)] = left;
            for (int i = 0; i < ell; ++i) x[static_cast<std::size_t>(i)] = static_cast<double>(a[static_cast<std::size_t>(i)]) / resolution;
            visit(x);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, resolution);
}

void check_grid(int ell, int resolution) {
    if (resolution < 1) throw Error(ErrorKind::InvalidInput, "grid resolution must be at least 1");
    if (grid_size(ell, resolution) > 10'000'000) {
        throw Error(ErrorKind::InvalidInput, "grid has more than 1e7 points");
    }
}

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Hypergraph& F, const Hypergraph& H, const OracleOptions& opts) {
    if (F.uniformity() != H.uniformity()) throw Error(ErrorKind::InvalidInput, "uniformity mismatch");
    return EmbedSearch(F, H, opts).run();
}

std::optional<std::vector<int>> find_homomorphism(const Hypergraph& H, const Pattern& P, bool surjective,
                                                  const OracleOptions& opts) {
    if (H.uniformity() != P.uniformity()) throw Error(ErrorKind::InvalidInput, "uniformity mismatch");
    if (P.vertex_count() > 64) throw Error(ErrorKind::InvalidInput, "homomorphism oracle supports at most 64 pattern vertices");
    return HomSearch(H, P, surjective, opts).run();
}

std::uint64_t turan_number(std::uint64_t n, std::uint64_t ell) {
    if (ell == 0) throw Error(ErrorKind::InvalidInput, "turan_number needs ell >= 1");
    const std::uint64_t q = n / ell, s = n % ell;
    return choose2(n) - s * choose2(q + 1) - (ell - s) * choose2(q);
}

std::uint64_t grid_size(int ell, int resolution) {
    long double c = 1;
    for (int i = 1; i < ell; ++i) c = c * (resolution + i) / i;
    return c > 1.8e19L ? ~std::uint64_t{0} : static_cast<std::uint64_t>(std::llround(c));
}

double lagrangian_grid(const Pattern& P, int resolution) {
    check_grid(P.vertex_count(), resolution);
    double best = 0.0;
    for_each_grid_point(P.vertex_count(), resolution, [&](const std::vector<double>& x) {
        double v = 0.0;
        for (const auto& e : P.edges()) v += monomial(e, x, -1);
        best = std::max(best, v);
    });
    return best;
}

double phi_grid(const Pattern& P, int resolution) {
    check_grid(P.vertex_count(), resolution);
    const int ell = P.vertex_count();
    double best = 0.0;
    for_each_grid_point(ell, resolution, [&](const std::vector<double>& x) {
        double low = INFINITY;
        for (int i = 0; i < ell; ++i) {
            double d = 0.0;
            for (const auto& e : P.edges()) {
                if (e[static_cast<std::size_t>(i)] > 0) d += monomial(e, x, i);
            }
            low = std::min(low, d);
        }
        best = std::max(best, low);
    });
    return best;
}

}  // namespace degstab
