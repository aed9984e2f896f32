#include "degstab/deciders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "degstab/error.hpp"
#include "degstab/oracles.hpp"

namespace degstab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        case Verdict::PreconditionViolated: return "PreconditionViolated";
    }
    return "?";
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void validate(const DeciderConfig& cfg, int r) {
    if (!(cfg.eps >= 0.0)) throw Error(ErrorKind::InvalidInput, "eps must be nonnegative");
    if (cfg.n_small && *cfg.n_small < static_cast<std::size_t>(r)) {
        throw Error(ErrorKind::InvalidInput, "n_small must be at least r");
    }
}

std::size_t min_degree_or_zero(const Hypergraph& h) { return h.order() == 0 ? 0 : h.min_degree(); }

void finish_stats(DecisionStats& s, const Hypergraph& h, std::uint64_t evals) {
    s.distance_evaluations += evals;
    s.distance_work = saturating_add(s.distance_work, saturating_mul(evals, h.link_universe()));
    s.work = saturating_add(s.distance_work, s.edge_checks);
}

Decision violated(std::string condition, std::string actual, std::string bound) {
    Decision d;
    d.verdict = Verdict::PreconditionViolated;
    d.precondition = PreconditionInfo{std::move(condition), std::move(actual), std::move(bound)};
    d.reason = "precondition failed: " + d.precondition->condition;
    return d;
}

Partition witness_from_map(const std::vector<int>& map, int ell) { return Partition::from_labels(map, static_cast<std::size_t>(ell)); }

Decision oracle_homomorphism(const Hypergraph& h, const Pattern& p, bool surjective, std::optional<PreconditionInfo> why) {
    Decision d;
    d.stats.used_oracle = true;
    d.precondition = std::move(why);
    if (auto map = find_homomorphism(h, p, surjective)) {
        d.verdict = Verdict::Yes;
        d.witness = witness_from_map(*map, p.vertex_count());
        d.reason = "oracle found a homomorphism";
    } else {
        d.verdict = Verdict::No;
        d.reason = surjective ? "oracle: no surjective homomorphism" : "oracle: no homomorphism";
    }
    return d;
}

Decision oracle_embedding(const Hypergraph& h, const Hypergraph& f, std::optional<PreconditionInfo> why) {
    Decision d;
    d.stats.used_oracle = true;
    d.precondition = std::move(why);
    if (auto emb = find_embedding(f, h)) {
        d.verdict = Verdict::No;
        d.reason = "oracle found an embedding";
        // Report the image of the first edge of F as the certificate.
        if (f.size() > 0) {
            Edge e;
            for (auto v : f.edge(0)) e.push_back((*emb)[v]);
            std::sort(e.begin(), e.end());
            d.violating_edge = e;
        }
    } else {
        d.verdict = Verdict::Yes;
        d.reason = "oracle: no embedding";
    }
    return d;
}

/// First edge with two vertices in the same class, scanning in edge order.
std::optional<std::size_t> first_internal_edge(const Hypergraph& h, const std::vector<int>& labels,
                                               std::uint64_t& checks) {
    for (std::size_t e = 0; e < h.size(); ++e) {
        ++checks;
        auto ed = h.edge(e);
        for (std::size_t a = 0; a < ed.size(); ++a) {
            for (std::size_t b = a + 1; b < ed.size(); ++b) {
                if (labels[ed[a]] == labels[ed[b]]) return e;
            }
        }
    }
    return std::nullopt;
}

// Class-signature test: find sigma from clusters to pattern vertices such
// that every edge's class counts, pushed through sigma, form a pattern edge.
struct SignatureOutcome {
    bool ok = false;
    std::vector<int> sigma;
    std::optional<std::size_t> bad_edge;
};

class SignatureMatcher {
public:
    SignatureMatcher(const Pattern& p, int classes, bool injective) : p_(p), classes_(classes), injective_(injective) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto prof = p.edges()[i];
            std::sort(prof.begin(), prof.end(), std::greater<>());
            while (!prof.empty() && prof.back() == 0) prof.pop_back();
            profiles_.push_back(prof);
        }
        std::sort(profiles_.begin(), profiles_.end());
        for (const auto& e : p.edges()) max_mult_ = std::max(max_mult_, *std::max_element(e.begin(), e.end()));
    }

    SignatureOutcome run(const Hypergraph& h, const std::vector<int>& labels, const std::vector<char>& nonempty,
                         std::uint64_t& checks) {
        SignatureOutcome out;
        // Distinct signatures (sorted class labels) with their first edge.
        std::map<std::vector<int>, std::size_t> first;
        std::vector<int> sig;
        for (std::size_t e = 0; e < h.size(); ++e) {
            ++checks;
            sig.clear();
            for (auto v : h.edge(e)) sig.push_back(labels[v]);
            std::sort(sig.begin(), sig.end());
            first.emplace(sig, e);
        }
        std::optional<std::size_t> bad;
        for (const auto& [s, e] : first) {
            if (!profile_allowed(s) && (!bad || e < *bad)) bad = e;
        }
        if (bad) {
            out.bad_edge = bad;
            return out;
        }
        by_last_.assign(static_cast<std::size_t>(classes_), {});
        for (const auto& [s, e] : first) by_last_[static_cast<std::size_t>(s.back())].push_back(s);
        sigma_.assign(static_cast<std::size_t>(classes_), -1);
        used_.assign(static_cast<std::size_t>(p_.vertex_count()), 0);
        nonempty_ = nonempty;
        out.ok = assign(0);
        if (out.ok) out.sigma = sigma_;
        return out;
    }

private:
    bool profile_allowed(const std::vector<int>& sorted_labels) const {
        std::vector<int> prof;
        for (std::size_t i = 0; i < sorted_labels.size();) {
            std::size_t j = i;
            while (j < sorted_labels.size() && sorted_labels[j] == sorted_labels[i]) ++j;
            prof.push_back(static_cast<int>(j - i));
            i = j;
        }
        std::sort(prof.begin(), prof.end(), std::greater<>());
        // Merging classes only coarsens a profile, so without injectivity
        // the largest count is the only safe filter.
        if (!injective_) return prof.front() <= max_mult_;
        return std::binary_search(profiles_.begin(), profiles_.end(), prof);
    }

    bool consistent(int c) const {
        Multiplicity m(static_cast<std::size_t>(p_.vertex_count()), 0);
        for (const auto& s : by_last_[static_cast<std::size_t>(c)]) {
            std::fill(m.begin(), m.end(), 0);
            for (int x : s) ++m[static_cast<std::size_t>(sigma_[static_cast<std::size_t>(x)])];
            if (!p_.contains(m)) return false;
        }
        return true;
    }

    bool assign(int c) {
        if (c == classes_) return true;
        if (!nonempty_[static_cast<std::size_t>(c)]) return assign(c + 1);
        for (int t = 0; t < p_.vertex_count(); ++t) {
            if (injective_ && used_[static_cast<std::size_t>(t)]) continue;
            sigma_[static_cast<std::size_t>(c)] = t;
            ++used_[static_cast<std::size_t>(t)];
            if (consistent(c) && assign(c + 1)) return true;
            --used_[static_cast<std::size_t>(t)];
            sigma_[static_cast<std::size_t>(c)] = -1;
        }
        return false;
    }

    const Pattern& p_;
    int classes_;
    bool injective_;
    int max_mult_ = 0;
    std::vector<std::vector<int>> profiles_;
    std::vector<std::vector<std::vector<int>>> by_last_;
    std::vector<int> sigma_;
    std::vector<int> used_;
    std::vector<char> nonempty_;
};

Edge edge_copy(const Hypergraph& h, std::size_t e) {
    auto s = h.edge(e);
    return Edge(s.begin(), s.end());
}

struct Threshold {
    double value = 0.0;
    std::optional<Rational> exact;
    std::string name;
};

/// min_degree >= (T - eps) n^(r-1). Exact when T is rational and eps = 0;
/// otherwise in long double with the optimizer tolerance absorbed.
bool degree_at_least(std::size_t min_deg, const Hypergraph& h, const Threshold& t, const DeciderConfig& cfg,
                     std::string& bound_text) {
    const auto n = static_cast<long double>(h.order());
    const long double scale = std::pow(n, h.uniformity() - 1);
    if (t.exact && cfg.eps == 0.0) {
        __int128 lhs = static_cast<__int128>(min_deg) * t.exact->den;
        __int128 pw = 1;
        for (int i = 0; i < h.uniformity() - 1; ++i) pw *= static_cast<__int128>(h.order());
        __int128 rhs = static_cast<__int128>(t.exact->num) * pw;
        bound_text = t.name + " * n^(r-1) = " + t.exact->str() + " * " + fmt(static_cast<double>(scale));
        return lhs >= rhs;
    }
    long double slack = t.exact ? 0.0L : static_cast<long double>(cfg.opt.tol);
    long double bound = (static_cast<long double>(t.value) - cfg.eps - slack) * scale;
    bound_text = "(" + t.name + " - eps) * n^(r-1) = " + fmt(static_cast<double>(bound));
    return static_cast<long double>(min_deg) >= bound;
}

/// Clustering radius (phi/2)^(r-1)/(r-1)!, exact when phi is.
ClusterResult cluster_for_pattern(const Hypergraph& h, const Pattern& p, const PatternProfile& prof) {
    const int r = p.uniformity();
    if (prof.exact_phi) {
        std::int64_t num = 1, den = 1;
        for (int i = 0; i < r - 1; ++i) {
            num *= prof.exact_phi->num;
            den *= 2 * prof.exact_phi->den;
        }
        for (int i = 2; i < r; ++i) den *= i;
        return hamming_clustering(h, p.vertex_count(), Rational(num, den));
    }
    double delta = std::pow(prof.phi / 2.0, r - 1);
    for (int i = 2; i < r; ++i) delta /= i;
    return hamming_clustering(h, p.vertex_count(), std::clamp(delta, 0.0, 1.0));
}

Decision decide_by_signature(const Hypergraph& h, const Pattern& p, const PatternProfile& prof, bool surjective) {
    Decision d;
    auto cl = cluster_for_pattern(h, p, prof);
    const int ell = p.vertex_count();
    auto labels = cl.partition.labels();
    std::vector<char> nonempty(static_cast<std::size_t>(ell), 0);
    for (int i = 0; i < ell; ++i) nonempty[static_cast<std::size_t>(i)] = !cl.partition[static_cast<std::size_t>(i)].empty();

    if (surjective) {
        for (int i = 0; i < ell; ++i) {
            if (!nonempty[static_cast<std::size_t>(i)]) {
                d.verdict = Verdict::No;
                d.reason = "clustering produced an empty class " + std::to_string(i + 1);
                finish_stats(d.stats, h, cl.distance_evaluations);
                return d;
            }
        }
    }
    SignatureMatcher matcher(p, ell, surjective);
    auto out = matcher.run(h, labels, nonempty, d.stats.edge_checks);
    finish_stats(d.stats, h, cl.distance_evaluations);
    if (!out.ok) {
        d.verdict = Verdict::No;
        if (out.bad_edge) {
            d.violating_edge = edge_copy(h, *out.bad_edge);
            d.reason = "edge whose class counts match no pattern edge";
        } else {
            d.reason = "no assignment of classes to pattern vertices maps every edge into the pattern";
        }
        return d;
    }
    std::vector<int> map(h.order());
    for (std::size_t v = 0; v < h.order(); ++v) map[v] = out.sigma[static_cast<std::size_t>(labels[v])];
    d.verdict = Verdict::Yes;
    d.witness = witness_from_map(map, ell);
    d.reason = "every edge maps into the pattern";
    return d;
}

Decision pattern_decider(const Hypergraph& h, const Pattern& p, const PatternProfile& prof, const DeciderConfig& cfg,
                         bool surjective) {
    if (h.uniformity() != p.uniformity()) throw Error(ErrorKind::InvalidInput, "uniformity mismatch");
    if (p.vertex_count() < 2) throw Error(ErrorKind::InvalidInput, "pattern needs at least two vertices");
    validate(cfg, h.uniformity());
    if (!surjective && !prof.minimal) throw Error(ErrorKind::PatternNotMinimal, "pattern is not minimal");
    if (surjective && !prof.rigid) throw Error(ErrorKind::PatternNotRigid, "pattern is not rigid");

    Threshold t;
    if (surjective) {
        t = {prof.Phi, prof.exact_Phi, "Phi_P"};
    } else {
        t = {p.uniformity() * prof.lambda, std::nullopt, "r*lambda_P"};
        if (prof.exact_lambda) t.exact = Rational(p.uniformity()) * *prof.exact_lambda;
    }
    const std::size_t md = min_degree_or_zero(h);
    std::string bound;
    if (!degree_at_least(md, h, t, cfg, bound)) {
        PreconditionInfo info{"min_degree >= (" + t.name + " - eps) * n^(r-1)", std::to_string(md), bound};
        if (cfg.strict) return violated(info.condition, info.actual, info.bound);
        return oracle_homomorphism(h, p, surjective, info);
    }
    const std::size_t n_small = cfg.n_small.value_or(static_cast<std::size_t>(3 * p.vertex_count() * p.uniformity()));
    if (h.order() < n_small) {
        PreconditionInfo info{"n >= n_small", std::to_string(h.order()), std::to_string(n_small)};
        if (cfg.strict) return violated(info.condition, info.actual, info.bound);
        return oracle_homomorphism(h, p, surjective, info);
    }
    return decide_by_signature(h, p, prof, surjective);
}

}  // namespace

ClusterResult hamming_clustering_radius(const Hypergraph& h, int ell, std::uint64_t radius) {
    if (ell < 2) throw Error(ErrorKind::InvalidInput, "clustering needs ell >= 2");
    const std::size_t n = h.order();
    ClusterResult out;
    out.radius = radius;
    std::vector<int> owner(n, -1);
    std::size_t next = 0;
    for (int i = 0; i + 1 < ell; ++i) {
        while (next < n && owner[next] >= 0) ++next;
        if (next == n) break;
        const auto seed = static_cast<Vertex>(next);
        out.seeds.push_back(seed);
        // W_i is a ball over all of V; a later ball overrides earlier owners,
        // which realizes V_i = W_i minus the later W_j.
        for (std::size_t u = 0; u < n; ++u) {
            if (u == seed) {
                owner[u] = i;
                continue;
            }
            ++out.distance_evaluations;
            if (h.hamming_distance(seed, static_cast<Vertex>(u)) <= radius) owner[u] = i;
        }
    }
    if (out.seeds.size() + 1 == static_cast<std::size_t>(ell)) {
        for (auto& o : owner) {
            if (o < 0) o = ell - 1;
        }
    }
    out.partition = Partition::from_labels(owner, static_cast<std::size_t>(ell));
    return out;
}

ClusterResult hamming_clustering(const Hypergraph& h, int ell, const Rational& delta) {
    if (delta < Rational(0) || delta > Rational(1)) throw Error(ErrorKind::InvalidInput, "delta must lie in [0, 1]");
    const std::uint64_t scale = h.link_universe();
    std::uint64_t radius = scale == kSaturated ? kSaturated : static_cast<std::uint64_t>(delta.floor_times(scale));
    return hamming_clustering_radius(h, ell, radius);
}

ClusterResult hamming_clustering(const Hypergraph& h, int ell, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw Error(ErrorKind::InvalidInput, "delta must lie in [0, 1]");
    long double r = std::floor(static_cast<long double>(delta) * static_cast<long double>(h.link_universe()));
    return hamming_clustering_radius(h, ell, r >= 1.8e19L ? kSaturated : static_cast<std::uint64_t>(r));
}

Decision decide_k_colorable(const Hypergraph& g, int ell, const DeciderConfig& cfg) {
    if (g.uniformity() != 2) throw Error(ErrorKind::InvalidInput, "decide_k_colorable needs a graph");
    if (ell < 2) throw Error(ErrorKind::InvalidInput, "ell must be at least 2");
    validate(cfg, 2);
    const std::size_t n = g.order();
    const std::size_t md = min_degree_or_zero(g);
    const auto a = static_cast<__int128>(3 * ell - 1) * md;
    const auto b = static_cast<__int128>(3 * ell - 4) * n;
    if (!(a > b)) {
        PreconditionInfo info{"(3l-1) * min_degree > (3l-4) * n", std::to_string(md),
                              std::to_string(3 * ell - 4) + "/" + std::to_string(3 * ell - 1) + " * " + std::to_string(n)};
        if (cfg.strict) return violated(info.condition, info.actual, info.bound);
        return oracle_homomorphism(g, complete_pattern(ell), false, info);
    }
    Decision d;
    auto cl = hamming_clustering(g, ell, Rational(2, 3 * ell - 1));
    auto labels = cl.partition.labels();
    auto bad = first_internal_edge(g, labels, d.stats.edge_checks);
    finish_stats(d.stats, g, cl.distance_evaluations);
    if (bad) {
        d.verdict = Verdict::No;
        d.violating_edge = edge_copy(g, *bad);
        d.reason = "edge inside a cluster";
    } else {
        d.verdict = Verdict::Yes;
        d.witness = std::move(cl.partition);
        d.reason = "all clusters independent";
    }
    return d;
}

Decision decide_hom_minimal(const Hypergraph& h, const Pattern& p, const DeciderConfig& cfg) {
    return decide_hom_minimal(h, p, profile_pattern(p, cfg.opt), cfg);
}

Decision decide_hom_minimal(const Hypergraph& h, const Pattern& p, const PatternProfile& prof,
                            const DeciderConfig& cfg) {
    return pattern_decider(h, p, prof, cfg, false);
}

Decision decide_shom_rigid(const Hypergraph& h, const Pattern& p, const DeciderConfig& cfg) {
    return decide_shom_rigid(h, p, profile_pattern(p, cfg.opt), cfg);
}

Decision decide_shom_rigid(const Hypergraph& h, const Pattern& p, const PatternProfile& prof, const DeciderConfig& cfg) {
    return pattern_decider(h, p, prof, cfg, true);
}

Decision embed_min_decide(const Hypergraph& h, const Hypergraph& f, const Pattern& p, const DeciderConfig& cfg) {
    return embed_min_decide(h, f, p, profile_pattern(p, cfg.opt), cfg);
}

Decision embed_min_decide(const Hypergraph& h, const Hypergraph& f, const Pattern& p, const PatternProfile& prof,
                          const DeciderConfig& cfg) {
    if (h.uniformity() != f.uniformity() || h.uniformity() != p.uniformity()) {
        throw Error(ErrorKind::InvalidInput, "uniformity mismatch");
    }
    if (p.vertex_count() < 2) throw Error(ErrorKind::InvalidInput, "pattern needs at least two vertices");
    validate(cfg, h.uniformity());

    const std::size_t n_small = cfg.n_small.value_or(3 * f.order());
    if (h.order() < n_small) return oracle_embedding(h, f, std::nullopt);

    Threshold t{p.uniformity() * prof.lambda, std::nullopt, "r*lambda_P"};
    if (prof.exact_lambda) t.exact = Rational(p.uniformity()) * *prof.exact_lambda;
    const std::size_t md = min_degree_or_zero(h);
    std::string bound;
    if (!degree_at_least(md, h, t, cfg, bound)) {
        PreconditionInfo info{"min_degree >= (r*lambda_P - eps) * n^(r-1)", std::to_string(md), bound};
        if (cfg.strict) return violated(info.condition, info.actual, info.bound);
        return oracle_embedding(h, f, info);
    }

    auto d = decide_by_signature(h, p, prof, false);
    if (d.verdict == Verdict::Yes) {
        d.reason = "host is P-colorable, hence F-free";
    } else {
        d.reason = "clusters not independent: " + d.reason;
    }
    return d;
}

PeelResult peel(const Hypergraph& g, int ell) {
    if (g.uniformity() != 2) throw Error(ErrorKind::InvalidInput, "peel needs a graph");
    if (ell < 2) throw Error(ErrorKind::InvalidInput, "ell must be at least 2");
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(g.degrees().begin(), g.degrees().end());
    std::vector<char> alive(n, 1);
    PeelResult out;
    out.z = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u) {
            if (alive[u] && (v == n || deg[u] < deg[v])) v = u;
        }
        const auto lhs = static_cast<__int128>(3 * ell - 1) * deg[v];
        const auto rhs = static_cast<__int128>(3 * ell - 4) * (n - i);
        if (lhs > rhs) {
            out.z = i;
            break;
        }
        alive[v] = 0;
        out.order.push_back(static_cast<Vertex>(v));
        auto row = g.adjacency_row(static_cast<Vertex>(v));
        for (std::size_t w = 0; w < row.size(); ++w) {
            for (std::uint64_t m = row[w]; m != 0; m &= m - 1) {
                std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(m));
                if (alive[u]) --deg[u];
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (alive[u]) out.survivors.push_back(static_cast<Vertex>(u));
    }
    return out;
}

Decision clique_avg_decide(const Hypergraph& g, int ell, std::uint64_t k, const DeciderConfig& cfg) {
    if (g.uniformity() != 2) throw Error(ErrorKind::InvalidInput, "clique_avg_decide needs a graph");
    if (ell < 2) throw Error(ErrorKind::InvalidInput, "ell must be at least 2");
    validate(cfg, 2);
    const std::size_t n = g.order();
    const auto L = static_cast<std::uint64_t>(ell);

    auto fallback = [&](PreconditionInfo info) {
        if (cfg.strict) return violated(info.condition, info.actual, info.bound);
        return oracle_embedding(g, complete_pattern(ell + 1).to_hypergraph(), info);
    };
    const std::uint64_t ex = turan_number(n, L);
    if (static_cast<unsigned __int128>(g.size()) + k < ex) {
        return fallback({"|G| >= ex(n, K_{l+1}) - k", std::to_string(g.size()),
                         std::to_string(ex) + " - " + std::to_string(k)});
    }
    const std::uint64_t size_bound = std::max<std::uint64_t>(6 * L * L, 30 * k * L);
    if (n < size_bound) {
        return fallback({"n >= max(6 l^2, 30 k l)", std::to_string(n), std::to_string(size_bound)});
    }

    Decision d;
    auto pr = peel(g, ell);
    d.stats.peeled = pr.z;
    d.peel_order = pr.order;
    // z > (12 l^2 / n)(k + l/8)  <=>  8 z n > 12 l^2 (8k + l)
    const auto lhs = static_cast<unsigned __int128>(8) * pr.z * n;
    const auto rhs = static_cast<unsigned __int128>(12) * L * L * (8 * static_cast<unsigned __int128>(k) + L);
    if (lhs > rhs) {
        d.verdict = Verdict::No;
        d.reason = "peeled " + std::to_string(pr.z) + " vertices, more than the bound allows";
        finish_stats(d.stats, g, 0);
        return d;
    }

    auto sub = induced(g, pr.survivors);
    auto cl = hamming_clustering(sub.graph, ell, Rational(1, 3 * ell + 1));
    auto sub_labels = cl.partition.labels();
    if (auto bad = first_internal_edge(sub.graph, sub_labels, d.stats.edge_checks)) {
        auto e = sub.graph.edge(*bad);
        d.verdict = Verdict::No;
        d.violating_edge = Edge{sub.to_parent[e[0]], sub.to_parent[e[1]]};
        d.reason = "edge inside a cluster of the survivors";
        finish_stats(d.stats, sub.graph, cl.distance_evaluations);
        return d;
    }

    std::vector<int> labels(n, -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) labels[sub.to_parent[i]] = sub_labels[i];
    for (auto v : pr.order) {
        int chosen = -1;
        for (int i = 0; i < ell && chosen < 0; ++i) {
            bool free = true;
            for (auto u : cl.partition[static_cast<std::size_t>(i)]) {
                ++d.stats.edge_checks;
                if (g.adjacent(v, sub.to_parent[u])) {
                    free = false;
                    break;
                }
            }
            if (free) chosen = i;
        }
        if (chosen < 0) {
            d.verdict = Verdict::No;
            d.stuck_vertex = v;
            d.reason = "peeled vertex " + std::to_string(v) + " has a neighbor in every class";
            finish_stats(d.stats, sub.graph, cl.distance_evaluations);
            return d;
        }
        labels[v] = chosen;
    }

    auto bad = first_internal_edge(g, labels, d.stats.edge_checks);
    finish_stats(d.stats, sub.graph, cl.distance_evaluations);
    if (bad) {
        d.verdict = Verdict::No;
        d.violating_edge = edge_copy(g, *bad);
        d.reason = "edge inside a merged class";
        return d;
    }
    d.verdict = Verdict::Yes;
    d.witness = Partition::from_labels(labels, static_cast<std::size_t>(ell));
    d.reason = "merged classes independent";
    return d;
}

}  // namespace degstab
