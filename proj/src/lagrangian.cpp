#include "degstab/lagrangian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "degstab/error.hpp"
#include "degstab/rng.hpp"

namespace degstab {

namespace {

using Mask = std::vector<char>;

std::int64_t factorial(int k) {
    std::int64_t out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

double power(double base, int exp) {
    double out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Lagrange polynomial as a list of monomials. Coefficients 1/prod e(i)! are
/// formed from exact integer factorials.
class Polynomial {
public:
    struct Factor {
        int var;
        int exp;
    };
    struct Term {
        double coeff;
        std::vector<Factor> factors;
    };

    explicit Polynomial(const Pattern& p) : dim_(p.vertex_count()) {
        for (const auto& e : p.edges()) {
            Term t{1.0, {}};
            std::int64_t denom = 1;
            for (int v = 0; v < dim_; ++v) {
                int c = e[static_cast<std::size_t>(v)];
                if (c == 0) continue;
                t.factors.push_back({v, c});
                denom *= factorial(c);
            }
            t.coeff = 1.0 / static_cast<double>(denom);
            terms_.push_back(std::move(t));
        }
    }

    int dim() const noexcept { return dim_; }

    // Neumaier-compensated sum of the monomials.
    double value(std::span<const double> x) const {
        double sum = 0.0, comp = 0.0;
        for (const auto& t : terms_) {
            double m = t.coeff;
            for (const auto& f : t.factors) m *= power(x[static_cast<std::size_t>(f.var)], f.exp);
            double s = sum + m;
            comp += std::abs(sum) >= std::abs(m) ? (sum - s) + m : (m - s) + sum;
            sum = s;
        }
        return sum + comp;
    }

    void gradient(std::span<const double> x, std::span<double> g) const {
        std::fill(g.begin(), g.end(), 0.0);
        for (const auto& t : terms_) {
            for (std::size_t k = 0; k < t.factors.size(); ++k) {
                const auto& fk = t.factors[k];
                double m = t.coeff * fk.exp * power(x[static_cast<std::size_t>(fk.var)], fk.exp - 1);
                for (std::size_t j = 0; j < t.factors.size(); ++j) {
                    if (j != k) m *= power(x[static_cast<std::size_t>(t.factors[j].var)], t.factors[j].exp);
                }
                g[static_cast<std::size_t>(fk.var)] += m;
            }
        }
    }

    void hessian(std::span<const double> x, std::span<double> h) const {
        const auto d = static_cast<std::size_t>(dim_);
        std::fill(h.begin(), h.end(), 0.0);
        for (const auto& t : terms_) {
            const std::size_t nf = t.factors.size();
            for (std::size_t a = 0; a < nf; ++a) {
                for (std::size_t b = a; b < nf; ++b) {
                    const auto& fa = t.factors[a];
                    const auto& fb = t.factors[b];
                    double m = t.coeff;
                    if (a == b) {
                        if (fa.exp < 2) continue;
                        m *= fa.exp * (fa.exp - 1) * power(x[static_cast<std::size_t>(fa.var)], fa.exp - 2);
                    } else {
                        m *= fa.exp * power(x[static_cast<std::size_t>(fa.var)], fa.exp - 1);
                        m *= fb.exp * power(x[static_cast<std::size_t>(fb.var)], fb.exp - 1);
                    }
                    for (std::size_t j = 0; j < nf; ++j) {
                        if (j != a && j != b) m *= power(x[static_cast<std::size_t>(t.factors[j].var)], t.factors[j].exp);
                    }
                    auto ia = static_cast<std::size_t>(fa.var), ib = static_cast<std::size_t>(fb.var);
                    h[ia * d + ib] += m;
                    if (ia != ib) h[ib * d + ia] += m;
                }
            }
        }
    }

    double min_partial(std::span<const double> x) const {
        std::vector<double> g(static_cast<std::size_t>(dim_));
        gradient(x, g);
        return g.empty() ? 0.0 : *std::min_element(g.begin(), g.end());
    }

private:
    int dim_;
    std::vector<Term> terms_;
};

// Euclidean projection onto {x >= 0, sum x = 1, x_i = 0 off the mask}.
void project_to_simplex(std::vector<double>& y, const Mask& mask) {
    std::vector<double> u;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (mask[i]) u.push_back(y[i]);
    }
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0.0, theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumsum += u[j];
        double t = (cumsum - 1.0) / static_cast<double>(j + 1);
        if (u[j] - t > 0) theta = t;
    }
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mask[i] ? std::max(y[i] - theta, 0.0) : 0.0;
}

struct AscentResult {
    std::vector<double> x;
    double value;
    bool converged;
};

/// Projected gradient ascent with step doubling on success and halving on
/// non-improvement. Stops when the unit-step projected gradient is below
/// grad_tol, or when no step above 1e-18 improves the objective.
template <class Objective>
AscentResult ascend(const Objective& f, std::vector<double> x, const Mask& mask, const OptConfig& cfg, int iterations) {
    const std::size_t d = x.size();
    std::vector<double> g(d), y(d), gy(d);
    double fx = f(x, g);
    double step = cfg.initial_step;
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + g[i];
        project_to_simplex(y, mask);
        double gm = 0.0;
        for (std::size_t i = 0; i < d; ++i) gm += (y[i] - x[i]) * (y[i] - x[i]);
        if (std::sqrt(gm) < cfg.grad_tol) return {std::move(x), fx, true};

        for (std::size_t i = 0; i < d; ++i) y[i] = x[i] + step * g[i];
        project_to_simplex(y, mask);
        double fy = f(y, gy);
        if (fy > fx) {
            x.swap(y);
            g.swap(gy);
            fx = fy;
            step = std::min(step * 2.0, 1e6);
        } else {
            step *= 0.5;
            if (step < 1e-18) return {std::move(x), fx, true};
        }
    }
    return {std::move(x), fx, false};
}

std::vector<double> start_point(int restart, const Mask& mask, SplitMix64& rng) {
    std::vector<double> x(mask.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < mask.size(); ++i) {
        if (!mask[i]) continue;
        // Dirichlet(1,...,1) through normalized unit exponentials.
        x[i] = restart == 0 ? 1.0 : -std::log1p(-rng.uniform());
        total += x[i];
    }
    for (auto& v : x) v /= total;
    return x;
}

struct Candidate {
    std::vector<double> x;
    double value;
    bool converged;
};

SimplexPoint to_point(std::vector<double> x) {
    double total = 0.0;
    for (auto& v : x) {
        v = std::max(v, 0.0);
        total += v;
    }
    for (auto& v : x) v /= total;
    return SimplexPoint(std::move(x));
}

double linf(std::span<const double> a, std::span<const double> b) {
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
    return out;
}

/// Best value, ties to the lexicographically smallest point; witnesses are
/// the converged candidates within tol of the best, deduplicated.
OptReport reduce(std::vector<Candidate> cands, const OptConfig& cfg, const char* what) {
    OptReport rep;
    rep.restarts_used = static_cast<int>(cands.size());
    const Candidate* best = nullptr;
    for (const auto& c : cands) {
        if (!best || c.value > best->value || (c.value == best->value && c.x < best->x)) best = &c;
    }
    rep.converged = std::any_of(cands.begin(), cands.end(), [](const Candidate& c) { return c.converged; });
    if (!rep.converged) {
        throw NumericFailure(std::string(what) + ": no restart converged within the iteration budget", best->value);
    }
    rep.value = best->value;
    rep.argmax = to_point(best->x);
    std::vector<const Candidate*> near;
    for (const auto& c : cands) {
        if (c.converged && c.value >= best->value - cfg.tol) near.push_back(&c);
    }
    std::sort(near.begin(), near.end(), [](const Candidate* a, const Candidate* b) { return a->x < b->x; });
    for (const auto* c : near) {
        bool dup = std::any_of(rep.witness_set.begin(), rep.witness_set.end(), [&](const SimplexPoint& w) {
            return linf(w.coords(), c->x) <= cfg.dedup_radius;
        });
        if (!dup) rep.witness_set.push_back(to_point(c->x));
    }
    return rep;
}

OptReport maximize_lagrange(const Polynomial& poly, const Mask& mask, const OptConfig& cfg) {
    auto objective = [&](const std::vector<double>& x, std::vector<double>& g) {
        poly.gradient(x, g);
        return poly.value(x);
    };
    SplitMix64 rng(cfg.seed);
    std::vector<Candidate> cands;
    for (int k = 0; k < std::max(cfg.restarts, 1); ++k) {
        auto res = ascend(objective, start_point(k, mask, rng), mask, cfg, cfg.max_iterations);
        cands.push_back({std::move(res.x), res.value, res.converged});
    }
    return reduce(std::move(cands), cfg, "lagrangian");
}

/// Newton-type refinement of a maximin point: on a guessed active set A and
/// support S, solve partial_i = z (i in A) and sum_S x = 1 by minimum-norm
/// Gauss-Newton steps. Several guesses are tried; the point is replaced only
/// by a feasible point with a larger min-partial.
std::vector<double> polish_maximin(const Polynomial& poly, std::vector<double> x, const Mask& mask, double scale) {
    const auto d = static_cast<std::size_t>(poly.dim());
    std::vector<double> g(d), h(d * d);
    double best_h = poly.min_partial(x);
    std::vector<double> best = x;
    poly.gradient(x, g);
    const double gmin = *std::min_element(g.begin(), g.end());

    for (double tau : {1e-3, 1e-4, 1e-5, 1e-6, 1e-8}) {
        for (double thr : {1e-4, 1e-6, 1e-8}) {
            std::vector<std::size_t> active, support;
            for (std::size_t i = 0; i < d; ++i) {
                if (g[i] <= gmin + tau * scale) active.push_back(i);
                if (mask[i] && x[i] > thr) support.push_back(i);
            }
            if (support.empty()) continue;
            std::vector<double> y(d, 0.0);
            double total = 0.0;
            for (auto j : support) total += x[j];
            for (auto j : support) y[j] = x[j] / total;
            double z = gmin;
            const auto rows = static_cast<Eigen::Index>(active.size() + 1);
            const auto cols = static_cast<Eigen::Index>(support.size() + 1);
            bool ok = true;
            std::vector<double> gy(d);
            for (int it = 0; it < 60 && ok; ++it) {
                poly.gradient(y, gy);
                poly.hessian(y, h);
                Eigen::VectorXd F(rows);
                Eigen::MatrixXd J = Eigen::MatrixXd::Zero(rows, cols);
                for (std::size_t a = 0; a < active.size(); ++a) {
                    F(static_cast<Eigen::Index>(a)) = gy[active[a]] - z;
                    for (std::size_t s = 0; s < support.size(); ++s) {
                        J(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(s)) = h[active[a] * d + support[s]];
                    }
                    J(static_cast<Eigen::Index>(a), cols - 1) = -1.0;
                }
                double sum = 0.0;
                for (auto j : support) sum += y[j];
                F(rows - 1) = sum - 1.0;
                for (Eigen::Index s = 0; s + 1 < cols; ++s) J(rows - 1, s) = 1.0;
                if (F.lpNorm<Eigen::Infinity>() < 1e-15) break;
                Eigen::VectorXd step = J.completeOrthogonalDecomposition().solve(-F);
                if (!step.allFinite()) {
                    ok = false;
                    break;
                }
                for (std::size_t s = 0; s < support.size(); ++s) {
                    y[support[s]] += step(static_cast<Eigen::Index>(s));
                    if (y[support[s]] < -1e-12) ok = false;
                }
                z += step(cols - 1);
            }
            if (!ok) continue;
            double t = 0.0;
            for (auto& v : y) {
                v = std::max(v, 0.0);
                t += v;
            }
            for (auto& v : y) v /= t;
            double hy = poly.min_partial(y);
            if (hy > best_h) {
                best_h = hy;
                best = y;
            }
        }
    }
    return best;
}

OptReport maximize_min_partial(const Polynomial& poly, const Mask& mask, const OptConfig& cfg) {
    const auto d = static_cast<std::size_t>(poly.dim());
    std::vector<double> uni(d, 0.0);
    {
        std::size_t cnt = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
        for (std::size_t i = 0; i < d; ++i) uni[i] = mask[i] ? 1.0 / static_cast<double>(cnt) : 0.0;
    }
    std::vector<double> g0(d);
    poly.gradient(uni, g0);
    double scale = *std::max_element(g0.begin(), g0.end());
    if (!(scale > 0)) scale = 1.0;

    // Soft-min of the partials, -log(sum exp(-beta g_i))/beta, with beta
    // annealed upwards relative to the scale of the partials.
    std::vector<double> gbuf(d), hbuf(d * d), w(d);
    auto make_objective = [&](double beta) {
        return [&, beta](const std::vector<double>& x, std::vector<double>& grad) {
            poly.gradient(x, gbuf);
            poly.hessian(x, hbuf);
            double gmin = *std::min_element(gbuf.begin(), gbuf.end());
            double z = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                w[i] = std::exp(-beta * (gbuf[i] - gmin));
                z += w[i];
            }
            for (std::size_t j = 0; j < d; ++j) {
                double s = 0.0;
                for (std::size_t i = 0; i < d; ++i) s += w[i] * hbuf[i * d + j];
                grad[j] = s / z;
            }
            return gmin - std::log(z) / beta;
        };
    };
    const double schedule[] = {4, 16, 64, 256, 1e3, 4e3, 1.6e4, 6.4e4, 2.56e5, 1e6};
    const int per_stage = std::max(cfg.max_iterations / 10, 1);

    SplitMix64 rng(cfg.seed);
    std::vector<Candidate> cands;
    for (int k = 0; k < std::max(cfg.restarts, 1); ++k) {
        std::vector<double> x = start_point(k, mask, rng);
        bool converged = false;
        for (double b : schedule) {
            auto res = ascend(make_objective(b / scale), std::move(x), mask, cfg, per_stage);
            x = std::move(res.x);
            converged = res.converged;
        }
        x = polish_maximin(poly, std::move(x), mask, scale);
        double value = poly.min_partial(x);
        cands.push_back({std::move(x), value, converged});
    }
    return reduce(std::move(cands), cfg, "phi");
}

// C(a, b) / base^exp as an exact rational, or nothing on overflow.
std::optional<Rational> binomial_over_power(int a, int b, int base, int exp) {
    if (b < 0 || b > a) return Rational(0);
    long double num = 1;
    for (int i = 0; i < b; ++i) num = num * (a - i) / (i + 1);
    long double den = 1;
    for (int i = 0; i < exp; ++i) den *= base;
    if (num > 9e17L || den > 9e17L) return std::nullopt;
    return Rational(static_cast<std::int64_t>(std::llround(num)), static_cast<std::int64_t>(std::llround(den)));
}

std::optional<Rational> closed_lambda(const Pattern& p) {
    if (!p.is_complete()) return std::nullopt;
    return binomial_over_power(p.vertex_count(), p.uniformity(), p.vertex_count(), p.uniformity());
}

std::optional<Rational> closed_Phi(const Pattern& p) {
    if (!p.is_complete()) return std::nullopt;
    return binomial_over_power(p.vertex_count() - 1, p.uniformity() - 1, p.vertex_count(), p.uniformity() - 1);
}

OptReport exact_report(const Rational& value, std::size_t dim) {
    OptReport rep;
    rep.value = value.to_double();
    rep.argmax = SimplexPoint::uniform(dim);
    rep.restarts_used = 0;
    rep.converged = true;
    rep.witness_set = {rep.argmax};
    rep.exact = value;
    return rep;
}

Mask full_mask(const Pattern& p) { return Mask(static_cast<std::size_t>(p.vertex_count()), 1); }

void check_dim(const Pattern& p, std::size_t dim) {
    if (dim != static_cast<std::size_t>(p.vertex_count())) {
        throw Error(ErrorKind::InvalidInput, "point has dimension " + std::to_string(dim) + ", pattern has " +
                                                 std::to_string(p.vertex_count()) + " vertices");
    }
}

}  // namespace

SimplexPoint::SimplexPoint(std::vector<double> coords) : x_(std::move(coords)) {
    if (x_.empty()) throw Error(ErrorKind::InvalidInput, "simplex point needs at least one coordinate");
    double sum = 0.0;
    for (double v : x_) {
        if (!(v >= 0.0)) throw Error(ErrorKind::InvalidInput, "simplex point has a negative coordinate");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw Error(ErrorKind::InvalidInput, "simplex point does not sum to 1");
}

SimplexPoint SimplexPoint::uniform(std::size_t dim) {
    return SimplexPoint(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

SimplexPoint SimplexPoint::corner(std::size_t dim, std::size_t i) {
    std::vector<double> x(dim, 0.0);
    x.at(i) = 1.0;
    return SimplexPoint(std::move(x));
}

double SimplexPoint::min_coordinate() const { return *std::min_element(x_.begin(), x_.end()); }

double lagrange_value(const Pattern& p, std::span<const double> x) {
    check_dim(p, x.size());
    return Polynomial(p).value(x);
}

std::vector<double> lagrange_gradient(const Pattern& p, std::span<const double> x) {
    check_dim(p, x.size());
    std::vector<double> g(x.size());
    Polynomial(p).gradient(x, g);
    return g;
}

std::vector<double> lagrange_hessian(const Pattern& p, std::span<const double> x) {
    check_dim(p, x.size());
    std::vector<double> h(x.size() * x.size());
    Polynomial(p).hessian(x, h);
    return h;
}

double lagrange_eval(const Pattern& p, const SimplexPoint& x) { return lagrange_value(p, x.coords()); }

std::vector<double> lagrange_grad(const Pattern& p, const SimplexPoint& x) { return lagrange_gradient(p, x.coords()); }

OptReport lagrangian(const Pattern& p, const OptConfig& cfg) {
    const auto dim = static_cast<std::size_t>(p.vertex_count());
    if (p.size() == 0) return exact_report(Rational(0), dim);
    if (cfg.closed_forms) {
        if (auto v = closed_lambda(p)) return exact_report(*v, dim);
    }
    return maximize_lagrange(Polynomial(p), full_mask(p), cfg);
}

OptReport phi(const Pattern& p, const OptConfig& cfg) {
    const auto dim = static_cast<std::size_t>(p.vertex_count());
    if (p.size() == 0) return exact_report(Rational(0), dim);
    if (cfg.closed_forms) {
        if (auto v = closed_Phi(p)) return exact_report(*v, dim);
    }
    return maximize_min_partial(Polynomial(p), full_mask(p), cfg);
}

MinimalityReport is_minimal(const Pattern& p, const OptConfig& cfg) {
    if (p.vertex_count() < 2) throw Error(ErrorKind::InvalidInput, "minimality needs at least two vertices");
    MinimalityReport rep;
    rep.value = lagrangian(p, cfg).value;
    rep.margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < p.vertex_count(); ++i) {
        double v = lagrangian(p.remove_vertex(i), cfg).value;
        rep.deleted_values.push_back(v);
        rep.margin = std::min(rep.margin, rep.value - v);
    }
    rep.minimal = rep.margin > cfg.strict_gap;
    return rep;
}

RigidityReport rigidity_report(const Pattern& p, const OptConfig& cfg) {
    if (p.vertex_count() < 2) throw Error(ErrorKind::InvalidInput, "rigidity needs at least two vertices");
    RigidityReport rep;
    const auto dim = static_cast<std::size_t>(p.vertex_count());

    if (cfg.closed_forms && p.is_complete()) {
        // Complete patterns are minimal, hence rigid, with the uniform point
        // as the unique maximin point.
        auto ph = phi(p, cfg);
        rep.Phi = ph.value;
        rep.phi = 1.0 / static_cast<double>(dim);
        rep.rigid = true;
        rep.numerical = false;
        rep.witnesses = ph.witness_set;
        rep.reason = "complete pattern (closed form)";
        return rep;
    }

    auto ph = phi(p, cfg);
    rep.Phi = ph.value;
    rep.witnesses = ph.witness_set;
    if (ph.value <= 0.0) {
        rep.phi = 0.0;
        rep.rigid = false;
        rep.violating_witness = ph.argmax;
        rep.reason = "maximin value is not positive";
        return rep;
    }

    Polynomial poly(p);
    for (std::size_t j = 0; j < dim; ++j) {
        Mask mask(dim, 1);
        mask[j] = 0;
        auto face = maximize_min_partial(poly, mask, cfg);
        if (face.value >= ph.value - cfg.partial_tol) rep.witnesses.push_back(face.argmax);
    }

    rep.phi = std::numeric_limits<double>::infinity();
    bool partials_equal = true;
    for (const auto& w : rep.witnesses) {
        rep.phi = std::min(rep.phi, w.min_coordinate());
        auto g = lagrange_grad(p, w);
        double spread = *std::max_element(g.begin(), g.end()) - rep.Phi;
        bool ok_pos = w.min_coordinate() > cfg.pos_gap;
        bool ok_eq = spread <= cfg.partial_tol;
        partials_equal = partials_equal && ok_eq;
        if ((!ok_pos || !ok_eq) && !rep.violating_witness) {
            rep.violating_witness = w;
            rep.reason = !ok_pos ? "optimal point with a coordinate at or below pos_gap"
                                 : "optimal point whose partials are not all equal to the optimum";
        }
    }
    rep.rigid = rep.phi > cfg.pos_gap && partials_equal;
    if (rep.rigid) rep.reason = "all sampled optimal points interior with equal partials";
    return rep;
}

std::optional<std::pair<int, int>> find_twins(const Pattern& p) {
    // Partial i as a formal polynomial: exponent vector -> coefficient
    // e(i) / prod_j e(j)!, kept exact as (num, den).
    struct Mono {
        Multiplicity exps;
        std::int64_t num;
        std::int64_t den;
        bool operator<(const Mono& o) const { return exps < o.exps; }
        bool operator==(const Mono& o) const { return exps == o.exps && num * o.den == o.num * den; }
    };
    const int ell = p.vertex_count();
    std::vector<std::vector<Mono>> partials(static_cast<std::size_t>(ell));
    for (const auto& e : p.edges()) {
        std::int64_t den = 1;
        for (int c : e) den *= factorial(c);
        for (int i = 0; i < ell; ++i) {
            int c = e[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Multiplicity ex = e;
            --ex[static_cast<std::size_t>(i)];
            partials[static_cast<std::size_t>(i)].push_back({std::move(ex), c, den});
        }
    }
    // Distinct edges give distinct exponent vectors for a fixed i.
    for (auto& q : partials) std::sort(q.begin(), q.end());
    for (int i = 0; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
            if (partials[static_cast<std::size_t>(i)] == partials[static_cast<std::size_t>(j)]) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool has_twins(const Pattern& p) { return find_twins(p).has_value(); }

PatternProfile profile_pattern(const Pattern& p, const OptConfig& cfg) {
    PatternProfile prof;
    auto lam = lagrangian(p, cfg);
    prof.lambda = lam.value;
    prof.exact_lambda = lam.exact;
    if (p.vertex_count() < 2) {
        auto ph = phi(p, cfg);
        prof.Phi = ph.value;
        prof.exact_Phi = ph.exact;
        return prof;
    }
    auto rig = rigidity_report(p, cfg);
    prof.Phi = rig.Phi;
    prof.phi = rig.phi;
    prof.rigid = rig.rigid;
    prof.minimal = is_minimal(p, cfg).minimal;
    if (cfg.closed_forms && p.is_complete()) {
        prof.exact_Phi = closed_Phi(p);
        prof.exact_phi = Rational(1, p.vertex_count());
    }
    return prof;
}

}  // namespace degstab
