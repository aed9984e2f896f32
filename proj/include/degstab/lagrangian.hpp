#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degstab/pattern.hpp"
#include "degstab/rational.hpp"

namespace degstab {

/// A point of the standard simplex: nonnegative coordinates summing to 1
/// within 1e-12.
class SimplexPoint {
public:
    SimplexPoint() = default;
    explicit SimplexPoint(std::vector<double> coords);

    static SimplexPoint uniform(std::size_t dim);
    static SimplexPoint corner(std::size_t dim, std::size_t i);

    std::size_t size() const noexcept { return x_.size(); }
    double operator[](std::size_t i) const { return x_[i]; }
    std::span<const double> coords() const noexcept { return x_; }
    double min_coordinate() const;

private:
    std::vector<double> x_;
};

// Evaluations of the Lagrange polynomial sum_e prod_i X_i^e(i) / e(i)!.
// The span overloads accept any point of R^ell, which finite-difference
// checks need; the SimplexPoint overloads are the checked entry points.
double lagrange_value(const Pattern& p, std::span<const double> x);
std::vector<double> lagrange_gradient(const Pattern& p, std::span<const double> x);
/// Row-major ell x ell matrix of second partials.
std::vector<double> lagrange_hessian(const Pattern& p, std::span<const double> x);

double lagrange_eval(const Pattern& p, const SimplexPoint& x);
std::vector<double> lagrange_grad(const Pattern& p, const SimplexPoint& x);

struct OptConfig {
    int restarts = 64;          // uniform start plus Dirichlet(1) starts
    int max_iterations = 10000;  // per restart
    double initial_step = 0.5;
    double grad_tol = 1e-10;     // projected-gradient norm at which a run stops
    double tol = 1e-7;           // accuracy claimed for reported values
    double dedup_radius = 1e-6;  // L-infinity radius merging optima
    double strict_gap = 1e-7;    // minimality margin
    double pos_gap = 1e-4;       // smallest coordinate that counts as positive
    double partial_tol = 1e-6;   // equality of partials in the rigidity test
    std::uint64_t seed = 0x9d2c5680u;
    bool closed_forms = true;    // exact values for complete patterns
};

struct OptReport {
    double value = 0.0;
    SimplexPoint argmax;
    int restarts_used = 0;
    bool converged = false;
    /// Distinct near-optimal points found across restarts.
    std::vector<SimplexPoint> witness_set;
    /// Set when the value came from a closed form.
    std::optional<Rational> exact;
};

/// max of the Lagrange polynomial over the simplex.
OptReport lagrangian(const Pattern& p, const OptConfig& cfg = {});

/// max over the simplex of min_i of the i-th partial; the witness set
/// approximates the optimal set.
OptReport phi(const Pattern& p, const OptConfig& cfg = {});

struct MinimalityReport {
    bool minimal = false;
    /// min_i (lambda(P) - lambda(P - i)).
    double margin = 0.0;
    double value = 0.0;
    std::vector<double> deleted_values;
};

/// Requires ell >= 2.
MinimalityReport is_minimal(const Pattern& p, const OptConfig& cfg = {});

/// Numerical rigidity classification. Not a proof: the optimal set is only
/// sampled, so the reported smallest coordinate is an upper estimate; faces
/// {x_j = 0} are searched separately so that a zero coordinate is detected
/// whenever a face reaches the optimum.
struct RigidityReport {
    double Phi = 0.0;
    double phi = 0.0;
    bool rigid = false;
    bool numerical = true;
    std::vector<SimplexPoint> witnesses;
    /// First witness breaking rigidity, if any.
    std::optional<SimplexPoint> violating_witness;
    std::string reason;
};

/// Requires ell >= 2.
RigidityReport rigidity_report(const Pattern& p, const OptConfig& cfg = {});

/// Two vertices whose partial derivatives agree as formal polynomials.
std::optional<std::pair<int, int>> find_twins(const Pattern& p);
bool has_twins(const Pattern& p);

/// Everything the deciders need to know about a pattern, exact where a
/// closed form exists.
struct PatternProfile {
    double lambda = 0.0;
    double Phi = 0.0;
    double phi = 0.0;
    std::optional<Rational> exact_lambda;
    std::optional<Rational> exact_Phi;
    std::optional<Rational> exact_phi;
    bool minimal = false;
    bool rigid = false;
};

PatternProfile profile_pattern(const Pattern& p, const OptConfig& cfg = {});

}  // namespace degstab
