#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace conegauge::spin {

/**
 * Element (lambda, v) of the spin factor R + R^n, read as the affine
 * function x -> lambda + v.x on the closed unit ball. Eigenvalues are
 * lambda +- |v|; the element lies in the open positive cone iff lambda > |v|.
 */
struct SpinElement {
    double lambda = 0.0;
    Eigen::VectorXd v;

    static SpinElement unit(std::size_t n) { return {1.0, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n))}; }

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(v.size()); }
    [[nodiscard]] double max_eigenvalue() const { return lambda + v.norm(); }
    [[nodiscard]] double min_eigenvalue() const { return lambda - v.norm(); }
    [[nodiscard]] bool is_positive() const { return lambda > v.norm(); }
    /// lambda + v.x
    [[nodiscard]] double at(const Eigen::VectorXd& x) const { return lambda + v.dot(x); }
};

SpinElement operator*(double s, const SpinElement& a);
SpinElement operator+(const SpinElement& a, const SpinElement& b);
SpinElement operator-(const SpinElement& a, const SpinElement& b);

/// (l, v) o (m, u) = (l m + v.u, l u + m v)
SpinElement jordan_product(const SpinElement& a, const SpinElement& b);

/// (l, -v) / (l^2 - |v|^2); throws Singular when |l^2 - |v|^2| <= 1e-12.
SpinElement spin_inverse(const SpinElement& a);

/// Positive square root via the spectral decomposition; throws NotPositive.
SpinElement spin_sqrt(const SpinElement& a);

/// P(a) b = 2 a o (a o b) - (a o a) o b
SpinElement quadratic_representation(const SpinElement& a, const SpinElement& b);

enum class GaugeMethod { Eigenvalue, SphereSampling };

struct SpinGaugeResult {
    double value = 0.0;
    GaugeMethod method = GaugeMethod::Eigenvalue;
    double residual = 0.0;  // |eigenvalue - sampled| when both methods ran
};

/// Quasi-uniform points on the unit sphere S^{n-1}; deterministic.
std::vector<Eigen::VectorXd> sphere_points(std::size_t n, std::size_t count);

/// Default sample count used by the sampling method in dimension n.
std::size_t default_sphere_samples(std::size_t n);

/// Largest eigenvalue of P(g^{-1/2}) f.
double gauge_M_eigen(const SpinElement& f, const SpinElement& g);
/// max over sampled sphere points of f(x) / g(x).
double gauge_M_sampled(const SpinElement& f, const SpinElement& g, std::size_t samples = 0);

/// Eigenvalue value plus the sampling residual. Throws NotPositive.
SpinGaugeResult spin_gauge_M(const SpinElement& f, const SpinElement& g, bool cross_check = true);

struct ReversalItem {
    double lhs;  // M(f^-1, g^-1)
    double rhs;  // M(g, f)
    double residual;
    bool pass;
};

struct ReversalReport {
    std::vector<ReversalItem> items;
    [[nodiscard]] bool pass() const;
    [[nodiscard]] double max_residual() const;
};

ReversalReport verify_spin_reversal(const std::vector<std::pair<SpinElement, SpinElement>>& pairs, double tol);

struct Consistent {
    Eigen::VectorXd w;
    double residual;  // max of sphere and constraint residuals, <= tol
};

struct Inconsistent {
    Eigen::VectorXd w;           // least-squares solution of the pinned constraints
    double sphere_residual;      // |w| - 1 when the solution set misses the sphere
    double constraint_residual;  // |A w - b|
    [[nodiscard]] double residual() const { return sphere_residual > constraint_residual ? sphere_residual : constraint_residual; }
};

using ProbeResult = std::variant<Consistent, Inconsistent>;

/**
 * Looks for a unit vector w with 1/f(w) = (f^-1)(psi) for every f in the
 * family. Each f = (l, v) pins v.w = 1/(f^-1)(psi) - l; the resulting linear
 * system is solved in the least-squares sense and its solution set is
 * intersected with the unit sphere, preferring the point nearest psi.
 */
ProbeResult boundary_probe(const Eigen::VectorXd& psi, const std::vector<SpinElement>& family, double tol);

/// {(1, e_k / 2) : k = 1..n}
std::vector<SpinElement> standard_family(std::size_t n);

}  // namespace conegauge::spin
