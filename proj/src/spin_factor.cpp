#include "conegauge/spin_factor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "conegauge/errors.hpp"

namespace conegauge::spin {

namespace {

void require_same_dim(const SpinElement& a, const SpinElement& b) {
    if (a.v.size() != b.v.size())
        throw DimensionMismatch("spin elements of dimensions " + std::to_string(a.v.size()) + " and " +
                                std::to_string(b.v.size()));
}

void require_positive(const SpinElement& a, const char* what) {
    if (!a.is_positive())
        throw NotPositive(std::string(what) + " is not strictly positive (lambda=" + std::to_string(a.lambda) +
                          ", |v|=" + std::to_string(a.v.norm()) + ")");
}

// Radical inverse of i in the given base.
double radical_inverse(std::size_t i, unsigned base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

}  // namespace

SpinElement operator*(double s, const SpinElement& a) { return {s * a.lambda, s * a.v}; }

SpinElement operator+(const SpinElement& a, const SpinElement& b) {
    require_same_dim(a, b);
    return {a.lambda + b.lambda, a.v + b.v};
}

SpinElement operator-(const SpinElement& a, const SpinElement& b) {
    require_same_dim(a, b);
    return {a.lambda - b.lambda, a.v - b.v};
}

SpinElement jordan_product(const SpinElement& a, const SpinElement& b) {
    require_same_dim(a, b);
    return {a.lambda * b.lambda + a.v.dot(b.v), a.lambda * b.v + b.lambda * a.v};
}

SpinElement spin_inverse(const SpinElement& a) {
    const double det = a.lambda * a.lambda - a.v.squaredNorm();
    if (std::abs(det) <= 1e-12) throw Singular("spin element is not invertible");
    return {a.lambda / det, -a.v / det};
}

SpinElement spin_sqrt(const SpinElement& a) {
    require_positive(a, "argument of spin_sqrt");
    const double r = a.v.norm();
    if (r == 0.0) return {std::sqrt(a.lambda), Eigen::VectorXd::Zero(a.v.size())};
    const double hi = std::sqrt(a.lambda + r);
    const double lo = std::sqrt(a.lambda - r);
    return {(hi + lo) / 2.0, ((hi - lo) / 2.0 / r) * a.v};
}

SpinElement quadratic_representation(const SpinElement& a, const SpinElement& b) {
    return 2.0 * jordan_product(a, jordan_product(a, b)) - jordan_product(jordan_product(a, a), b);
}

std::size_t default_sphere_samples(std::size_t n) {
    if (n <= 1) return 2;
    if (n == 2) return 20000;
    if (n == 3) return 200000;
    return 100000;
}

std::vector<Eigen::VectorXd> sphere_points(std::size_t n, std::size_t count) {
    std::vector<Eigen::VectorXd> pts;
    if (n == 0) throw InputError("sphere dimension must be at least 1");
    if (n == 1) {
        pts.push_back(Eigen::VectorXd::Constant(1, -1.0));
        pts.push_back(Eigen::VectorXd::Constant(1, 1.0));
        return pts;
    }
    pts.reserve(count);
    if (n == 2) {
        for (std::size_t k = 0; k < count; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
            Eigen::VectorXd x(2);
            x << std::cos(th), std::sin(th);
            pts.push_back(std::move(x));
        }
        return pts;
    }
    if (n == 3) {
        // Fibonacci lattice
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (std::size_t k = 0; k < count; ++k) {
            const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(count);
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double th = golden * static_cast<double>(k);
            Eigen::VectorXd x(3);
            x << rho * std::cos(th), rho * std::sin(th), z;
            pts.push_back(std::move(x));
        }
        return pts;
    }
    if (2 * ((n + 1) / 2) > std::size(kPrimes)) throw InputError("sphere sampling supports n <= 20");
    // Halton points pushed through Box-Muller, then normalised.
    for (std::size_t k = 1; pts.size() < count; ++k) {
        Eigen::VectorXd x(static_cast<Eigen::Index>(n));
        for (std::size_t c = 0; c < n; c += 2) {
            const double u1 = std::max(radical_inverse(k, kPrimes[c]), 1e-300);
            const double u2 = radical_inverse(k, kPrimes[c + 1]);
            const double rad = std::sqrt(-2.0 * std::log(u1));
            x[static_cast<Eigen::Index>(c)] = rad * std::cos(2.0 * std::numbers::pi * u2);
            if (c + 1 < n) x[static_cast<Eigen::Index>(c + 1)] = rad * std::sin(2.0 * std::numbers::pi * u2);
        }
        const double norm = x.norm();
        if (norm > 0.0) pts.push_back(x / norm);
    }
    return pts;
}

double gauge_M_eigen(const SpinElement& f, const SpinElement& g) {
    require_same_dim(f, g);
    require_positive(f, "f");
    require_positive(g, "g");
    const SpinElement g_inv_sqrt = spin_inverse(spin_sqrt(g));
    return quadratic_representation(g_inv_sqrt, f).max_eigenvalue();
}

double gauge_M_sampled(const SpinElement& f, const SpinElement& g, std::size_t samples) {
    require_same_dim(f, g);
    require_positive(f, "f");
    require_positive(g, "g");
    const auto pts = sphere_points(f.dim(), samples ? samples : default_sphere_samples(f.dim()));
    const auto ratio = [&](const Eigen::VectorXd& x) { return f.at(x) / g.at(x); };
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double r = ratio(pts[i]);
        if (r > best) best = r, arg = i;
    }
    if (f.dim() == 1) return best;

    // Compass search on the sphere from the best sample.
    Eigen::VectorXd x = pts[arg];
    const auto n = static_cast<Eigen::Index>(f.dim());
    double step = 4.0 * std::pow(static_cast<double>(pts.size()), -1.0 / static_cast<double>(n - 1));
    while (step > 1e-10) {
        bool moved = false;
        for (Eigen::Index k = 0; k < n; ++k) {
            for (const double sgn : {1.0, -1.0}) {
                Eigen::VectorXd y = x;
                y[k] += sgn * step;
                y.normalize();
                const double r = ratio(y);
                if (r > best) best = r, x = y, moved = true;
            }
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

SpinGaugeResult spin_gauge_M(const SpinElement& f, const SpinElement& g, bool cross_check) {
    SpinGaugeResult r{gauge_M_eigen(f, g), GaugeMethod::Eigenvalue, 0.0};
    if (cross_check) r.residual = std::abs(r.value - gauge_M_sampled(f, g));
    return r;
}

bool ReversalReport::pass() const {
    return std::all_of(items.begin(), items.end(), [](const ReversalItem& i) { return i.pass; });
}

double ReversalReport::max_residual() const {
    double m = 0.0;
    for (const auto& i : items) m = std::max(m, i.residual);
    return m;
}

ReversalReport verify_spin_reversal(const std::vector<std::pair<SpinElement, SpinElement>>& pairs, double tol) {
    ReversalReport report;
    for (const auto& [f, g] : pairs) {
        require_positive(f, "f");
        require_positive(g, "g");
        const double lhs = gauge_M_eigen(spin_inverse(f), spin_inverse(g));
        const double rhs = gauge_M_eigen(g, f);
        const double res = std::abs(lhs - rhs);
        report.items.push_back({lhs, rhs, res, res <= tol});
    }
    return report;
}

ProbeResult boundary_probe(const Eigen::VectorXd& psi, const std::vector<SpinElement>& family, double tol) {
    const auto n = psi.size();
    if (std::abs(psi.norm() - 1.0) > 1e-12) throw InputError("probe point is not on the unit sphere");

    Eigen::MatrixXd a(static_cast<Eigen::Index>(family.size()), n);
    Eigen::VectorXd b(static_cast<Eigen::Index>(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& f = family[i];
        if (f.v.size() != n) throw DimensionMismatch("family element does not match the probe dimension");
        require_positive(f, "family element");
        const auto row = static_cast<Eigen::Index>(i);
        a.row(row) = f.v.transpose();
        b[row] = 1.0 / spin_inverse(f).at(psi) - f.lambda;
    }

    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd null_space = Eigen::MatrixXd::Identity(n, n);
    if (!family.empty()) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV | Eigen::ComputeThinU);
        svd.setThreshold(1e-12);
        w = svd.solve(b);
        const auto rank = svd.rank();
        null_space = svd.matrixV().rightCols(n - rank);
    }
    const double constraint_residual = family.empty() ? 0.0 : (a * w - b).norm();

    double sphere_residual = 0.0;
    const double norm = w.norm();
    if (norm > 1.0) {
        sphere_residual = norm - 1.0;
    } else if (null_space.cols() == 0) {
        sphere_residual = 1.0 - norm;
    } else {
        Eigen::VectorXd dir = null_space * (null_space.transpose() * psi);
        if (dir.norm() < 1e-12) dir = null_space.col(0);
        w += std::sqrt(std::max(0.0, 1.0 - norm * norm)) * dir.normalized();
    }

    if (sphere_residual <= tol && constraint_residual <= tol)
        return Consistent{w, std::max(sphere_residual, constraint_residual)};
    return Inconsistent{w, sphere_residual, constraint_residual};
}

std::vector<SpinElement> standard_family(std::size_t n) {
    std::vector<SpinElement> out;
    for (std::size_t k = 0; k < n; ++k) {
        SpinElement e = SpinElement::unit(n);
        e.v[static_cast<Eigen::Index>(k)] = 0.5;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace conegauge::spin
