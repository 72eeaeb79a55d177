#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conegauge/cli.hpp"
#include "conegauge/errors.hpp"
#include "conegauge/spin_factor.hpp"

using namespace conegauge;
using namespace conegauge::spin;
using doctest::Approx;

namespace {

SpinElement el(double lambda, std::initializer_list<double> v) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double c : v) x[i++] = c;
    return {lambda, x};
}

double deviation(const SpinElement& a, const SpinElement& b) {
    return std::max(std::abs(a.lambda - b.lambda), (a.v - b.v).lpNorm<Eigen::Infinity>());
}

// max over the circle of f/g by ternary refinement of a dense angular scan
double circle_max(const SpinElement& f, const SpinElement& g) {
    auto ratio = [&](double t) {
        Eigen::Vector2d x(std::cos(t), std::sin(t));
        return f.at(x) / g.at(x);
    };
    const int n = 4096;
    int best = 0;
    for (int k = 1; k < n; ++k)
        if (ratio(2 * std::numbers::pi * k / n) > ratio(2 * std::numbers::pi * best / n)) best = k;
    double lo = 2 * std::numbers::pi * (best - 1) / n;
    double hi = 2 * std::numbers::pi * (best + 1) / n;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3;
        const double m2 = hi - (hi - lo) / 3;
        if (ratio(m1) < ratio(m2))
            lo = m1;
        else
            hi = m2;
    }
    return ratio((lo + hi) / 2);
}

}  // namespace

TEST_CASE("jordan_product examples") {
    const auto a = el(3, {1, -2});
    CHECK(deviation(jordan_product(SpinElement::unit(2), a), a) == 0.0);
    CHECK(deviation(jordan_product(el(2, {1, 0}), el(2.0 / 3, {-1.0 / 3, 0})), el(1, {0, 0})) < 1e-15);
    CHECK(deviation(jordan_product(el(0, {1, 0}), el(0, {1, 0})), el(1, {0, 0})) == 0.0);
    CHECK_THROWS_AS(jordan_product(el(1, {0}), el(1, {0, 0})), DimensionMismatch);
}

TEST_CASE("spin_inverse examples") {
    CHECK(deviation(spin_inverse(SpinElement::unit(3)), SpinElement::unit(3)) == 0.0);
    CHECK(deviation(spin_inverse(el(2, {1, 0})), el(2.0 / 3, {-1.0 / 3, 0})) < 1e-15);
    CHECK(deviation(spin_inverse(el(1, {0.5, 0})), el(4.0 / 3, {-2.0 / 3, 0})) < 1e-15);
    CHECK_THROWS_AS(spin_inverse(el(1, {1, 0})), Singular);
}

TEST_CASE("spin_sqrt examples") {
    CHECK(deviation(spin_sqrt(SpinElement::unit(2)), SpinElement::unit(2)) < 1e-15);
    const auto r = spin_sqrt(el(2, {1, 0}));
    CHECK(r.lambda == Approx((std::sqrt(3.0) + 1) / 2).epsilon(1e-14));
    CHECK(r.v[0] == Approx((std::sqrt(3.0) - 1) / 2).epsilon(1e-14));
    CHECK(deviation(jordan_product(r, r), el(2, {1, 0})) < 1e-14);
    CHECK(deviation(spin_sqrt(el(4, {0, 0})), el(2, {0, 0})) < 1e-15);
    CHECK_THROWS_AS(spin_sqrt(el(1, {2, 0})), NotPositive);
}

TEST_CASE("quadratic representation") {
    const auto a = el(2, {1, -1, 0.5});
    const auto b = el(3, {0.2, 0.4, -1});
    const auto direct = 2.0 * jordan_product(a, jordan_product(a, b)) - jordan_product(jordan_product(a, a), b);
    CHECK(deviation(quadratic_representation(a, b), direct) < 1e-12);
    // P(a) a^-1 = a
    CHECK(deviation(quadratic_representation(a, spin_inverse(a)), a) < 1e-12);
}

TEST_CASE("spin_gauge_M examples") {
    CHECK(spin_gauge_M(el(2, {1, 0}), SpinElement::unit(2)).value == Approx(3.0).epsilon(1e-12));
    const auto f = el(1.5, {0.25, -0.5});
    CHECK(spin_gauge_M(f, f).value == Approx(1.0).epsilon(1e-12));
    const double worked = spin_gauge_M(el(1, {0, 0.5}), el(1, {0.5, 0})).value;
    const double s = (-1 + std::sqrt(7.0)) / 4;
    const double c = (-1 - std::sqrt(7.0)) / 4;
    CHECK(worked == Approx((2 + s) / (2 + c)).epsilon(1e-12));
    CHECK(std::abs(worked - 2.215252) < 1e-5);
    CHECK_THROWS_AS(spin_gauge_M(el(1, {2, 0}), SpinElement::unit(2)), NotPositive);
}

TEST_CASE("verify_spin_reversal examples") {
    const auto r = verify_spin_reversal({{el(2, {1, 0}), SpinElement::unit(2)}}, 1e-9);
    CHECK(r.pass());
    CHECK(r.items[0].lhs == Approx(1.0).epsilon(1e-12));
    CHECK(r.items[0].rhs == Approx(1.0).epsilon(1e-12));
    const auto f = el(1, {0.5, 0});
    CHECK(verify_spin_reversal({{f, f}}, 1e-9).pass());
    const auto w = verify_spin_reversal({{f, el(1, {0, 0.5})}}, 1e-9);
    CHECK(w.pass());
    CHECK(std::abs(w.items[0].lhs - 2.215252) < 1e-5);
    CHECK_THROWS_AS(verify_spin_reversal({{el(1, {2, 0}), f}}, 1e-9), NotPositive);
}

TEST_CASE("boundary_probe examples") {
    Eigen::VectorXd one(1);
    one << 1;
    const auto a = boundary_probe(one, {el(2, {0.5}), el(1, {-0.25})}, 1e-9);
    REQUIRE(std::holds_alternative<Consistent>(a));
    CHECK(std::abs(std::get<Consistent>(a).w[0] - 1.0) <= 1e-12);

    Eigen::VectorXd psi(2);
    psi << 0, 1;
    const auto b = boundary_probe(psi, standard_family(2), 1e-9);
    REQUIRE(std::holds_alternative<Inconsistent>(b));
    const auto& inc = std::get<Inconsistent>(b);
    CHECK(inc.w[0] == Approx(-0.5).epsilon(1e-12));
    CHECK(inc.w[1] == Approx(1.0).epsilon(1e-12));
    CHECK(inc.residual() == Approx(std::sqrt(5.0) / 2 - 1).epsilon(1e-12));

    for (std::size_t n = 1; n <= 4; ++n) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
        e[0] = 1;
        CHECK(std::holds_alternative<Consistent>(boundary_probe(e, {SpinElement::unit(n)}, 1e-9)));
    }
    CHECK_THROWS_AS(boundary_probe(psi, {el(1, {2, 0})}, 1e-9), NotPositive);
}

TEST_CASE("properties over random positive elements") {
    RationalSampler rng(8);
    for (std::size_t n : {1, 2, 3, 5}) {
        std::vector<std::pair<SpinElement, SpinElement>> pairs;
        for (int t = 0; t < 100; ++t) {
            const auto a = cli::random_spin_element(n, rng);
            const auto b = cli::random_spin_element(n, rng);
            CHECK(a.is_positive());
            CHECK(deviation(jordan_product(a, spin_inverse(a)), SpinElement::unit(n)) <= 1e-10);
            const double lambda = 0.25 + 3 * rng.uniform01();
            CHECK(deviation(spin_inverse(lambda * a), (1 / lambda) * spin_inverse(a)) <= 1e-12);
            const double m = spin_gauge_M(a, b, false).value;
            CHECK(std::abs(spin_gauge_M(lambda * a, b, false).value - lambda * m) <= 1e-10);
            pairs.emplace_back(a, b);
        }
        CHECK(verify_spin_reversal(pairs, 1e-9).pass());
    }
}

TEST_CASE("eigenvalue gauge agrees with sampling") {
    RationalSampler rng(9);
    for (std::size_t n : {2, 3}) {
        for (int t = 0; t < (n == 2 ? 100 : 25); ++t) {
            const auto f = cli::random_spin_element(n, rng);
            const auto g = cli::random_spin_element(n, rng);
            const auto r = spin_gauge_M(f, g);
            CHECK(r.residual <= 1e-4);
            CHECK(r.value + 1e-12 >= gauge_M_sampled(f, g));
            if (n == 2) CHECK(std::abs(r.value - circle_max(f, g)) <= 1e-9);
        }
    }
}

TEST_CASE("sphere points lie on the sphere") {
    for (std::size_t n : {1, 2, 3, 4, 6}) {
        const auto pts = sphere_points(n, 500);
        for (const auto& x : pts) CHECK(std::abs(x.norm() - 1.0) < 1e-12);
    }
    CHECK(sphere_points(1, 500).size() == 2);
    CHECK_THROWS_AS(sphere_points(0, 10), InputError);
}
