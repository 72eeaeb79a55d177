#include <doctest.h>

#include "conegauge/gauges.hpp"
#include "conegauge/sampling.hpp"
#include "oracles.hpp"

using namespace conegauge;
using oracle::R;
using oracle::V;

namespace {

AffineFunc on_triangle(std::initializer_list<const char*> vals) {
    return affine_from_vertex_values(VertexValues(oracle::triangle(), V(vals)));
}

}  // namespace

TEST_CASE("ExtendedValue arithmetic on [0, inf]") {
    const auto inf = ExtendedValue::infinity();
    const auto zero = ExtendedValue::finite(0);
    const auto two = ExtendedValue::finite(2);
    CHECK((zero * inf) == zero);
    CHECK((inf * zero) == zero);
    CHECK((two * inf).is_infinite());
    CHECK((two + inf).is_infinite());
    CHECK((two * two).value() == Rational(4));
    CHECK(two < inf);
    CHECK(inf.str() == "inf");
    CHECK_THROWS((void)inf.value());
}

TEST_CASE("is_in_Ac") {
    const auto tri = oracle::triangle();
    CHECK(is_in_Ac(*tri, on_triangle({"2", "1", "4"})));
    CHECK_FALSE(is_in_Ac(*tri, on_triangle({"0", "1", "1"})));
    CHECK(is_in_Ac(*tri, AffineFunc::one(2)));
}

TEST_CASE("gauge_M and gauge_m examples") {
    const auto tri = oracle::triangle();
    const auto f = on_triangle({"2", "1", "4"});
    const auto one = AffineFunc::one(2);
    const auto big = gauge_M(*tri, f, one);
    CHECK(big.value == Rational(4));
    CHECK(big.witness == 2);
    CHECK(gauge_M(*tri, f, f).value == Rational(1));
    const auto g = gauge_M(*tri, f, on_triangle({"1", "1", "2"}));
    CHECK(g.value == Rational(2));
    CHECK(g.witness == 0);

    CHECK(gauge_m(*tri, f, one).value == Rational(1));
    CHECK(gauge_m(*tri, one, f).value == R("1/4"));
    CHECK(gauge_m(*tri, f, f).value == Rational(1));
    CHECK_THROWS_AS(gauge_M(*tri, on_triangle({"0", "1", "1"}), one), NotPositive);
    CHECK_THROWS_AS(gauge_m(*tri, one, on_triangle({"-1", "1", "1"})), NotPositive);
}

TEST_CASE("thompson_factor examples") {
    const auto tri = oracle::triangle();
    const auto f = on_triangle({"2", "1", "4"});
    CHECK(thompson_factor(*tri, f, AffineFunc::one(2)) == Rational(4));
    CHECK(thompson_factor(*tri, f, f) == Rational(1));
    CHECK(thompson_factor(*tri, Rational(2) * f, f) == Rational(2));
    CHECK_THROWS_AS(thompson_factor(*tri, on_triangle({"0", "1", "1"}), f), NotPositive);
}

TEST_CASE("dominates examples") {
    const auto tri = oracle::triangle();
    CHECK(dominates(*tri, AffineFunc::one(2), on_triangle({"2", "1", "4"})));
    CHECK_FALSE(dominates(*tri, on_triangle({"2", "1", "1"}), on_triangle({"1", "2", "2"})));
    CHECK_FALSE(dominates(*tri, on_triangle({"1", "2", "2"}), on_triangle({"2", "1", "1"})));
    const auto f = on_triangle({"2", "1", "4"});
    CHECK(dominates(*tri, f, f));
}

TEST_CASE("gauge against the co-extremal indicator") {
    const auto tri = oracle::triangle();
    const auto g = on_triangle({"2", "1", "4"});
    CHECK(ext_gauge_indicator_M(*tri, g, 0) == Rational(2));
    CHECK(ext_gauge_indicator_M(*tri, g, 2) == Rational(4));
    for (std::size_t psi = 0; psi < 3; ++psi) CHECK(ext_gauge_indicator_M(*tri, AffineFunc::one(2), psi) == Rational(1));
    CHECK_THROWS_AS(ext_gauge_indicator_M(*tri, g, 3), BadIndex);
    CHECK_THROWS_AS(ext_gauge_indicator_M(*tri, on_triangle({"0", "1", "1"}), 1), NotPositive);
    const auto ind = indicator_vertex_values(3, 1);
    CHECK(ind[1] == ExtendedValue::finite(1));
    CHECK(ind[0].is_infinite());
}

TEST_CASE("gauge properties on random simplices of dimension 1 to 9") {
    RationalSampler rng(99);
    for (std::size_t dim = 1; dim <= 9; ++dim) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = dim + 1;
            const RVector f = rng.positive_values(n);
            const RVector g = rng.positive_values(n);
            const RVector h = rng.positive_values(n);
            const auto mfg = gauge_M(f, g);
            CHECK(mfg.value == oracle::max_ratio(f, g));
            CHECK(gauge_m(f, g).value == oracle::min_ratio(f, g));
            // reciprocity
            CHECK(gauge_m(f, g).value * gauge_M(g, f).value == Rational(1));
            const auto pair = gauge_pair(f, g);
            CHECK(pair.m_gf() == gauge_m(g, f).value);
            // scaling
            const Rational lambda = rng.positive_value();
            CHECK(gauge_M(lambda * f, g).value == lambda * mfg.value);
            // Thompson axioms
            CHECK(thompson_factor(f, g) == thompson_factor(g, f));
            CHECK(thompson_factor(f, h) <= thompson_factor(f, g) * thompson_factor(g, h));
            CHECK(thompson_factor(f, g) >= Rational(1));
            CHECK((thompson_factor(f, g) == Rational(1)) == (f == g));
            CHECK(thompson_factor(f, f) == Rational(1));
            // bound realization
            const RVector scaled = mfg.value * g;
            CHECK(oracle::vertexwise_le(f, scaled));
            CHECK(f[mfg.witness] == scaled[mfg.witness]);
            // order characterization
            CHECK(dominates(f, g) == (mfg.value <= Rational(1)));
            CHECK(dominates(f, g) == oracle::vertexwise_le(f, g));
        }
    }
}

TEST_CASE("gauges against nonnegative functions") {
    const RVector g = V({"2", "1", "4"});
    const RVector delta = V({"0", "1", "0"});
    CHECK(gauge_m_nonnegative(g, delta).value == Rational(1));
    CHECK(gauge_M_nonnegative(delta, V({"1", "1", "1"})).value == Rational(1));
}
