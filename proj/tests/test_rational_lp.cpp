#include <doctest.h>

#include <optional>

#include "conegauge/rational_lp.hpp"
#include "conegauge/sampling.hpp"
#include "oracles.hpp"

using namespace conegauge;
using namespace conegauge::lp;
using oracle::R;

namespace {

bool row_holds(const Constraint& c, const RVector& x) {
    const Rational lhs = dot(c.coefficients, x);
    switch (c.relation) {
        case Relation::GreaterEqual: return lhs >= c.rhs;
        case Relation::LessEqual: return lhs <= c.rhs;
        case Relation::Equal: return lhs == c.rhs;
    }
    return false;
}

// Brute force over every choice of num_vars tight constraints. Valid for
// bounded programs whose feasible set has a vertex.
std::optional<Rational> vertex_enumeration(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.constraints.size();
    std::optional<Rational> best;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        oracle::Matrix a;
        for (auto i : pick) a.push_back(lp.constraints[i].coefficients);
        const Rational d = oracle::det(a);
        if (!d.is_zero()) {
            RVector x(n);
            for (std::size_t col = 0; col < n; ++col) {
                oracle::Matrix ac = a;
                for (std::size_t r = 0; r < n; ++r) ac[r][col] = lp.constraints[pick[r]].rhs;
                x[col] = oracle::det(ac) / d;
            }
            bool feasible = true;
            for (const auto& c : lp.constraints) feasible = feasible && row_holds(c, x);
            if (feasible) {
                const Rational v = dot(lp.objective, x);
                if (!best || (lp.sense == Sense::Minimize ? v < *best : v > *best)) best = v;
            }
        }
        // next combination
        std::size_t k = n;
        while (k > 0 && pick[k - 1] == m - n + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

}  // namespace

TEST_CASE("minimize x+y over x,y >= 0, x+y >= 1") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1, 1};
    lp.add({1, 0}, Relation::GreaterEqual, 0).add({0, 1}, Relation::GreaterEqual, 0).add({1, 1}, Relation::GreaterEqual, 1);
    const auto r = solve_lp(lp);
    REQUIRE(r.status == Status::Optimal);
    CHECK(*r.optimum == Rational(1));
    CHECK(r.witness == RVector{1, 0});
    CHECK(dot(lp.objective, r.witness) == *r.optimum);
    CHECK(is_dual_certificate(lp, r.dual, *r.optimum));
}

TEST_CASE("contradictory bounds give a Farkas certificate") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {0};
    lp.add({1}, Relation::GreaterEqual, 1).add({1}, Relation::LessEqual, 0);
    const auto r = solve_lp(lp);
    REQUIRE(r.status == Status::Infeasible);
    CHECK(is_farkas_certificate(lp, r.witness));
}

TEST_CASE("extremal LP on the unit square has optimum 1/2") {
    // h(x,y) = a x + b y + c; minimize h(1/2,1/2) with h(0,0) = 1 and h >= 0 on the vertices.
    LinearProgram lp;
    lp.num_vars = 3;
    lp.objective = {R("1/2"), R("1/2"), 1};
    lp.add({0, 0, 1}, Relation::Equal, 1);
    lp.add({0, 0, 1}, Relation::GreaterEqual, 0);
    lp.add({1, 0, 1}, Relation::GreaterEqual, 0);
    lp.add({0, 1, 1}, Relation::GreaterEqual, 0);
    lp.add({1, 1, 1}, Relation::GreaterEqual, 0);
    const auto r = solve_lp(lp);
    REQUIRE(r.status == Status::Optimal);
    CHECK(*r.optimum == R("1/2"));
    CHECK(vertex_enumeration(lp) == R("1/2"));
    CHECK(satisfies(lp, r.witness));
    CHECK(is_dual_certificate(lp, r.dual, *r.optimum));
}

TEST_CASE("check_feasible examples") {
    LinearProgram ok;
    ok.num_vars = 1;
    ok.objective = {0};
    ok.add({1}, Relation::GreaterEqual, 0).add({1}, Relation::LessEqual, 1);
    const auto a = check_feasible(ok);
    REQUIRE(std::holds_alternative<Feasible>(a));
    CHECK(satisfies(ok, std::get<Feasible>(a).point));

    LinearProgram bad;
    bad.num_vars = 1;
    bad.objective = {0};
    bad.add({1}, Relation::GreaterEqual, 2).add({1}, Relation::LessEqual, 1);
    const auto b = check_feasible(bad);
    REQUIRE(std::holds_alternative<Infeasible>(b));
    CHECK(is_farkas_certificate(bad, std::get<Infeasible>(b).certificate));
}

TEST_CASE("centroid of the triangle as a convex combination") {
    // weights w0..w2 >= 0, sum 1, sum w_i v_i = (1/3,1/3)
    LinearProgram lp;
    lp.num_vars = 3;
    lp.objective = {0, 0, 0};
    lp.add({1, 1, 1}, Relation::Equal, 1);
    lp.add({0, 1, 0}, Relation::Equal, R("1/3"));
    lp.add({0, 0, 1}, Relation::Equal, R("1/3"));
    for (std::size_t i = 0; i < 3; ++i) {
        RVector e(3);
        e[i] = 1;
        lp.add(e, Relation::GreaterEqual, 0);
    }
    const auto r = check_feasible(lp);
    REQUIRE(std::holds_alternative<Feasible>(r));
    CHECK(std::get<Feasible>(r).point == oracle::V({"1/3", "1/3", "1/3"}));
}

TEST_CASE("unbounded programs return an improving ray") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {-1, 0};
    lp.add({1, 0}, Relation::GreaterEqual, 0).add({0, 1}, Relation::Equal, 3);
    const auto r = solve_lp(lp);
    REQUIRE(r.status == Status::Unbounded);
    CHECK(is_improving_ray(lp, r.witness));
}

TEST_CASE("malformed programs are input errors") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1};
    CHECK_THROWS_AS(solve_lp(lp), DimensionMismatch);
    lp.objective = {1, 1};
    lp.add({1}, Relation::LessEqual, 1);
    CHECK_THROWS_AS(solve_lp(lp), DimensionMismatch);
}

TEST_CASE("random bounded programs agree with vertex enumeration") {
    RationalSampler rng(2024);
    int optimal = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 150; ++trial) {
        LinearProgram lp;
        lp.num_vars = static_cast<std::size_t>(rng.integer(1, 3));
        lp.sense = rng.integer(0, 1) ? Sense::Minimize : Sense::Maximize;
        for (std::size_t i = 0; i < lp.num_vars; ++i) {
            RVector e(lp.num_vars);
            e[i] = 1;
            lp.add(e, Relation::GreaterEqual, -5).add(e, Relation::LessEqual, 5);
            lp.objective.push_back(rng.value_in(-3, 3, 4));
        }
        const auto extra = rng.integer(1, 4);
        for (int k = 0; k < extra; ++k) {
            RVector a;
            for (std::size_t i = 0; i < lp.num_vars; ++i) a.push_back(rng.value_in(-3, 3, 2));
            const auto rel = static_cast<Relation>(rng.integer(0, 2));
            lp.add(a, rel == Relation::Equal && rng.integer(0, 3) ? Relation::LessEqual : rel, rng.value_in(-6, 6, 2));
        }
        const auto r = solve_lp(lp);
        const auto again = solve_lp(lp);
        CHECK(r.witness == again.witness);
        CHECK(r.dual == again.dual);
        const auto expected = vertex_enumeration(lp);
        if (r.status == Status::Optimal) {
            ++optimal;
            REQUIRE(expected.has_value());
            CHECK(*r.optimum == *expected);
            CHECK(satisfies(lp, r.witness));
            CHECK(dot(lp.objective, r.witness) == *r.optimum);
            CHECK(is_dual_certificate(lp, r.dual, *r.optimum));
        } else {
            REQUIRE(r.status == Status::Infeasible);
            ++infeasible;
            CHECK_FALSE(expected.has_value());
            CHECK(is_farkas_certificate(lp, r.witness));
        }
    }
    CHECK(optimal > 50);
    CHECK(infeasible > 5);
}
