#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "conegauge/convex_core.hpp"
#include "conegauge/gauges.hpp"

namespace conegauge {

/// Value of the extremal vector p_psi at x together with the LP minimizer h.
struct ExtremalValue {
    Rational value;
    AffineFunc minimizer;
};

/**
 * p_psi(x) = min{h(x) : h affine, h >= 0 on the vertices, h(psi) = 1},
 * solved exactly. Throws PointOutsideK or BadIndex.
 */
ExtremalValue p_value_with_witness(const Polytope& k, std::size_t psi, const Point& x);
Rational p_value(const Polytope& k, std::size_t psi, const Point& x);

/**
 * Evaluator for p_psi. On a simplex p_psi is affine (the psi-th barycentric
 * coordinate) and closed_form holds it; elsewhere only pointwise LP values
 * are available.
 */
class ExtremalEvaluator {
public:
    ExtremalEvaluator(PolytopeRef k, std::size_t psi);

    [[nodiscard]] Rational operator()(const Point& x) const;
    [[nodiscard]] const std::optional<AffineFunc>& closed_form() const { return closed_form_; }
    [[nodiscard]] const PolytopeRef& polytope() const { return polytope_; }
    [[nodiscard]] std::size_t psi() const { return psi_; }
    /// Values at the vertices: 1 at psi, 0 elsewhere on every polytope.
    [[nodiscard]] RVector vertex_values() const;

private:
    PolytopeRef polytope_;
    std::size_t psi_;
    std::optional<AffineFunc> closed_form_;
};

inline ExtremalEvaluator p_affine(const PolytopeRef& k, std::size_t psi) { return {k, psi}; }

struct AffineVerdict {
    std::size_t pairs_checked = 0;
};

struct AffinityCounterexample {
    Point a;
    Point b;
    Point midpoint;
    Rational p_a;
    Rational p_b;
    Rational p_mid;
};

using AffinityResult = std::variant<AffineVerdict, AffinityCounterexample>;

/**
 * Tests p_psi for midpoint affinity: p((a+b)/2) == (p(a)+p(b))/2.
 *
 * Every pair of vertices is tried first in index order, then `trials`
 * seeded random pairs of points of K. The first violation wins.
 */
AffinityResult affinity_probe(const Polytope& k, std::size_t psi, std::size_t trials, std::uint64_t seed);

/// I_psi: 1 at the vertex psi, +inf everywhere else on K.
struct CoExtremalIndicator {
    PolytopeRef polytope;
    std::size_t psi;
};

ExtendedValue indicator_value(const CoExtremalIndicator& indicator, const Point& rho);

/**
 * m(g, p_psi) = sup{lambda : lambda p_psi <= g}, computed from the vertex
 * values of p_psi. Should equal g(psi). Throws NotSimplex, NotPositive.
 */
Rational m_against_extremal(const PolytopeRef& k, const AffineFunc& g, std::size_t psi);

struct AtomicityVerdict {
    bool via_extremal;    // m(g, p_psi) <= m(g', p_psi) for every psi
    bool via_coextremal;  // M(g, I_psi) <= M(g', I_psi) for every psi
    bool dominates;       // g <= g'

    [[nodiscard]] bool consistent() const { return via_extremal == dominates && via_coextremal == dominates; }
};

AtomicityVerdict atomic_dominance_equiv(const PolytopeRef& k, const AffineFunc& g, const AffineFunc& g_prime);

}  // namespace conegauge
