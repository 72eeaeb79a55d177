#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "conegauge/convex_core.hpp"
#include "conegauge/gauges.hpp"

namespace conegauge {

/// Index permutation; p[i] is the image of i.
using Permutation = std::vector<std::size_t>;

Permutation compose(const Permutation& outer, const Permutation& inner);  // outer o inner
Permutation invert(const Permutation& p);
bool is_identity(const Permutation& p);

/**
 * Bijection between the vertex sets of two polytopes, stored against the
 * fixed vertex order: forward()[i] is the target index of source vertex i.
 */
class VertexBijection {
public:
    /// Throws CardinalityMismatch when sizes differ or forward is not a permutation.
    VertexBijection(PolytopeRef source, PolytopeRef target, Permutation forward);

    /// From 0-based (source, target) index pairs.
    static VertexBijection from_pairs(PolytopeRef source, PolytopeRef target,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
    static VertexBijection identity(const PolytopeRef& k);

    [[nodiscard]] const PolytopeRef& source() const { return source_; }
    [[nodiscard]] const PolytopeRef& target() const { return target_; }
    [[nodiscard]] const Permutation& forward() const { return forward_; }
    [[nodiscard]] const Permutation& backward() const { return backward_; }
    [[nodiscard]] VertexBijection inverse() const { return {target_, source_, backward_}; }
    [[nodiscard]] bool is_endomap() const;
    /// alpha o alpha == id; throws NotEndomap.
    [[nodiscard]] bool is_involution() const;

private:
    PolytopeRef source_;
    PolytopeRef target_;
    Permutation forward_;
    Permutation backward_;
};

enum class Mode { Preserving, Reversing };

std::string to_string(Mode mode);

/**
 * The unital gauge-preserving (f -> f o alpha^-1) or gauge-reversing
 * (f -> 1/f o alpha^-1) bijection A_c(K) -> A_c(K') induced by a vertex
 * bijection, extended affinely from the vertices.
 *
 * Only induce_map builds these, after establishing that every image
 * extends affinely.
 */
class InducedMap {
public:
    [[nodiscard]] const VertexBijection& alpha() const { return alpha_; }
    [[nodiscard]] Mode mode() const { return mode_; }

    /// Vertex values on K -> vertex values on K'. Throws NotPositive.
    [[nodiscard]] RVector apply_values(const RVector& f_vals) const;
    [[nodiscard]] AffineFunc apply(const AffineFunc& f) const;
    [[nodiscard]] AffineFunc operator()(const AffineFunc& f) const { return apply(f); }

    /// Realized by alpha^-1 with the same mode.
    [[nodiscard]] InducedMap inverse() const { return {alpha_.inverse(), mode_}; }

private:
    InducedMap(VertexBijection alpha, Mode mode) : alpha_(std::move(alpha)), mode_(mode) {}
    friend struct InducedMapFactory;

    VertexBijection alpha_;
    Mode mode_;
};

struct NotConstructible {
    bool inverse_direction = false;  // witness lives on K' and obstructs Phi^-1
    AffineFunc witness;
    RVector witness_values;
    RVector transformed_values;
    NotAffine obstruction;
};

/// No obstruction found among the candidates, yet nothing certifies the map.
struct Undetermined {
    std::size_t candidates_tried = 0;
};

using InducedMapResult = std::variant<InducedMap, NotConstructible, Undetermined>;

/**
 * Builds the map induced by alpha.
 *
 * On simplices every image extends, so the map always exists. Preserving
 * mode is decided exactly elsewhere, since the image is linear in f and
 * checking the coordinate functions suffices. Reversing mode on a
 * non-simplex searches for an obstruction among `candidates` (functions on
 * the source), canonical coordinate-sum functions and seeded random affine
 * functions, in both directions.
 */
InducedMapResult induce_map(const VertexBijection& alpha, Mode mode, const std::vector<AffineFunc>& candidates = {},
                            std::uint64_t seed = 0, std::size_t random_candidates = 32);

struct GaugeLawItem {
    Rational lhs;  // M(Phi f, Phi g)
    Rational rhs;  // M(g, f) when reversing, M(f, g) when preserving
    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct GaugeLawReport {
    std::vector<GaugeLawItem> items;
    [[nodiscard]] bool pass() const;
};

GaugeLawReport verify_gauge_law(const InducedMap& phi, const std::vector<std::pair<AffineFunc, AffineFunc>>& pairs);

struct InvolutionVerdict {
    bool phi_involution;
    bool alpha_involution;
    [[nodiscard]] bool consistent() const { return phi_involution == alpha_involution; }
};

/**
 * Phi o Phi == id, tested on the samples and on the vertex-value basis
 * 1 + e_k, alongside alpha o alpha == id. Throws NotEndomap.
 */
InvolutionVerdict check_involution(const InducedMap& phi, const std::vector<AffineFunc>& samples = {});

/// h -> (scale * h) o alpha^-1 on vertex values; linear and order-preserving.
struct LinearVertexMap {
    VertexBijection alpha;
    RVector scale;  // indexed by target vertex

    [[nodiscard]] RVector apply_values(const RVector& h_vals) const;
    [[nodiscard]] AffineFunc apply(const AffineFunc& h) const;
    [[nodiscard]] AffineFunc operator()(const AffineFunc& h) const { return apply(h); }
};

/**
 * -D Phi(f) for a reversing Phi: scale at target vertex v' is
 * 1 / f(alpha^-1 v')^2. Throws WrongMode, NotPositive.
 */
LinearVertexMap neg_gateaux(const InducedMap& phi, const AffineFunc& f);

struct CentralDifference {
    Rational step;
    RVector estimate;  // -(Phi(f + t h) - Phi(f - t h)) / (2t) on target vertices
    Rational error;    // max |estimate - symbolic| over vertices
};

struct DerivativeCheck {
    RVector symbolic;
    std::vector<CentralDifference> differences;
    std::vector<Rational> error_ratios;  // error(t_i) / error(t_{i+1})
};

/// Throws NotPositive if f - t h leaves the cone for some step.
DerivativeCheck check_derivative(const InducedMap& phi, const AffineFunc& f, const AffineFunc& h,
                                 const std::vector<Rational>& steps = {Rational(1, 8), Rational(1, 16),
                                                                       Rational(1, 32)});

struct CompositionConvention {
    std::string name;
    Permutation boundary;  // gamma with Psi(g) = 1/g o gamma on vertex values
    bool involution;
    bool gauge_reversing;
};

struct CompositionReport {
    Permutation alpha;
    Permutation beta;
    CompositionConvention inverse_applies_beta;          // Psi(g)(k) = Phi(g)(beta(k))
    CompositionConvention inverse_applies_beta_inverse;  // Psi(g)(k) = Phi(g)(beta^-1(k))
    bool stated_identity_holds;                          // alpha^-1 o beta^-1 == beta o alpha
};

/// Psi = (-D Phi(1))^-1 o Phi under both readings of the inverse. Throws NotEndomap, WrongMode.
CompositionReport composed_involution(const InducedMap& phi);

}  // namespace conegauge
