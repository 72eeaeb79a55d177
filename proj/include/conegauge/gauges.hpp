#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "conegauge/convex_core.hpp"

namespace conegauge {

/**
 * An element of [0, inf] with the convention 0 * inf = 0.
 */
class ExtendedValue {
public:
    static ExtendedValue finite(Rational v);
    static ExtendedValue infinity() { return ExtendedValue(); }

    [[nodiscard]] bool is_infinite() const { return !value_; }
    [[nodiscard]] const Rational& value() const;  // throws on infinity
    [[nodiscard]] std::string str() const { return value_ ? value_->str() : std::string("inf"); }

    friend ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b);
    friend ExtendedValue operator*(const ExtendedValue& a, const ExtendedValue& b);
    friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;
    friend std::partial_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

private:
    ExtendedValue() = default;
    explicit ExtendedValue(Rational v) : value_(std::move(v)) {}
    std::optional<Rational> value_;
};

/// A gauge value together with the vertex attaining it.
struct GaugeResult {
    Rational value;
    std::size_t witness = 0;
};

/// Both upper gauges of a pair; the lower gauges follow by m(f,g) = 1/M(g,f).
struct GaugePair {
    Rational M_fg;
    Rational M_gf;

    [[nodiscard]] Rational m_fg() const { return reciprocal(M_gf); }
    [[nodiscard]] Rational m_gf() const { return reciprocal(M_fg); }
};

bool is_in_Ac(const Polytope& k, const AffineFunc& f);
bool is_in_Ac(const RVector& vertex_values);

// Gauges on A_c(K). All throw NotPositive when an argument is not strictly
// positive on K.
GaugeResult gauge_M(const Polytope& k, const AffineFunc& f, const AffineFunc& g);
GaugeResult gauge_m(const Polytope& k, const AffineFunc& f, const AffineFunc& g);
GaugeResult gauge_M(const RVector& f_vals, const RVector& g_vals);
GaugeResult gauge_m(const RVector& f_vals, const RVector& g_vals);
GaugePair gauge_pair(const RVector& f_vals, const RVector& g_vals);

/// Multiplicative Thompson distance max(M(f,g), M(g,f)) >= 1.
Rational thompson_factor(const Polytope& k, const AffineFunc& f, const AffineFunc& g);
Rational thompson_factor(const RVector& f_vals, const RVector& g_vals);

/// f <= g on K, decided on the vertices.
bool dominates(const Polytope& k, const AffineFunc& f, const AffineFunc& g);
bool dominates(const RVector& f_vals, const RVector& g_vals);

/// Values of the co-extremal indicator of vertex psi: 1 at psi, inf at the other vertices.
std::vector<ExtendedValue> indicator_vertex_values(std::size_t num_vertices, std::size_t psi);

/**
 * M(g, I_psi) = inf{mu > 0 : g <= mu I_psi}, computed vertexwise in
 * extended arithmetic (g / inf = 0). Equals g(psi).
 */
Rational ext_gauge_indicator_M(const Polytope& k, const AffineFunc& g, std::size_t psi);
Rational ext_gauge_indicator_M(const RVector& g_vals, std::size_t psi);

/**
 * m(g, p) = sup{lambda : lambda p <= g} for g > 0 and p >= 0 not identically
 * zero on the vertices. Vertices where p vanishes impose no constraint.
 */
GaugeResult gauge_m_nonnegative(const RVector& g_vals, const RVector& p_vals);

/// M(p, g) = inf{mu : p <= mu g} for p >= 0 and g > 0.
GaugeResult gauge_M_nonnegative(const RVector& p_vals, const RVector& g_vals);

}  // namespace conegauge
