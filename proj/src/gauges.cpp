#include "conegauge/gauges.hpp"

namespace conegauge {

ExtendedValue ExtendedValue::finite(Rational v) {
    if (v.sign() < 0) throw InputError("extended values are nonnegative, got " + v.str());
    return ExtendedValue(std::move(v));
}

const Rational& ExtendedValue::value() const {
    if (!value_) throw InputError("infinite extended value has no finite representative");
    return *value_;
}

ExtendedValue operator+(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtendedValue::infinity();
    return ExtendedValue(*a.value_ + *b.value_);
}

ExtendedValue operator*(const ExtendedValue& a, const ExtendedValue& b) {
    // 0 * inf = 0
    if ((a.value_ && a.value_->is_zero()) || (b.value_ && b.value_->is_zero())) return ExtendedValue(Rational(0));
    if (a.is_infinite() || b.is_infinite()) return ExtendedValue::infinity();
    return ExtendedValue(*a.value_ * *b.value_);
}

std::partial_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.is_infinite() && b.is_infinite()) return std::partial_ordering::equivalent;
    if (a.is_infinite()) return std::partial_ordering::greater;
    if (b.is_infinite()) return std::partial_ordering::less;
    return *a.value_ <=> *b.value_;
}

namespace {

void require_positive(const RVector& vals, const char* what) {
    if (!is_in_Ac(vals)) throw NotPositive(std::string(what) + " is not strictly positive on K: " + to_string(vals));
}

void require_same_size(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vertex value vectors differ in length");
}

}  // namespace

bool is_in_Ac(const RVector& vertex_values) {
    for (const auto& v : vertex_values)
        if (v.sign() <= 0) return false;
    return true;
}

bool is_in_Ac(const Polytope& k, const AffineFunc& f) { return is_in_Ac(values_at_vertices(k, f)); }

GaugeResult gauge_M(const RVector& f_vals, const RVector& g_vals) {
    require_same_size(f_vals, g_vals);
    require_positive(f_vals, "f");
    require_positive(g_vals, "g");
    GaugeResult best{f_vals[0] / g_vals[0], 0};
    for (std::size_t i = 1; i < f_vals.size(); ++i) {
        Rational r = f_vals[i] / g_vals[i];
        if (r > best.value) best = {std::move(r), i};
    }
    return best;
}

GaugeResult gauge_m(const RVector& f_vals, const RVector& g_vals) {
    require_same_size(f_vals, g_vals);
    require_positive(f_vals, "f");
    require_positive(g_vals, "g");
    GaugeResult best{f_vals[0] / g_vals[0], 0};
    for (std::size_t i = 1; i < f_vals.size(); ++i) {
        Rational r = f_vals[i] / g_vals[i];
        if (r < best.value) best = {std::move(r), i};
    }
    return best;
}

GaugePair gauge_pair(const RVector& f_vals, const RVector& g_vals) {
    return {gauge_M(f_vals, g_vals).value, gauge_M(g_vals, f_vals).value};
}

GaugeResult gauge_M(const Polytope& k, const AffineFunc& f, const AffineFunc& g) {
    return gauge_M(values_at_vertices(k, f), values_at_vertices(k, g));
}

GaugeResult gauge_m(const Polytope& k, const AffineFunc& f, const AffineFunc& g) {
    return gauge_m(values_at_vertices(k, f), values_at_vertices(k, g));
}

Rational thompson_factor(const RVector& f_vals, const RVector& g_vals) {
    const auto pair = gauge_pair(f_vals, g_vals);
    return pair.M_fg > pair.M_gf ? pair.M_fg : pair.M_gf;
}

Rational thompson_factor(const Polytope& k, const AffineFunc& f, const AffineFunc& g) {
    return thompson_factor(values_at_vertices(k, f), values_at_vertices(k, g));
}

bool dominates(const RVector& f_vals, const RVector& g_vals) {
    require_same_size(f_vals, g_vals);
    for (std::size_t i = 0; i < f_vals.size(); ++i)
        if (f_vals[i] > g_vals[i]) return false;
    return true;
}

bool dominates(const Polytope& k, const AffineFunc& f, const AffineFunc& g) {
    return dominates(values_at_vertices(k, f), values_at_vertices(k, g));
}

std::vector<ExtendedValue> indicator_vertex_values(std::size_t num_vertices, std::size_t psi) {
    if (psi >= num_vertices) throw BadIndex("vertex index " + std::to_string(psi) + " out of range");
    std::vector<ExtendedValue> out(num_vertices, ExtendedValue::infinity());
    out[psi] = ExtendedValue::finite(Rational(1));
    return out;
}

Rational ext_gauge_indicator_M(const RVector& g_vals, std::size_t psi) {
    require_positive(g_vals, "g");
    const auto indicator = indicator_vertex_values(g_vals.size(), psi);
    // g <= mu * I holds at vertex i iff g(i)/I(i) <= mu, with g(i)/inf = 0.
    Rational bound;
    for (std::size_t i = 0; i < g_vals.size(); ++i) {
        if (indicator[i].is_infinite()) continue;
        Rational ratio = g_vals[i] / indicator[i].value();
        if (ratio > bound) bound = std::move(ratio);
    }
    return bound;
}

Rational ext_gauge_indicator_M(const Polytope& k, const AffineFunc& g, std::size_t psi) {
    if (psi >= k.size()) throw BadIndex("vertex index " + std::to_string(psi) + " out of range");
    return ext_gauge_indicator_M(values_at_vertices(k, g), psi);
}

GaugeResult gauge_m_nonnegative(const RVector& g_vals, const RVector& p_vals) {
    require_same_size(g_vals, p_vals);
    require_positive(g_vals, "g");
    std::optional<GaugeResult> best;
    for (std::size_t i = 0; i < g_vals.size(); ++i) {
        if (p_vals[i].sign() < 0) throw NotPositive("p is negative at vertex " + std::to_string(i));
        if (p_vals[i].is_zero()) continue;
        Rational r = g_vals[i] / p_vals[i];
        if (!best || r < best->value) best = GaugeResult{std::move(r), i};
    }
    if (!best) throw NotPositive("p vanishes at every vertex");
    return *best;
}

GaugeResult gauge_M_nonnegative(const RVector& p_vals, const RVector& g_vals) {
    require_same_size(p_vals, g_vals);
    require_positive(g_vals, "g");
    GaugeResult best{Rational(0), 0};
    for (std::size_t i = 0; i < p_vals.size(); ++i) {
        if (p_vals[i].sign() < 0) throw NotPositive("p is negative at vertex " + std::to_string(i));
        Rational r = p_vals[i] / g_vals[i];
        if (i == 0 || r > best.value) best = {std::move(r), i};
    }
    return best;
}

}  // namespace conegauge
