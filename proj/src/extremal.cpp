#include "conegauge/extremal.hpp"

#include "conegauge/rational_lp.hpp"
#include "conegauge/sampling.hpp"

namespace conegauge {

namespace {

void require_index(const Polytope& k, std::size_t psi) {
    if (psi >= k.size())
        throw BadIndex("vertex index " + std::to_string(psi) + " out of range (" + std::to_string(k.size()) +
                       " vertices)");
}

void require_member(const Polytope& k, const Point& x) {
    if (!contains(k, x)) throw PointOutsideK("point " + to_string(x) + " is outside K");
}

Point midpoint(const Point& a, const Point& b) { return Rational(1, 2) * (a + b); }

}  // namespace

ExtremalValue p_value_with_witness(const Polytope& k, std::size_t psi, const Point& x) {
    require_index(k, psi);
    require_member(k, x);

    // Variables (a_1..a_d, c) of h(y) = a.y + c.
    lp::LinearProgram prog;
    prog.num_vars = k.dim() + 1;
    prog.sense = lp::Sense::Minimize;
    prog.objective = x;
    prog.objective.emplace_back(1);
    for (const auto& v : k.vertices()) {
        RVector row = v;
        row.emplace_back(1);
        prog.add(std::move(row), lp::Relation::GreaterEqual, 0);
    }
    RVector at_psi = k.vertex(psi);
    at_psi.emplace_back(1);
    prog.add(std::move(at_psi), lp::Relation::Equal, 1);

    auto result = lp::solve_lp(prog);
    if (result.status != lp::Status::Optimal)
        throw std::logic_error("extremal LP is bounded below by 0 but solver reported otherwise");
    Rational constant = result.witness.back();
    result.witness.pop_back();
    return {std::move(*result.optimum), AffineFunc{std::move(result.witness), std::move(constant)}};
}

Rational p_value(const Polytope& k, std::size_t psi, const Point& x) {
    return p_value_with_witness(k, psi, x).value;
}

ExtremalEvaluator::ExtremalEvaluator(PolytopeRef k, std::size_t psi) : polytope_(std::move(k)), psi_(psi) {
    require_index(*polytope_, psi_);
    if (!polytope_->is_simplex()) return;

    closed_form_ = affine_from_vertex_values(VertexValues(polytope_, vertex_values()));
    const auto norm = gauge_M_nonnegative(restrict_to_vertices(polytope_, *closed_form_).values,
                                          RVector(polytope_->size(), Rational(1)));
    if (norm.value != Rational(1)) throw std::logic_error("extremal vector is not normalised");
}

Rational ExtremalEvaluator::operator()(const Point& x) const {
    if (!closed_form_) return p_value(*polytope_, psi_, x);
    require_member(*polytope_, x);
    return evaluate(*closed_form_, x);
}

RVector ExtremalEvaluator::vertex_values() const {
    RVector vals(polytope_->size());
    vals[psi_] = Rational(1);
    return vals;
}

AffinityResult affinity_probe(const Polytope& k, std::size_t psi, std::size_t trials, std::uint64_t seed) {
    require_index(k, psi);
    std::size_t checked = 0;
    auto check = [&](const Point& a, const Point& b) -> std::optional<AffinityCounterexample> {
        ++checked;
        Point mid = midpoint(a, b);
        Rational pa = p_value(k, psi, a);
        Rational pb = p_value(k, psi, b);
        Rational pm = p_value(k, psi, mid);
        if (pm == Rational(1, 2) * (pa + pb)) return std::nullopt;
        return AffinityCounterexample{a, b, std::move(mid), std::move(pa), std::move(pb), std::move(pm)};
    };

    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (auto cx = check(k.vertex(i), k.vertex(j))) return *cx;

    RationalSampler rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Point a = rng.interior_point(k);
        Point b = rng.interior_point(k);
        if (auto cx = check(a, b)) return *cx;
    }
    return AffineVerdict{checked};
}

ExtendedValue indicator_value(const CoExtremalIndicator& indicator, const Point& rho) {
    const Polytope& k = *indicator.polytope;
    require_index(k, indicator.psi);
    require_member(k, rho);
    return rho == k.vertex(indicator.psi) ? ExtendedValue::finite(Rational(1)) : ExtendedValue::infinity();
}

Rational m_against_extremal(const PolytopeRef& k, const AffineFunc& g, std::size_t psi) {
    if (!k->is_simplex()) throw NotSimplex((k->name().empty() ? "polytope" : k->name()) + " is not a simplex");
    const ExtremalEvaluator p(k, psi);
    const auto p_vals = restrict_to_vertices(k, *p.closed_form()).values;
    return gauge_m_nonnegative(restrict_to_vertices(k, g).values, p_vals).value;
}

AtomicityVerdict atomic_dominance_equiv(const PolytopeRef& k, const AffineFunc& g, const AffineFunc& g_prime) {
    if (!k->is_simplex()) throw NotSimplex((k->name().empty() ? "polytope" : k->name()) + " is not a simplex");
    const auto g_vals = restrict_to_vertices(k, g).values;
    const auto gp_vals = restrict_to_vertices(k, g_prime).values;
    if (!is_in_Ac(g_vals) || !is_in_Ac(gp_vals)) throw NotPositive("atomicity check needs strictly positive functions");

    AtomicityVerdict verdict{true, true, dominates(g_vals, gp_vals)};
    for (std::size_t psi = 0; psi < k->size(); ++psi) {
        if (m_against_extremal(k, g, psi) > m_against_extremal(k, g_prime, psi)) verdict.via_extremal = false;
        if (ext_gauge_indicator_M(g_vals, psi) > ext_gauge_indicator_M(gp_vals, psi)) verdict.via_coextremal = false;
    }
    return verdict;
}

}  // namespace conegauge
