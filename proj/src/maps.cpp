#include "conegauge/maps.hpp"

#include <algorithm>

#include "conegauge/sampling.hpp"

namespace conegauge {

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) throw CardinalityMismatch("composing permutations of different sizes");
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}

Permutation invert(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
    return out;
}

bool is_identity(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

VertexBijection::VertexBijection(PolytopeRef source, PolytopeRef target, Permutation forward)
    : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)) {
    if (!source_ || !target_) throw InputError("vertex bijection needs both polytopes");
    if (source_->size() != target_->size())
        throw CardinalityMismatch("source has " + std::to_string(source_->size()) + " vertices, target has " +
                                  std::to_string(target_->size()));
    if (forward_.size() != source_->size())
        throw CardinalityMismatch("bijection lists " + std::to_string(forward_.size()) + " images for " +
                                  std::to_string(source_->size()) + " vertices");
    std::vector<bool> hit(forward_.size(), false);
    for (auto j : forward_) {
        if (j >= hit.size() || hit[j]) throw CardinalityMismatch("vertex map is not a bijection");
        hit[j] = true;
    }
    backward_ = invert(forward_);
}

VertexBijection VertexBijection::from_pairs(PolytopeRef source, PolytopeRef target,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    if (!source) throw InputError("vertex bijection needs a source polytope");
    const std::size_t n = source->size();
    if (pairs.size() != n)
        throw CardinalityMismatch("expected " + std::to_string(n) + " pairs, got " + std::to_string(pairs.size()));
    Permutation forward(n, n);
    for (const auto& [i, j] : pairs) {
        if (i >= n) throw BadIndex("source vertex index " + std::to_string(i) + " out of range");
        if (forward[i] != n) throw CardinalityMismatch("source vertex " + std::to_string(i) + " mapped twice");
        forward[i] = j;
    }
    return {std::move(source), std::move(target), std::move(forward)};
}

VertexBijection VertexBijection::identity(const PolytopeRef& k) {
    Permutation id(k->size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return {k, k, std::move(id)};
}

bool VertexBijection::is_endomap() const {
    return source_ == target_ || source_->vertices() == target_->vertices();
}

bool VertexBijection::is_involution() const {
    if (!is_endomap()) throw NotEndomap("alpha maps between different polytopes");
    return is_identity(compose(forward_, forward_));
}

std::string to_string(Mode mode) { return mode == Mode::Preserving ? "preserving" : "reversing"; }

namespace {

RVector transform_values(const RVector& f_vals, const Permutation& backward, Mode mode) {
    RVector out(backward.size());
    for (std::size_t j = 0; j < backward.size(); ++j) {
        const Rational& v = f_vals[backward[j]];
        out[j] = mode == Mode::Reversing ? reciprocal(v) : v;
    }
    return out;
}

// Shift f by a constant so that its minimum over the vertices is 1.
AffineFunc positive_shift(const Polytope& k, AffineFunc f) {
    const auto vals = values_at_vertices(k, f);
    const Rational lo = *std::min_element(vals.begin(), vals.end());
    f.constant += Rational(1) - lo;
    return f;
}

AffineFunc coordinate(std::size_t dim, std::size_t k) {
    AffineFunc f{RVector(dim), Rational(0)};
    f.linear[k] = Rational(1);
    return f;
}

// Coordinate functions, their sum, then seeded random affine functions,
// each shifted to be positive on k.
std::vector<AffineFunc> probe_functions(const Polytope& k, std::uint64_t seed, std::size_t random_count) {
    std::vector<AffineFunc> out;
    AffineFunc sum{RVector(k.dim()), Rational(0)};
    for (std::size_t c = 0; c < k.dim(); ++c) {
        out.push_back(positive_shift(k, coordinate(k.dim(), c)));
        sum = sum + coordinate(k.dim(), c);
    }
    if (k.dim() > 1) out.push_back(positive_shift(k, sum));
    RationalSampler rng(seed);
    for (std::size_t t = 0; t < random_count; ++t) {
        AffineFunc f{RVector(k.dim()), Rational(0)};
        for (auto& a : f.linear) a = rng.value_in(-4, 4, 8);
        out.push_back(positive_shift(k, std::move(f)));
    }
    return out;
}

struct Obstruction {
    RVector witness_values;
    RVector transformed;
    NotAffine detail;
};

std::optional<Obstruction> obstruct(const PolytopeRef& domain, const Polytope& codomain, const Permutation& backward,
                                    Mode mode, const AffineFunc& f) {
    RVector vals = restrict_to_vertices(domain, f).values;
    if (!is_in_Ac(vals)) return std::nullopt;
    RVector image = transform_values(vals, backward, mode);
    auto ext = affine_extend(codomain, image);
    if (auto* bad = std::get_if<NotAffine>(&ext)) return Obstruction{std::move(vals), std::move(image), *bad};
    return std::nullopt;
}

}  // namespace

struct InducedMapFactory {
    static InducedMap make(VertexBijection alpha, Mode mode) { return {std::move(alpha), mode}; }
};

RVector InducedMap::apply_values(const RVector& f_vals) const {
    if (f_vals.size() != alpha_.source()->size()) throw DimensionMismatch("vertex values do not match the source");
    if (!is_in_Ac(f_vals)) throw NotPositive("induced maps act on strictly positive functions: " + to_string(f_vals));
    return transform_values(f_vals, alpha_.backward(), mode_);
}

AffineFunc InducedMap::apply(const AffineFunc& f) const {
    const RVector image = apply_values(restrict_to_vertices(alpha_.source(), f).values);
    auto ext = affine_extend(*alpha_.target(), image);
    if (auto* g = std::get_if<AffineFunc>(&ext)) return std::move(*g);
    throw std::logic_error("image of an induced map does not extend affinely");
}

InducedMapResult induce_map(const VertexBijection& alpha, Mode mode, const std::vector<AffineFunc>& candidates,
                            std::uint64_t seed, std::size_t random_candidates) {
    const PolytopeRef& k = alpha.source();
    const PolytopeRef& kp = alpha.target();
    if (k->is_simplex() && kp->is_simplex()) return InducedMapFactory::make(alpha, mode);

    std::vector<AffineFunc> forward_probes = candidates;
    std::vector<AffineFunc> backward_probes;
    if (mode == Mode::Preserving) {
        // f -> f o alpha^-1 is linear, so the coordinate functions decide it.
        for (std::size_t c = 0; c < k->dim(); ++c) forward_probes.push_back(positive_shift(*k, coordinate(k->dim(), c)));
        for (std::size_t c = 0; c < kp->dim(); ++c)
            backward_probes.push_back(positive_shift(*kp, coordinate(kp->dim(), c)));
    } else {
        auto extra = probe_functions(*k, seed, random_candidates);
        forward_probes.insert(forward_probes.end(), extra.begin(), extra.end());
        backward_probes = probe_functions(*kp, seed + 1, random_candidates);
    }

    for (const auto& f : forward_probes) {
        if (f.linear.size() != k->dim()) throw DimensionMismatch("candidate function does not match the source");
        if (auto ob = obstruct(k, *kp, alpha.backward(), mode, f))
            return NotConstructible{false, f, std::move(ob->witness_values), std::move(ob->transformed),
                                    std::move(ob->detail)};
    }
    for (const auto& g : backward_probes)
        if (auto ob = obstruct(kp, *k, alpha.forward(), mode, g))
            return NotConstructible{true, g, std::move(ob->witness_values), std::move(ob->transformed),
                                    std::move(ob->detail)};

    if (mode == Mode::Preserving) return InducedMapFactory::make(alpha, mode);
    return Undetermined{forward_probes.size() + backward_probes.size()};
}

bool GaugeLawReport::pass() const {
    return std::all_of(items.begin(), items.end(), [](const GaugeLawItem& i) { return i.holds(); });
}

GaugeLawReport verify_gauge_law(const InducedMap& phi, const std::vector<std::pair<AffineFunc, AffineFunc>>& pairs) {
    GaugeLawReport report;
    const auto& k = phi.alpha().source();
    for (const auto& [f, g] : pairs) {
        const RVector f_vals = restrict_to_vertices(k, f).values;
        const RVector g_vals = restrict_to_vertices(k, g).values;
        Rational lhs = gauge_M(phi.apply_values(f_vals), phi.apply_values(g_vals)).value;
        Rational rhs = phi.mode() == Mode::Reversing ? gauge_M(g_vals, f_vals).value : gauge_M(f_vals, g_vals).value;
        report.items.push_back({std::move(lhs), std::move(rhs)});
    }
    return report;
}

InvolutionVerdict check_involution(const InducedMap& phi, const std::vector<AffineFunc>& samples) {
    const auto& alpha = phi.alpha();
    if (!alpha.is_endomap()) throw NotEndomap("involution check needs K = K'");
    const std::size_t n = alpha.source()->size();

    std::vector<RVector> tests;
    for (const auto& f : samples) tests.push_back(restrict_to_vertices(alpha.source(), f).values);
    for (std::size_t k = 0; k < n; ++k) {
        RVector basis(n, Rational(1));
        basis[k] = Rational(2);
        tests.push_back(std::move(basis));
    }
    bool phi_inv = true;
    for (const auto& vals : tests)
        if (phi.apply_values(phi.apply_values(vals)) != vals) phi_inv = false;
    return {phi_inv, alpha.is_involution()};
}

RVector LinearVertexMap::apply_values(const RVector& h_vals) const {
    if (h_vals.size() != alpha.source()->size()) throw DimensionMismatch("vertex values do not match the source");
    RVector out(h_vals.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = scale[j] * h_vals[alpha.backward()[j]];
    return out;
}

AffineFunc LinearVertexMap::apply(const AffineFunc& h) const {
    auto ext = affine_extend(*alpha.target(), apply_values(restrict_to_vertices(alpha.source(), h).values));
    if (auto* g = std::get_if<AffineFunc>(&ext)) return std::move(*g);
    throw std::logic_error("image of a linear vertex map does not extend affinely");
}

LinearVertexMap neg_gateaux(const InducedMap& phi, const AffineFunc& f) {
    if (phi.mode() != Mode::Reversing) throw WrongMode("negative derivative is defined for reversing maps");
    const RVector f_vals = restrict_to_vertices(phi.alpha().source(), f).values;
    if (!is_in_Ac(f_vals)) throw NotPositive("derivative base point is not strictly positive");
    RVector scale(f_vals.size());
    for (std::size_t j = 0; j < scale.size(); ++j) {
        const Rational& v = f_vals[phi.alpha().backward()[j]];
        scale[j] = reciprocal(v * v);
    }
    return {phi.alpha(), std::move(scale)};
}

DerivativeCheck check_derivative(const InducedMap& phi, const AffineFunc& f, const AffineFunc& h,
                                 const std::vector<Rational>& steps) {
    const auto& k = phi.alpha().source();
    const RVector f_vals = restrict_to_vertices(k, f).values;
    const RVector h_vals = restrict_to_vertices(k, h).values;

    DerivativeCheck out;
    out.symbolic = neg_gateaux(phi, f).apply_values(h_vals);
    for (const auto& t : steps) {
        const RVector up = phi.apply_values(f_vals + t * h_vals);
        const RVector down = phi.apply_values(f_vals - t * h_vals);
        RVector estimate = (Rational(-1) / (Rational(2) * t)) * (up - down);
        Rational err;
        for (std::size_t j = 0; j < estimate.size(); ++j) {
            Rational e = abs(estimate[j] - out.symbolic[j]);
            if (e > err) err = std::move(e);
        }
        out.differences.push_back({t, std::move(estimate), std::move(err)});
    }
    for (std::size_t i = 0; i + 1 < out.differences.size(); ++i) {
        const auto& next = out.differences[i + 1].error;
        out.error_ratios.push_back(next.is_zero() ? Rational(0) : out.differences[i].error / next);
    }
    return out;
}

namespace {

CompositionConvention convention(std::string name, const InducedMap& phi, const Permutation& inner) {
    // Psi(g)(k) = Phi(g)(inner(k)) = 1 / g(alpha^-1(inner(k))).
    const Permutation gamma = compose(phi.alpha().backward(), inner);
    const std::size_t n = gamma.size();
    auto psi = [&](const RVector& g) {
        RVector out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = reciprocal(g[gamma[k]]);
        return out;
    };

    bool involution = true;
    bool reversing = true;
    std::vector<RVector> basis;
    for (std::size_t k = 0; k < n; ++k) {
        RVector b(n, Rational(1));
        b[k] = Rational(2);
        basis.push_back(std::move(b));
    }
    for (const auto& b : basis) {
        if (psi(psi(b)) != b) involution = false;
        for (const auto& c : basis)
            if (gauge_M(psi(b), psi(c)).value != gauge_M(c, b).value) reversing = false;
    }
    return {std::move(name), gamma, involution, reversing};
}

}  // namespace

CompositionReport composed_involution(const InducedMap& phi) {
    if (phi.mode() != Mode::Reversing) throw WrongMode("composition identity concerns reversing maps");
    if (!phi.alpha().is_endomap()) throw NotEndomap("composition identity needs K = K'");

    const auto derivative = neg_gateaux(phi, AffineFunc::one(phi.alpha().source()->dim()));
    const Permutation& alpha = phi.alpha().forward();
    const Permutation& beta = derivative.alpha.forward();

    CompositionReport report;
    report.alpha = alpha;
    report.beta = beta;
    report.inverse_applies_beta = convention("inverse-applies-beta", phi, beta);
    report.inverse_applies_beta_inverse = convention("inverse-applies-beta-inverse", phi, invert(beta));
    report.stated_identity_holds = compose(invert(alpha), invert(beta)) == compose(beta, alpha);
    return report;
}

}  // namespace conegauge
