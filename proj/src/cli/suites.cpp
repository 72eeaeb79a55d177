#include <algorithm>
#include <cmath>

#include "conegauge/cli.hpp"
#include "conegauge/extremal.hpp"
#include "conegauge/gauges.hpp"
#include "conegauge/maps.hpp"

namespace conegauge::cli {

using ojson = nlohmann::ordered_json;

namespace {

ojson to_json(const RVector& v) {
    ojson arr = ojson::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

ojson to_json(const Permutation& p) {
    ojson arr = ojson::array();
    for (auto i : p) arr.push_back(i);
    return arr;
}

std::string vec(const RVector& v) { return to_string(v); }
std::string boolean(bool b) { return b ? "true" : "false"; }

struct Sample {
    std::string label;
    RVector values;
};

// Strictly positive affine function on k given by its vertex values.
RVector random_values(const Polytope& k, RationalSampler& rng) {
    if (k.is_simplex()) return rng.positive_values(k.size());
    AffineFunc f{RVector(k.dim()), Rational(0)};
    for (auto& a : f.linear) a = rng.value_in(-4, 4, 8);
    RVector vals = values_at_vertices(k, f);
    const Rational shift = rng.positive_value() - *std::min_element(vals.begin(), vals.end());
    for (auto& v : vals) v += shift;
    return vals;
}

// Named positive scene functions on k, followed by `count` random ones.
std::vector<Sample> samples_on(const Scene& scene, const PolytopeRef& k, std::size_t count, RationalSampler& rng) {
    std::vector<Sample> out;
    for (const auto& [name, fn] : scene.functions)
        if (fn.domain == k && is_in_Ac(fn.values)) out.push_back({name, fn.values});
    for (std::size_t i = 0; i < count; ++i) out.push_back({"random#" + std::to_string(i), random_values(*k, rng)});
    return out;
}

std::vector<AffineFunc> named_functions_on(const Scene& scene, const PolytopeRef& k) {
    std::vector<AffineFunc> out;
    for (const auto& [name, fn] : scene.functions)
        if (fn.domain == k) out.push_back(fn.affine);
    return out;
}

// Ordered pairs among the named samples, then consecutive random pairs.
std::vector<std::pair<const Sample*, const Sample*>> sample_pairs(const std::vector<Sample>& s, std::size_t named) {
    std::vector<std::pair<const Sample*, const Sample*>> out;
    for (std::size_t i = 0; i < named; ++i)
        for (std::size_t j = 0; j < named; ++j) out.emplace_back(&s[i], &s[j]);
    for (std::size_t i = named; i + 1 < s.size(); i += 2) out.emplace_back(&s[i], &s[i + 1]);
    return out;
}

std::size_t count_named(const std::vector<Sample>& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](const Sample& x) { return x.label.rfind("random#", 0) != 0; }));
}

std::uint64_t mix(std::uint64_t seed, std::size_t salt) { return seed * 1000003ULL + salt * 7919ULL + 1; }

ojson obstruction_json(const VertexBijection& alpha, const NotConstructible& nc) {
    const Polytope& codomain = nc.inverse_direction ? *alpha.source() : *alpha.target();
    // Independent confirmation of the affine-dependence witness.
    Point combo(codomain.dim());
    Rational weight_sum;
    for (std::size_t i = 0; i < codomain.size(); ++i) {
        combo = combo + nc.obstruction.dependence[i] * codomain.vertex(i);
        weight_sum += nc.obstruction.dependence[i];
    }
    const Rational value_combo = dot(nc.obstruction.dependence, nc.transformed_values);
    const bool confirmed = std::all_of(combo.begin(), combo.end(), [](const Rational& x) { return x.is_zero(); }) &&
                           weight_sum.is_zero() && value_combo == nc.obstruction.value_combination &&
                           !value_combo.is_zero();
    ojson w;
    w["direction"] = nc.inverse_direction ? "inverse" : "forward";
    w["function_values"] = to_json(nc.witness_values);
    w["transformed_values"] = to_json(nc.transformed_values);
    w["dependence"] = to_json(nc.obstruction.dependence);
    w["value_combination"] = nc.obstruction.value_combination.str();
    w["confirmed"] = confirmed;
    return w;
}

// ---------------------------------------------------------------------------

void verify_induced(const Scene& scene, Mode mode, const SuiteOptions& opts, Report& report) {
    std::size_t salt = 0;
    for (const auto& [bname, alpha] : scene.bijections) {
        ++salt;
        const std::string prefix = to_string(mode) + "[" + bname + "]";
        auto result = induce_map(alpha, mode, named_functions_on(scene, alpha.source()), mix(opts.seed, salt));
        if (auto* nc = std::get_if<NotConstructible>(&result)) {
            report.measured(prefix + ".obstruction", "not-constructible", obstruction_json(alpha, *nc));
            continue;
        }
        if (auto* und = std::get_if<Undetermined>(&result)) {
            report.measured(prefix + ".obstruction", "undetermined", {{"candidates_tried", und->candidates_tried}});
            continue;
        }
        const auto& phi = std::get<InducedMap>(result);
        const auto& k = alpha.source();
        RationalSampler rng(mix(opts.seed, salt));
        const auto samples = samples_on(scene, k, 2 * opts.trials, rng);
        const std::size_t named = count_named(samples);

        const RVector ones(k->size(), Rational(1));
        const RVector image_of_one = phi.apply_values(ones);
        report.exact(prefix + ".unital", vec(image_of_one), "=", vec(ones), image_of_one == ones);

        for (const auto& [f, g] : sample_pairs(samples, named)) {
            const RVector pf = phi.apply_values(f->values);
            const RVector pg = phi.apply_values(g->values);
            const Rational lhs = gauge_M(pf, pg).value;
            const Rational rhs = mode == Mode::Reversing ? gauge_M(g->values, f->values).value
                                                         : gauge_M(f->values, g->values).value;
            report.exact(prefix + ".gauge-law", lhs.str(), "=", rhs.str(), lhs == rhs).witness = {{"f", f->label},
                                                                                                    {"g", g->label}};
            if (dominates(f->values, g->values)) {
                const bool ordered = mode == Mode::Reversing ? dominates(pg, pf) : dominates(pf, pg);
                report.exact(prefix + ".order", mode == Mode::Reversing ? "Phi(g)<=Phi(f)" : "Phi(f)<=Phi(g)",
                             "=", "true", ordered)
                    .witness = {{"f", f->label}, {"g", g->label}};
            }
        }

        const InducedMap inverse = phi.inverse();
        const std::size_t checked = std::min(samples.size(), named + 10);
        for (std::size_t i = 0; i < checked; ++i) {
            const auto& s = samples[i];
            const RVector back = inverse.apply_values(phi.apply_values(s.values));
            report.exact(prefix + ".inverse", vec(back), "=", vec(s.values), back == s.values).witness = {
                {"f", s.label}};
            for (const Rational& lambda : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
                const RVector scaled = phi.apply_values(lambda * s.values);
                const Rational factor = mode == Mode::Reversing ? reciprocal(lambda) : lambda;
                const RVector expected = factor * phi.apply_values(s.values);
                report.exact(prefix + ".homogeneity", vec(scaled), "=", vec(expected), scaled == expected).witness = {
                    {"f", s.label}, {"lambda", lambda.str()}};
            }
        }
    }
}

void verify_involution(const Scene& scene, const SuiteOptions& opts, Report& report) {
    std::size_t salt = 0;
    for (const auto& [bname, alpha] : scene.bijections) {
        ++salt;
        if (!alpha.is_endomap()) {
            report.measured("involution[" + bname + "]", "skipped: source and target differ");
            continue;
        }
        RationalSampler rng(mix(opts.seed, salt));
        std::vector<AffineFunc> samples = named_functions_on(scene, alpha.source());
        if (alpha.source()->is_simplex())
            for (std::size_t i = 0; i < std::min<std::size_t>(opts.trials, 20); ++i)
                samples.push_back(affine_from_vertex_values(VertexValues(alpha.source(), random_values(*alpha.source(), rng))));

        for (Mode mode : {Mode::Reversing, Mode::Preserving}) {
            const std::string prefix = "involution[" + bname + "]." + to_string(mode);
            auto result = induce_map(alpha, mode, named_functions_on(scene, alpha.source()), mix(opts.seed, salt));
            if (auto* nc = std::get_if<NotConstructible>(&result)) {
                report.measured(prefix, "not-constructible", obstruction_json(alpha, *nc));
                continue;
            }
            if (!std::holds_alternative<InducedMap>(result)) {
                report.measured(prefix, "undetermined");
                continue;
            }
            const auto& phi = std::get<InducedMap>(result);
            std::vector<AffineFunc> positive;
            for (const auto& f : samples)
                if (is_in_Ac(*alpha.source(), f)) positive.push_back(f);
            const auto verdict = check_involution(phi, positive);
            report.exact(prefix, "Phi^2=id:" + boolean(verdict.phi_involution), "<=>",
                         "alpha^2=id:" + boolean(verdict.alpha_involution), verdict.consistent());

            if (mode != Mode::Reversing) continue;
            const auto comp = composed_involution(phi);
            ojson w;
            w["alpha"] = to_json(comp.alpha);
            w["beta"] = to_json(comp.beta);
            for (const auto* c : {&comp.inverse_applies_beta, &comp.inverse_applies_beta_inverse}) {
                ojson cj;
                cj["convention"] = c->name;
                cj["boundary"] = to_json(c->boundary);
                cj["involution"] = c->involution;
                cj["gauge_reversing"] = c->gauge_reversing;
                w["conventions"].push_back(std::move(cj));
            }
            w["stated_identity_holds"] = comp.stated_identity_holds;
            report.measured("composition[" + bname + "]",
                            comp.stated_identity_holds ? "identity-holds" : "identity-violated", std::move(w));
        }
    }
}

void verify_derivative(const Scene& scene, const SuiteOptions& opts, Report& report) {
    std::size_t salt = 0;
    for (const auto& [bname, alpha] : scene.bijections) {
        ++salt;
        const std::string prefix = "derivative[" + bname + "]";
        auto result = induce_map(alpha, Mode::Reversing, named_functions_on(scene, alpha.source()), mix(opts.seed, salt));
        if (auto* nc = std::get_if<NotConstructible>(&result)) {
            report.measured(prefix, "not-constructible", obstruction_json(alpha, *nc));
            continue;
        }
        if (!std::holds_alternative<InducedMap>(result)) {
            report.measured(prefix, "undetermined");
            continue;
        }
        const auto& phi = std::get<InducedMap>(result);
        const auto& k = alpha.source();
        RationalSampler rng(mix(opts.seed, salt));
        const auto samples = samples_on(scene, k, opts.trials, rng);

        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& s = samples[i];
            const AffineFunc f = affine_from_vertex_values(VertexValues(k, s.values));
            const auto deriv = neg_gateaux(phi, f);
            const RVector at_f = deriv.apply_values(s.values);
            const RVector image = phi.apply_values(s.values);
            report.exact(prefix + ".self", vec(at_f), "=", vec(image), at_f == image).witness = {{"f", s.label}};

            // Direction with |h| <= f so that f +- t h stays positive.
            RVector h_vals(s.values.size());
            for (std::size_t v = 0; v < h_vals.size(); ++v) {
                Rational r = rng.value_in(1, 1, 16) - Rational(static_cast<long>(rng.integer(0, 15)), 16);
                if (rng.integer(0, 1)) r = -r;
                h_vals[v] = r * s.values[v];
            }
            const AffineFunc h = affine_from_vertex_values(VertexValues(k, h_vals));
            const auto check = check_derivative(phi, f, h);
            for (std::size_t r = 0; r < check.error_ratios.size(); ++r) {
                const Rational& ratio = check.error_ratios[r];
                const bool ok = ratio >= Rational(7, 2) && ratio <= Rational(9, 2);
                report.exact(prefix + ".richardson", ratio.str(), "in", "[7/2,9/2]", ok).witness = {
                    {"f", s.label},
                    {"t", check.differences[r].step.str()},
                    {"error_t", check.differences[r].error.str()},
                    {"error_t_half", check.differences[r + 1].error.str()}};
            }

            const auto& other = samples[(i + 1) % samples.size()];
            const Rational lhs = gauge_M(deriv.apply_values(s.values), deriv.apply_values(other.values)).value;
            const Rational rhs = gauge_M(s.values, other.values).value;
            report.exact(prefix + ".preserving-law", lhs.str(), "=", rhs.str(), lhs == rhs).witness = {
                {"f", s.label}, {"h1", s.label}, {"h2", other.label}};
        }
    }
}

void verify_atomicity(const Scene& scene, const SuiteOptions& opts, Report& report) {
    std::size_t salt = 0;
    for (const auto& [kname, k] : scene.polytopes) {
        ++salt;
        for (std::size_t psi = 0; psi < k->size(); ++psi) {
            RVector values;
            RVector expected(k->size());
            expected[psi] = Rational(1);
            for (const auto& rho : k->vertices()) values.push_back(p_value(*k, psi, rho));
            report.exact("extremal-boundary[" + kname + "," + std::to_string(psi) + "]", vec(values), "=",
                         vec(expected), values == expected);
        }
        RationalSampler rng(mix(opts.seed, salt));
        if (!k->is_simplex()) {
            for (std::size_t psi = 0; psi < k->size(); ++psi) {
                auto probe = affinity_probe(*k, psi, std::min<std::size_t>(opts.trials, 20), mix(opts.seed, salt));
                const std::string claim = "affinity-probe[" + kname + "," + std::to_string(psi) + "]";
                if (auto* cx = std::get_if<AffinityCounterexample>(&probe)) {
                    report.measured(claim, "counterexample",
                                    {{"a", to_json(cx->a)},
                                     {"b", to_json(cx->b)},
                                     {"midpoint", to_json(cx->midpoint)},
                                     {"p_a", cx->p_a.str()},
                                     {"p_b", cx->p_b.str()},
                                     {"p_mid", cx->p_mid.str()}});
                } else {
                    report.measured(claim, "affine", {{"pairs", std::get<AffineVerdict>(probe).pairs_checked}});
                }
            }
            continue;
        }

        for (std::size_t psi = 0; psi < k->size(); ++psi) {
            const ExtremalEvaluator p(k, psi);
            const auto norm = gauge_M_nonnegative(p.vertex_values(), RVector(k->size(), Rational(1))).value;
            report.exact("normalization[" + kname + "," + std::to_string(psi) + "]", norm.str(), "=", "1",
                         norm == Rational(1));
            for (std::size_t t = 0; t < std::min<std::size_t>(opts.trials, 10); ++t) {
                const Point x = rng.interior_point(*k);
                const Rational lp_value = p_value(*k, psi, x);
                const Rational bary = barycentric(*k, x)[psi];
                report.exact("extremal-barycentric[" + kname + "," + std::to_string(psi) + "]", lp_value.str(), "=",
                             bary.str(), lp_value == bary)
                    .witness = {{"x", to_json(x)}};
            }
        }

        auto samples = samples_on(scene, k, opts.trials, rng);
        const std::size_t named = count_named(samples);
        // Every other random pair is made comparable so both outcomes occur.
        for (std::size_t i = named + 1; i < samples.size(); i += 4)
            for (std::size_t v = 0; v < samples[i].values.size(); ++v)
                samples[i].values[v] = samples[i - 1].values[v] + rng.value_in(0, 4, 16);

        for (const auto& [g, gp] : sample_pairs(samples, named)) {
            const AffineFunc ga = affine_from_vertex_values(VertexValues(k, g->values));
            const AffineFunc gpa = affine_from_vertex_values(VertexValues(k, gp->values));
            const auto verdict = atomic_dominance_equiv(k, ga, gpa);
            report.exact("atomicity[" + kname + "]",
                         "extremal:" + boolean(verdict.via_extremal) + ",coextremal:" + boolean(verdict.via_coextremal),
                         "<=>", "dominates:" + boolean(verdict.dominates), verdict.consistent())
                .witness = {{"g", g->label}, {"g_prime", gp->label}};
        }

        for (std::size_t i = 0; i < std::min(samples.size(), named + 10); ++i) {
            const auto& s = samples[i];
            const AffineFunc g = affine_from_vertex_values(VertexValues(k, s.values));
            RVector m_vals;
            RVector big_m_vals;
            for (std::size_t psi = 0; psi < k->size(); ++psi) {
                m_vals.push_back(m_against_extremal(k, g, psi));
                big_m_vals.push_back(ext_gauge_indicator_M(*k, g, psi));
            }
            report.exact("m-extremal[" + kname + "]", vec(m_vals), "=", vec(s.values), m_vals == s.values).witness = {
                {"g", s.label}};
            report.exact("M-coextremal[" + kname + "]", vec(big_m_vals), "=", vec(s.values), big_m_vals == s.values)
                .witness = {{"g", s.label}};
        }
    }
}

void verify_gauges(const Scene& scene, const SuiteOptions& opts, Report& report) {
    std::size_t salt = 0;
    for (const auto& [kname, k] : scene.polytopes) {
        ++salt;
        RationalSampler rng(mix(opts.seed, salt));
        const auto samples = samples_on(scene, k, opts.trials, rng);
        const std::string tag = "[" + kname + "]";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& f = samples[i];
            const auto& g = samples[(i + 1) % samples.size()];
            const auto& h = samples[(i + 2) % samples.size()];
            const ojson who = {{"f", f.label}, {"g", g.label}, {"h", h.label}};

            const Rational product = gauge_m(f.values, g.values).value * gauge_M(g.values, f.values).value;
            report.exact("reciprocity" + tag, product.str(), "=", "1", product == Rational(1)).witness = who;

            const Rational tfg = thompson_factor(f.values, g.values);
            const Rational tgf = thompson_factor(g.values, f.values);
            report.exact("thompson-symmetry" + tag, tfg.str(), "=", tgf.str(), tfg == tgf).witness = who;

            const Rational tfh = thompson_factor(f.values, h.values);
            const Rational bound = tfg * thompson_factor(g.values, h.values);
            report.exact("thompson-triangle" + tag, tfh.str(), "<=", bound.str(), tfh <= bound).witness = who;

            const bool unit = tfg == Rational(1);
            const bool same = f.values == g.values;
            report.exact("thompson-identity" + tag, "T=1:" + boolean(unit), "<=>", "equal:" + boolean(same),
                         unit == same)
                .witness = who;

            const auto big_m = gauge_M(f.values, g.values);
            const RVector scaled = big_m.value * g.values;
            const bool bounded = dominates(f.values, scaled) && f.values[big_m.witness] == scaled[big_m.witness];
            report.exact("bound-realization" + tag, "f<=M(f,g)g attained at " + std::to_string(big_m.witness), "=",
                         "true", bounded)
                .witness = who;

            const bool dom = dominates(f.values, g.values);
            const bool gauge_le = big_m.value <= Rational(1);
            report.exact("order-characterization" + tag, "f<=g:" + boolean(dom), "<=>", "M(f,g)<=1:" + boolean(gauge_le),
                         dom == gauge_le)
                .witness = who;
        }
    }
}

}  // namespace

Report run_verify(const Scene& scene, const std::string& which, const SuiteOptions& opts) {
    Report report;
    report.command = "verify " + which;
    report.seed = opts.seed;
    if (which == "reversing" || which == "all") verify_induced(scene, Mode::Reversing, opts, report);
    if (which == "preserving" || which == "all") verify_induced(scene, Mode::Preserving, opts, report);
    if (which == "involution" || which == "all") verify_involution(scene, opts, report);
    if (which == "derivative" || which == "all") verify_derivative(scene, opts, report);
    if (which == "atomicity" || which == "all") verify_atomicity(scene, opts, report);
    if (which == "gauges" || which == "all") verify_gauges(scene, opts, report);
    return report;
}

spin::SpinElement random_spin_element(std::size_t dim, RationalSampler& rng) {
    spin::SpinElement e = spin::SpinElement::unit(dim);
    for (std::size_t i = 0; i < dim; ++i) e.v[static_cast<Eigen::Index>(i)] = 2.0 * rng.uniform01() - 1.0;
    e.lambda = e.v.norm() + 0.25 + 1.25 * rng.uniform01();
    return e;
}

Report run_spin_verify(std::size_t dim, std::size_t pairs, double tol, std::uint64_t seed) {
    if (dim == 0) throw InputError("--dim must be at least 1");
    Report report;
    report.command = "spin-verify";
    report.seed = seed;
    RationalSampler rng(seed);
    std::vector<std::pair<spin::SpinElement, spin::SpinElement>> list;
    for (std::size_t i = 0; i < pairs; ++i) {
        auto f = random_spin_element(dim, rng);
        auto g = random_spin_element(dim, rng);
        list.emplace_back(std::move(f), std::move(g));
    }

    const auto reversal = spin::verify_spin_reversal(list, tol);
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& item = reversal.items[i];
        report.tolerance("spin-reversal", item.lhs, item.rhs, item.residual, tol).witness["pair"] = i;

        const auto& f = list[i].first;
        const auto prod = spin::jordan_product(f, spin::spin_inverse(f));
        const double dev = std::max(std::abs(prod.lambda - 1.0), prod.v.lpNorm<Eigen::Infinity>());
        report.tolerance("spin-inverse-law", prod.lambda, 1.0, dev, 1e-10).witness["pair"] = i;

        const auto gauge = spin::spin_gauge_M(f, list[i].second);
        report.tolerance("spin-gauge-cross-check", gauge.value, gauge.value - gauge.residual, gauge.residual, 1e-4)
            .witness["pair"] = i;
    }
    return report;
}

Report run_spin_probe(const Eigen::VectorXd& psi, const std::vector<spin::SpinElement>& family, double tol) {
    Report report;
    report.command = "spin-probe";
    const auto result = spin::boundary_probe(psi, family, tol);
    ojson w;
    w["psi"] = std::vector<double>(psi.data(), psi.data() + psi.size());
    for (const auto& f : family) {
        ojson e;
        e["lambda"] = f.lambda;
        e["v"] = std::vector<double>(f.v.data(), f.v.data() + f.v.size());
        w["family"].push_back(std::move(e));
    }
    w["tol"] = tol;
    if (const auto* c = std::get_if<spin::Consistent>(&result)) {
        w["w"] = std::vector<double>(c->w.data(), c->w.data() + c->w.size());
        report.measured("boundary-probe", "consistent", std::move(w)).residual = c->residual;
    } else {
        const auto& inc = std::get<spin::Inconsistent>(result);
        w["w"] = std::vector<double>(inc.w.data(), inc.w.data() + inc.w.size());
        w["sphere_residual"] = inc.sphere_residual;
        w["constraint_residual"] = inc.constraint_residual;
        report.measured("boundary-probe", "inconsistent", std::move(w)).residual = inc.residual();
    }
    return report;
}

}  // namespace conegauge::cli
