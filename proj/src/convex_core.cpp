#include "conegauge/convex_core.hpp"

#include "conegauge/linalg.hpp"
#include "conegauge/rational_lp.hpp"

namespace conegauge {

namespace {

// Rows [v_i, 1]: an affine function with coefficients (a, c) takes the
// values M (a, c) on the vertices.
linalg::RMatrix evaluation_rows(const std::vector<Point>& vertices) {
    linalg::RMatrix rows;
    rows.reserve(vertices.size());
    for (const auto& v : vertices) {
        RVector row = v;
        row.emplace_back(1);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Feasibility system: lambda >= 0, sum lambda = 1, sum lambda_j p_j = x.
lp::LinearProgram hull_membership(const std::vector<const Point*>& points, const Point& x) {
    lp::LinearProgram prog;
    prog.num_vars = points.size();
    prog.objective.assign(points.size(), Rational(0));
    for (std::size_t j = 0; j < points.size(); ++j) {
        RVector e(points.size());
        e[j] = Rational(1);
        prog.add(std::move(e), lp::Relation::GreaterEqual, 0);
    }
    prog.add(RVector(points.size(), Rational(1)), lp::Relation::Equal, 1);
    for (std::size_t c = 0; c < x.size(); ++c) {
        RVector row(points.size());
        for (std::size_t j = 0; j < points.size(); ++j) row[j] = (*points[j])[c];
        prog.add(std::move(row), lp::Relation::Equal, x[c]);
    }
    return prog;
}

std::string describe(const std::string& name) { return name.empty() ? std::string("polytope") : name; }

}  // namespace

NotExtreme::NotExtreme(std::size_t idx, std::vector<std::size_t> others_, RVector weights_)
    : Error("point " + std::to_string(idx) + " is a convex combination of the other points"),
      index(idx),
      others(std::move(others_)),
      weights(std::move(weights_)) {}

std::shared_ptr<const Polytope> Polytope::make(std::vector<Point> points, std::string name) {
    if (points.empty()) throw InputError(describe(name) + ": at least one vertex is required");
    const std::size_t dim = points.front().size();
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].size() != dim)
            throw DimensionMismatch(describe(name) + ": vertex " + std::to_string(i) + " has dimension " +
                                    std::to_string(points[i].size()) + ", expected " + std::to_string(dim));

    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<const Point*> others;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            others.push_back(&points[j]);
            idx.push_back(j);
        }
        if (others.empty()) continue;
        auto verdict = lp::check_feasible(hull_membership(others, points[i]));
        if (auto* f = std::get_if<lp::Feasible>(&verdict)) throw NotExtreme(i, std::move(idx), std::move(f->point));
    }

    const bool simplex = linalg::row_basis(evaluation_rows(points)).dependent.empty();
    return std::shared_ptr<const Polytope>(new Polytope(dim, std::move(points), std::move(name), simplex));
}

const Point& Polytope::vertex(std::size_t i) const {
    if (i >= vertices_.size())
        throw BadIndex("vertex index " + std::to_string(i) + " out of range for " + describe(name_) + " with " +
                       std::to_string(vertices_.size()) + " vertices");
    return vertices_[i];
}

Rational evaluate(const AffineFunc& f, const Point& x) {
    if (f.linear.size() != x.size())
        throw DimensionMismatch("affine function of dimension " + std::to_string(f.linear.size()) +
                                " evaluated at a point of dimension " + std::to_string(x.size()));
    return dot(f.linear, x) + f.constant;
}

AffineFunc operator+(const AffineFunc& a, const AffineFunc& b) { return {a.linear + b.linear, a.constant + b.constant}; }
AffineFunc operator-(const AffineFunc& a, const AffineFunc& b) { return {a.linear - b.linear, a.constant - b.constant}; }
AffineFunc operator*(const Rational& s, const AffineFunc& f) { return {s * f.linear, s * f.constant}; }

VertexValues::VertexValues(PolytopeRef k, RVector vals) : polytope(std::move(k)), values(std::move(vals)) {
    if (!polytope) throw InputError("vertex values without a polytope");
    if (values.size() != polytope->size())
        throw DimensionMismatch("expected " + std::to_string(polytope->size()) + " vertex values, got " +
                                std::to_string(values.size()));
}

RVector values_at_vertices(const Polytope& k, const AffineFunc& f) {
    RVector vals;
    vals.reserve(k.size());
    for (const auto& v : k.vertices()) vals.push_back(evaluate(f, v));
    return vals;
}

VertexValues restrict_to_vertices(const PolytopeRef& k, const AffineFunc& f) { return {k, values_at_vertices(*k, f)}; }

std::optional<RVector> convex_weights(const Polytope& k, const Point& x) {
    if (x.size() != k.dim())
        throw DimensionMismatch("point of dimension " + std::to_string(x.size()) + " tested against " +
                                describe(k.name()) + " of dimension " + std::to_string(k.dim()));
    std::vector<const Point*> pts;
    for (const auto& v : k.vertices()) pts.push_back(&v);
    auto verdict = lp::check_feasible(hull_membership(pts, x));
    if (auto* f = std::get_if<lp::Feasible>(&verdict)) return std::move(f->point);
    return std::nullopt;
}

bool contains(const Polytope& k, const Point& x) { return convex_weights(k, x).has_value(); }

RVector barycentric(const Polytope& k, const Point& x) {
    if (!k.is_simplex()) throw NotSimplex(describe(k.name()) + " is not a simplex");
    if (x.size() != k.dim()) throw DimensionMismatch("point dimension does not match polytope");
    const auto rows = evaluation_rows(k.vertices());
    RVector target = x;
    target.emplace_back(1);
    // lambda = (M M^T)^{-1} M target, then confirm M^T lambda = target.
    linalg::RMatrix gram(rows.size(), RVector(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) gram[i][j] = dot(rows[i], rows[j]);
    auto lambda = linalg::solve_square(std::move(gram), linalg::multiply(rows, target));
    if (!lambda || linalg::multiply_transposed(rows, *lambda) != target)
        throw PointOutsideAffineHull("point " + to_string(x) + " is outside the affine hull of " + describe(k.name()));
    return *lambda;
}

AffineExtension affine_extend(const Polytope& k, const RVector& vals) {
    if (vals.size() != k.size())
        throw DimensionMismatch("expected " + std::to_string(k.size()) + " vertex values, got " +
                                std::to_string(vals.size()));
    const auto rows = evaluation_rows(k.vertices());
    const auto basis = linalg::row_basis(rows);
    for (const auto& dep : basis.dependent) {
        Rational combo = dot(dep.coefficients, vals);
        if (!combo.is_zero()) return NotAffine{dep.coefficients, std::move(combo)};
    }
    RVector coeffs = linalg::min_norm_solution(rows, vals, basis.independent);
    Rational constant = coeffs.back();
    coeffs.pop_back();
    return AffineFunc{std::move(coeffs), std::move(constant)};
}

AffineFunc affine_from_vertex_values(const VertexValues& vals) {
    if (!vals.polytope->is_simplex()) throw NotSimplex(describe(vals.polytope->name()) + " is not a simplex");
    return std::get<AffineFunc>(affine_extend(vals));
}

}  // namespace conegauge
