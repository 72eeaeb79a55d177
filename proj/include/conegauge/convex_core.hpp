#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conegauge/rational.hpp"

namespace conegauge {

using Point = RVector;

/**
 * A compact convex set given by its extreme points.
 *
 * Every vertex is certified extreme when the polytope is built, so the
 * vertex list *is* the extreme boundary. Vertex order is fixed and every
 * index-based structure (vertex values, bijections) refers to it.
 */
class Polytope {
public:
    /// Throws NotExtreme, DimensionMismatch or InputError.
    static std::shared_ptr<const Polytope> make(std::vector<Point> points, std::string name = {});

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }
    [[nodiscard]] const Point& vertex(std::size_t i) const;
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] bool is_simplex() const { return simplex_; }

private:
    Polytope(std::size_t dim, std::vector<Point> vertices, std::string name, bool simplex)
        : dim_(dim), vertices_(std::move(vertices)), name_(std::move(name)), simplex_(simplex) {}

    std::size_t dim_;
    std::vector<Point> vertices_;
    std::string name_;
    bool simplex_;
};

using PolytopeRef = std::shared_ptr<const Polytope>;

/// Raised by Polytope::make when a point is a convex combination of the others.
class NotExtreme : public Error {
public:
    NotExtreme(std::size_t index, std::vector<std::size_t> others, RVector weights);

    std::size_t index;
    std::vector<std::size_t> others;  // indices of the combining points
    RVector weights;                  // one weight per entry of `others`
};

inline std::shared_ptr<const Polytope> make_polytope(std::vector<Point> points, std::string name = {}) {
    return Polytope::make(std::move(points), std::move(name));
}

inline bool is_simplex(const Polytope& k) { return k.is_simplex(); }

/// f(x) = linear . x + constant
struct AffineFunc {
    RVector linear;
    Rational constant;

    static AffineFunc one(std::size_t dim) { return {RVector(dim), Rational(1)}; }

    friend bool operator==(const AffineFunc&, const AffineFunc&) = default;
};

Rational evaluate(const AffineFunc& f, const Point& x);

AffineFunc operator+(const AffineFunc& a, const AffineFunc& b);
AffineFunc operator-(const AffineFunc& a, const AffineFunc& b);
AffineFunc operator*(const Rational& s, const AffineFunc& f);

/// Restriction of a function to the extreme boundary, in vertex order.
struct VertexValues {
    PolytopeRef polytope;
    RVector values;

    VertexValues(PolytopeRef k, RVector vals);
};

VertexValues restrict_to_vertices(const PolytopeRef& k, const AffineFunc& f);
RVector values_at_vertices(const Polytope& k, const AffineFunc& f);

/// Nonnegative convex weights expressing x, or nullopt if x lies outside K.
std::optional<RVector> convex_weights(const Polytope& k, const Point& x);
bool contains(const Polytope& k, const Point& x);

/// Throws NotSimplex or PointOutsideAffineHull.
RVector barycentric(const Polytope& k, const Point& x);

struct NotAffine {
    RVector dependence;          // sum_i dependence[i] * v_i = 0 and sum_i dependence[i] = 0
    Rational value_combination;  // sum_i dependence[i] * vals[i], nonzero
};

using AffineExtension = std::variant<AffineFunc, NotAffine>;

/**
 * Affine function matching the vertex values, if one exists.
 *
 * When several do (vertices not spanning the ambient space) the minimum-norm
 * coefficient vector is returned, so the result is canonical.
 */
AffineExtension affine_extend(const Polytope& k, const RVector& vals);
inline AffineExtension affine_extend(const VertexValues& vv) { return affine_extend(*vv.polytope, vv.values); }

/// Throws NotSimplex.
AffineFunc affine_from_vertex_values(const VertexValues& vals);

}  // namespace conegauge
