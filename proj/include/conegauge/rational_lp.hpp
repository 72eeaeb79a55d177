#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "conegauge/rational.hpp"

namespace conegauge::lp {

enum class Relation { GreaterEqual, Equal, LessEqual };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
    RVector coefficients;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

/**
 * A linear program over free (sign-unrestricted) real variables.
 *
 * Sign restrictions are expressed as ordinary constraints, e.g. x >= 0 is
 * Constraint{{1}, GreaterEqual, 0}.
 */
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Constraint> constraints;
    RVector objective;
    Sense sense = Sense::Minimize;

    LinearProgram& add(RVector coefficients, Relation relation, Rational rhs);
    /// Throws DimensionMismatch unless every vector has length num_vars.
    void validate() const;
};

/**
 * Outcome of solve_lp.
 *
 * witness:
 *   Optimal    - optimal point
 *   Infeasible - one multiplier y_i per constraint with y_i >= 0 on <=,
 *                y_i <= 0 on >=, free on =, such that sum y_i a_i = 0 and
 *                sum y_i b_i < 0
 *   Unbounded  - feasible direction improving the objective
 *
 * dual (Optimal only): one multiplier per constraint with
 * sum y_i a_i = objective and sum y_i b_i = optimum. For minimization
 * y_i >= 0 on >= rows and y_i <= 0 on <= rows; signs flip for maximization.
 */
struct LpResult {
    Status status = Status::Infeasible;
    std::optional<Rational> optimum;
    RVector witness;
    RVector dual;
};

/// Two-phase primal simplex, exact arithmetic, Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

struct Feasible {
    RVector point;
};
struct Infeasible {
    RVector certificate;
};
using Feasibility = std::variant<Feasible, Infeasible>;

Feasibility check_feasible(const LinearProgram& lp);

// Independent checkers, used by callers that want to confirm a result.
bool satisfies(const LinearProgram& lp, const RVector& x);
bool is_farkas_certificate(const LinearProgram& lp, const RVector& y);
bool is_dual_certificate(const LinearProgram& lp, const RVector& y, const Rational& optimum);
bool is_improving_ray(const LinearProgram& lp, const RVector& d);

}  // namespace conegauge::lp
