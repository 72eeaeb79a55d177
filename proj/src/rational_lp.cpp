#include "conegauge/rational_lp.hpp"

#include <string>

namespace conegauge::lp {

LinearProgram& LinearProgram::add(RVector coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
    return *this;
}

void LinearProgram::validate() const {
    if (objective.size() != num_vars)
        throw DimensionMismatch("objective has length " + std::to_string(objective.size()) + ", expected " +
                                std::to_string(num_vars));
    for (std::size_t i = 0; i < constraints.size(); ++i)
        if (constraints[i].coefficients.size() != num_vars)
            throw DimensionMismatch("constraint " + std::to_string(i) + " has length " +
                                    std::to_string(constraints[i].coefficients.size()) + ", expected " +
                                    std::to_string(num_vars));
}

namespace {

// One row of the internal form a.y <= b, y >= 0, where y = (x+, x-).
struct Row {
    RVector a;
    Rational b;
    std::size_t origin;
    int orig_sign;  // +1 if a is the original row, -1 if negated
};

class Tableau {
public:
    explicit Tableau(const LinearProgram& lp) : n_(lp.num_vars) {
        for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
            const auto& c = lp.constraints[i];
            if (c.relation != Relation::GreaterEqual) rows_.push_back({c.coefficients, c.rhs, i, +1});
            if (c.relation != Relation::LessEqual) rows_.push_back({(-1) * c.coefficients, -c.rhs, i, -1});
        }
        m_ = rows_.size();
        slack0_ = 2 * n_;
        art0_ = slack0_ + m_;
        std::size_t num_art = 0;
        for (const auto& r : rows_)
            if (r.b.sign() < 0) ++num_art;
        cols_ = art0_ + num_art;

        t_.assign(m_, RVector(cols_ + 1));
        basis_.resize(m_);
        init_col_.resize(m_);
        row_scale_.resize(m_);
        std::size_t next_art = art0_;
        for (std::size_t r = 0; r < m_; ++r) {
            const int s = rows_[r].b.sign() < 0 ? -1 : 1;
            row_scale_[r] = s;
            for (std::size_t j = 0; j < n_; ++j) {
                t_[r][j] = Rational(s) * rows_[r].a[j];
                t_[r][n_ + j] = -t_[r][j];
            }
            t_[r][slack0_ + r] = Rational(s);
            t_[r][cols_] = Rational(s) * rows_[r].b;
            if (s < 0) {
                t_[r][next_art] = Rational(1);
                basis_[r] = next_art++;
            } else {
                basis_[r] = slack0_ + r;
            }
            init_col_[r] = basis_[r];
        }
    }

    [[nodiscard]] bool has_artificials() const { return cols_ > art0_; }
    [[nodiscard]] bool is_artificial(std::size_t j) const { return j >= art0_; }

    struct Outcome {
        bool unbounded = false;
        std::size_t entering = 0;
    };

    // Minimizes cost over the current basis; artificial columns never enter.
    Outcome optimize(const RVector& cost) {
        for (;;) {
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < cols_ && entering == cols_; ++j) {
                if (is_artificial(j) || is_basic(j)) continue;
                if (reduced_cost(cost, j).sign() < 0) entering = j;
            }
            if (entering == cols_) return {};

            std::size_t leave = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (t_[r][entering].sign() <= 0) continue;
                Rational ratio = t_[r][cols_] / t_[r][entering];
                if (leave == m_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (leave == m_) return {true, entering};
            pivot(leave, entering);
        }
    }

    // After a zero-valued phase 1, swap basic artificials for structural or slack columns.
    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[r])) continue;
            for (std::size_t j = 0; j < art0_; ++j) {
                if (!t_[r][j].is_zero()) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    [[nodiscard]] Rational objective_value(const RVector& cost) const {
        Rational v;
        for (std::size_t r = 0; r < m_; ++r) v += cost[basis_[r]] * t_[r][cols_];
        return v;
    }

    [[nodiscard]] RVector primal_point() const {
        RVector y(cols_);
        for (std::size_t r = 0; r < m_; ++r) y[basis_[r]] = t_[r][cols_];
        RVector x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = y[j] - y[n_ + j];
        return x;
    }

    [[nodiscard]] RVector ray(std::size_t entering) const {
        RVector d(cols_);
        d[entering] = Rational(1);
        for (std::size_t r = 0; r < m_; ++r) d[basis_[r]] = -t_[r][entering];
        RVector x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = d[j] - d[n_ + j];
        return x;
    }

    // Simplex multipliers of the internal rows a.y <= b, folded back onto the
    // caller's constraints.
    [[nodiscard]] RVector row_duals(const RVector& cost, std::size_t num_constraints) const {
        RVector y(num_constraints);
        for (std::size_t r = 0; r < m_; ++r) {
            Rational pi;
            for (std::size_t k = 0; k < m_; ++k) pi += cost[basis_[k]] * t_[k][init_col_[r]];
            y[rows_[r].origin] += Rational(rows_[r].orig_sign * row_scale_[r]) * pi;
        }
        return y;
    }

    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t art_begin() const { return art0_; }

private:
    bool is_basic(std::size_t j) const {
        for (auto b : basis_)
            if (b == j) return true;
        return false;
    }

    Rational reduced_cost(const RVector& cost, std::size_t j) const {
        Rational d = cost[j];
        for (std::size_t r = 0; r < m_; ++r)
            if (!t_[r][j].is_zero()) d -= cost[basis_[r]] * t_[r][j];
        return d;
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational inv = reciprocal(t_[pr][pc]);
        for (auto& v : t_[pr]) v *= inv;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == pr || t_[r][pc].is_zero()) continue;
            const Rational factor = t_[r][pc];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (!t_[pr][j].is_zero()) t_[r][j] -= factor * t_[pr][j];
        }
        basis_[pr] = pc;
    }

    std::size_t n_;
    std::size_t m_ = 0;
    std::size_t slack0_ = 0;
    std::size_t art0_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
    std::vector<RVector> t_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> init_col_;
    std::vector<int> row_scale_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    lp.validate();
    Tableau tab(lp);
    const std::size_t m = lp.constraints.size();

    if (tab.has_artificials()) {
        RVector phase1(tab.cols());
        for (std::size_t j = tab.art_begin(); j < tab.cols(); ++j) phase1[j] = Rational(1);
        tab.optimize(phase1);
        if (tab.objective_value(phase1).sign() > 0) {
            // The phase-1 multipliers z satisfy z <= 0, z.A = 0, z.b > 0.
            RVector certificate = tab.row_duals(phase1, m);
            for (auto& c : certificate) c = -c;
            return {Status::Infeasible, std::nullopt, std::move(certificate), {}};
        }
        tab.drive_out_artificials();
    }

    const Rational direction(lp.sense == Sense::Minimize ? 1 : -1);
    RVector cost(tab.cols());
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        cost[j] = direction * lp.objective[j];
        cost[lp.num_vars + j] = -cost[j];
    }
    const auto outcome = tab.optimize(cost);
    if (outcome.unbounded) return {Status::Unbounded, std::nullopt, tab.ray(outcome.entering), {}};

    RVector x = tab.primal_point();
    Rational optimum = dot(lp.objective, x);
    RVector dual = tab.row_duals(cost, m);
    if (lp.sense == Sense::Maximize)
        for (auto& y : dual) y = -y;
    return {Status::Optimal, std::move(optimum), std::move(x), std::move(dual)};
}

Feasibility check_feasible(const LinearProgram& lp) {
    LinearProgram zero = lp;
    zero.objective.assign(lp.num_vars, Rational(0));
    zero.sense = Sense::Minimize;
    LpResult r = solve_lp(zero);
    if (r.status == Status::Optimal) return Feasible{std::move(r.witness)};
    return Infeasible{std::move(r.witness)};
}

bool satisfies(const LinearProgram& lp, const RVector& x) {
    if (x.size() != lp.num_vars) return false;
    for (const auto& c : lp.constraints) {
        const Rational lhs = dot(c.coefficients, x);
        switch (c.relation) {
            case Relation::LessEqual:
                if (lhs > c.rhs) return false;
                break;
            case Relation::GreaterEqual:
                if (lhs < c.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
        }
    }
    return true;
}

namespace {

// Sign pattern where the multiplier turns a valid inequality into a valid
// "<=" bound: y >= 0 on <=, y <= 0 on >=.
bool upper_sign_ok(Relation rel, const Rational& y) {
    switch (rel) {
        case Relation::LessEqual: return y.sign() >= 0;
        case Relation::GreaterEqual: return y.sign() <= 0;
        case Relation::Equal: return true;
    }
    return false;
}

}  // namespace

bool is_farkas_certificate(const LinearProgram& lp, const RVector& y) {
    if (y.size() != lp.constraints.size()) return false;
    RVector combo(lp.num_vars);
    Rational rhs;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!upper_sign_ok(lp.constraints[i].relation, y[i])) return false;
        combo = combo + y[i] * lp.constraints[i].coefficients;
        rhs += y[i] * lp.constraints[i].rhs;
    }
    for (const auto& v : combo)
        if (!v.is_zero()) return false;
    return rhs.sign() < 0;
}

bool is_dual_certificate(const LinearProgram& lp, const RVector& y, const Rational& optimum) {
    if (y.size() != lp.constraints.size()) return false;
    RVector combo(lp.num_vars);
    Rational rhs;
    for (std::size_t i = 0; i < y.size(); ++i) {
        // Minimization lower bounds come from the reversed sign pattern.
        const Rational signed_y = lp.sense == Sense::Minimize ? -y[i] : y[i];
        if (!upper_sign_ok(lp.constraints[i].relation, signed_y)) return false;
        combo = combo + y[i] * lp.constraints[i].coefficients;
        rhs += y[i] * lp.constraints[i].rhs;
    }
    return combo == lp.objective && rhs == optimum;
}

bool is_improving_ray(const LinearProgram& lp, const RVector& d) {
    if (d.size() != lp.num_vars) return false;
    for (const auto& c : lp.constraints) {
        const int s = dot(c.coefficients, d).sign();
        if (c.relation == Relation::LessEqual && s > 0) return false;
        if (c.relation == Relation::GreaterEqual && s < 0) return false;
        if (c.relation == Relation::Equal && s != 0) return false;
    }
    const int gain = dot(lp.objective, d).sign();
    return lp.sense == Sense::Minimize ? gain < 0 : gain > 0;
}

}  // namespace conegauge::lp
