#include "conegauge/linalg.hpp"

#include <utility>

namespace conegauge::linalg {

std::optional<RVector> solve_square(RMatrix a, RVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DimensionMismatch("right-hand side does not match matrix");
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("matrix is not square");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = reciprocal(a[col][col]);
        for (auto& v : a[col]) v *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

RVector multiply(const RMatrix& a, const RVector& x) {
    RVector out;
    out.reserve(a.size());
    for (const auto& row : a) out.push_back(dot(row, x));
    return out;
}

RVector multiply_transposed(const RMatrix& a, const RVector& y) {
    if (a.size() != y.size()) throw DimensionMismatch("vector does not match matrix rows");
    if (a.empty()) return {};
    RVector out(a.front().size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += y[i] * a[i][j];
    return out;
}

RowBasis row_basis(const RMatrix& rows) {
    struct Reduced {
        RVector vec;
        RVector combo;
        std::size_t pivot;
    };
    RowBasis out;
    std::vector<Reduced> echelon;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RVector v = rows[i];
        RVector combo(rows.size());
        combo[i] = Rational(1);
        for (const auto& e : echelon) {
            if (v[e.pivot].is_zero()) continue;
            const Rational f = v[e.pivot] / e.vec[e.pivot];
            v = v - f * e.vec;
            combo = combo - f * e.combo;
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
        if (pivot == v.size()) {
            out.dependent.push_back({i, std::move(combo)});
        } else {
            out.independent.push_back(i);
            echelon.push_back({std::move(v), std::move(combo), pivot});
        }
    }
    return out;
}

RVector min_norm_solution(const RMatrix& rows, const RVector& rhs, const std::vector<std::size_t>& independent) {
    RMatrix sub;
    RVector sub_rhs;
    for (auto i : independent) {
        sub.push_back(rows[i]);
        sub_rhs.push_back(rhs[i]);
    }
    if (sub.empty()) return RVector(rows.empty() ? 0 : rows.front().size());

    RMatrix gram(sub.size(), RVector(sub.size()));
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j < sub.size(); ++j) gram[i][j] = dot(sub[i], sub[j]);
    auto w = solve_square(std::move(gram), std::move(sub_rhs));
    if (!w) throw Singular("rows passed as independent are dependent");
    return multiply_transposed(sub, *w);
}

}  // namespace conegauge::linalg
