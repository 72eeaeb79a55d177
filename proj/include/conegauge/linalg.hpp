#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conegauge/rational.hpp"

namespace conegauge::linalg {

using RMatrix = std::vector<RVector>;

/// Solves A x = b for square A; nullopt when A is singular.
std::optional<RVector> solve_square(RMatrix a, RVector b);

RVector multiply(const RMatrix& a, const RVector& x);
RVector multiply_transposed(const RMatrix& a, const RVector& y);  // A^T y

// Greedy row basis: rows are scanned in order and kept when independent of
// the rows kept so far. Each rejected row carries the dependence that
// produced it.
struct Dependence {
    std::size_t row;
    RVector coefficients;  // sum_j coefficients[j] * rows[j] == 0, coefficients[row] == 1
};

struct RowBasis {
    std::vector<std::size_t> independent;
    std::vector<Dependence> dependent;
};

RowBasis row_basis(const RMatrix& rows);

/**
 * Minimum-norm solution of M x = b restricted to the given independent rows:
 * x = M_R^T (M_R M_R^T)^{-1} b_R. The caller checks the remaining rows.
 */
RVector min_norm_solution(const RMatrix& rows, const RVector& rhs, const std::vector<std::size_t>& independent);

}  // namespace conegauge::linalg
