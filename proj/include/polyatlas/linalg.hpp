#pragma once

#include <optional>
#include <vector>

#include "polyatlas/rational.hpp"

namespace polyatlas {

struct RankSolveResult {
    int rank = 0;
    bool consistent = true;
    std::optional<std::vector<Rational>> solution;
};

// Fraction-free (Bareiss) elimination on the row-scaled integer matrix.
// An inconsistent right-hand side yields consistent == false and no solution.
RankSolveResult rank_and_solve(const Matrix& a,
                               const std::optional<std::vector<Rational>>& rhs = std::nullopt);

int rank(const Matrix& a);

// Basis of {x : a x = 0}; `cols` is needed when `a` has no rows.
std::vector<std::vector<Rational>> nullspace(const Matrix& a, int cols);

// Dimension of the affine hull. Throws std::invalid_argument on empty input.
int affine_dim(const std::vector<Point>& points);

}  // namespace polyatlas
