#pragma once

// Exact dense linear algebra over Q.

#include "tca/rational.hpp"

#include <cstddef>
#include <vector>

namespace tca {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduces `m` (rows of equal length `cols`) to reduced row echelon form in
/// place and returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, with the free
/// coordinate equal to one.
Matrix nullspace(Matrix m, std::size_t cols);

struct LinearSolution {
    enum class Kind { unique, inconsistent, underdetermined };
    Kind kind;
    std::vector<Rational> x;  // set only for Kind::unique
};

/// Solves a x = b; `a` has `cols` columns.
LinearSolution solve_linear(const Matrix& a, const std::vector<Rational>& b, std::size_t cols);

}  // namespace tca
