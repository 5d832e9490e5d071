#pragma once

#include "qfloer/dense_matrix.hpp"
#include "qfloer/rational.hpp"

#include <optional>
#include <vector>

namespace qfloer {

using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = std::vector<Rational>;

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Some solution x of m x = rhs, if one exists.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
RationalMatrix power(const RationalMatrix& m, unsigned exponent);

// Matrix whose columns are the given vectors.
RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows);

bool is_zero(const RationalVector& v);

}  // namespace qfloer
