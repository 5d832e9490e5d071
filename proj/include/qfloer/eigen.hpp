#pragma once

#include "qfloer/linalg.hpp"

#include <vector>

namespace qfloer {

struct EigenBlock {
  Rational eigenvalue;
  std::size_t multiplicity = 0;
  std::vector<RationalVector> basis;  // spans ker (m - eigenvalue)^multiplicity
};

struct EigenDecomposition {
  std::vector<EigenBlock> blocks;  // ascending eigenvalue
};

// Generalized eigenspaces of a square rational matrix. Throws SplittingError
// unless the characteristic polynomial is a product of rational linear
// factors.
EigenDecomposition generalized_eigenspaces(const RationalMatrix& m);

}  // namespace qfloer
