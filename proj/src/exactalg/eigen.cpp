#include "qfloer/eigen.hpp"

#include "qfloer/errors.hpp"
#include "qfloer/polynomial.hpp"

namespace qfloer {

EigenDecomposition generalized_eigenspaces(const RationalMatrix& m) {
  if (!m.is_square()) throw SizeMismatch("generalized_eigenspaces: matrix is not square");
  EigenDecomposition out;
  if (m.rows() == 0) return out;

  RootSplit split = rational_roots(characteristic_polynomial(m));
  if (split.cofactor.degree() > 0) {
    throw SplittingError("characteristic polynomial has an irreducible factor of degree " +
                         std::to_string(split.cofactor.degree()) + " over Q: " +
                         split.cofactor.str());
  }

  const std::size_t n = m.rows();
  for (const auto& [lambda, mult] : split.roots) {
    RationalMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    EigenBlock block;
    block.eigenvalue = lambda;
    block.multiplicity = mult;
    block.basis = kernel_basis(power(shifted, static_cast<unsigned>(mult)));
    if (block.basis.size() != mult) {
      throw std::logic_error("generalized eigenspace dimension differs from algebraic multiplicity");
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

}  // namespace qfloer
