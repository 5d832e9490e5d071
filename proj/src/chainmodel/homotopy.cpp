#include "qfloer/chain/homotopy.hpp"

#include <vector>

namespace qfloer {

std::optional<RationalMatrix> solve_homotopy(const RationalMatrix& f, const GradedSpace& source,
                                             const RationalMatrix& d_source, const GradedSpace& target,
                                             const RationalMatrix& d_target, long long h_degree) {
  const std::size_t ns = source.dim();
  const std::size_t nt = target.dim();
  if (f.rows() != nt || f.cols() != ns || d_source.rows() != ns || d_source.cols() != ns ||
      d_target.rows() != nt || d_target.cols() != nt) {
    throw SizeMismatch("solve_homotopy: shapes do not match the spaces");
  }
  // Unknowns are the admissible entries H(r, c).
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  DenseMatrix<long long> slot(nt, ns, -1);
  for (std::size_t r = 0; r < nt; ++r) {
    for (std::size_t c = 0; c < ns; ++c) {
      if (target.degree(r) - source.degree(c) == h_degree) {
        slot(r, c) = static_cast<long long>(unknowns.size());
        unknowns.emplace_back(r, c);
      }
    }
  }
  // Equation (i, j): sum_k dT(i,k) H(k,j) + sum_k H(i,k) dS(k,j) = f(i,j).
  RationalMatrix sys(nt * ns, unknowns.size());
  RationalVector rhs(nt * ns);
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < ns; ++j) {
      const std::size_t row = i * ns + j;
      rhs[row] = f(i, j);
      for (std::size_t k = 0; k < nt; ++k) {
        if (!d_target(i, k).is_zero() && slot(k, j) >= 0) sys(row, slot(k, j)) += d_target(i, k);
      }
      for (std::size_t k = 0; k < ns; ++k) {
        if (!d_source(k, j).is_zero() && slot(i, k) >= 0) sys(row, slot(i, k)) += d_source(k, j);
      }
    }
  }
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  RationalMatrix h(nt, ns);
  for (std::size_t u = 0; u < unknowns.size(); ++u) h(unknowns[u].first, unknowns[u].second) = (*x)[u];
  return h;
}

std::optional<RationalVector> primitive(const RationalMatrix& d, const RationalVector& v) { return solve(d, v); }

std::optional<RationalVector> coprimitive(const RationalMatrix& d, const RationalVector& g) {
  return solve(d.transpose(), g);
}

}  // namespace qfloer
