#pragma once

#include "qfloer/linalg.hpp"
#include "qfloer/qlaurent.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace qfloer {

// Dimensions of the generalized eigenspaces of a graded endomorphism,
// indexed by (cohomological degree, eigenvalue). n is the complex dimension
// of the ambient manifold and enters only through duality.
class EquivariantTable {
 public:
  using Key = std::pair<long long, Rational>;  // (degree, weight)
  using Entries = std::map<Key, std::size_t>;

  EquivariantTable() = default;
  explicit EquivariantTable(long long n) : n_(n) {}
  EquivariantTable(long long n, const std::vector<std::tuple<long long, Rational, std::size_t>>& entries);

  long long n() const { return n_; }
  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Adds dim to the entry at (degree, weight); dim 0 is ignored.
  void add(long long degree, const Rational& weight, std::size_t dim = 1);
  std::size_t dim(long long degree, const Rational& weight) const;

  friend bool operator==(const EquivariantTable&, const EquivariantTable&) = default;

 private:
  long long n_ = 0;
  Entries entries_;
};

struct ShiftSpec {
  long long r = 0;  // grading shift
  Rational s;       // equivariant shift
};

// Supertrace: sum of (-1)^deg dim q^weight.
QLaurent q_intersection(const EquivariantTable& t);

// Table of K[x]/x^{k+1} with |x| = n/k acting with weight i/k on x^i.
EquivariantTable single_generator_table(long long n, long long k);

// Moves (d, w) to (d + right.r - left.r, w + right.s - left.s).
EquivariantTable apply_shift(const EquivariantTable& t, const ShiftSpec& left, const ShiftSpec& right);

// (d, w) -> (n - d, 1 - w).
EquivariantTable poincare_dual(const EquivariantTable& t);

// Algebraic multiplicities of the eigenvalues of each per-degree matrix.
EquivariantTable table_from_endomorphism(const std::map<long long, RationalMatrix>& per_degree, long long n);

struct ClassicalPoint {
  long long degree;
  Rational c0;
  Rational c1;
};

// Compact case: each intersection point contributes weight c0 - c1.
EquivariantTable classical_table(const std::vector<ClassicalPoint>& points, long long n);

}  // namespace qfloer
