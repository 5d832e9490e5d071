#include "qfloer/equivariant_table.hpp"

#include "qfloer/eigen.hpp"
#include "qfloer/errors.hpp"

#include <string>
#include <tuple>

namespace qfloer {

EquivariantTable::EquivariantTable(long long n,
                                   const std::vector<std::tuple<long long, Rational, std::size_t>>& entries)
    : n_(n) {
  for (const auto& [d, w, dim] : entries) add(d, w, dim);
}

void EquivariantTable::add(long long degree, const Rational& weight, std::size_t dim) {
  if (dim == 0) return;
  entries_[{degree, weight}] += dim;
}

std::size_t EquivariantTable::dim(long long degree, const Rational& weight) const {
  auto it = entries_.find({degree, weight});
  return it == entries_.end() ? 0 : it->second;
}

QLaurent q_intersection(const EquivariantTable& t) {
  QLaurent out;
  for (const auto& [key, dim] : t.entries()) {
    long long coeff = sign_power(key.first) * static_cast<long long>(dim);
    out += QLaurent::monomial(coeff, key.second);
  }
  return out;
}

EquivariantTable single_generator_table(long long n, long long k) {
  if (k <= 0 || n % k != 0) {
    throw DivisibilityError("single generator table needs k > 0 dividing n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
  EquivariantTable t(n);
  for (long long i = 0; i <= k; ++i) t.add(n / k * i, Rational(i, k));
  return t;
}

EquivariantTable apply_shift(const EquivariantTable& t, const ShiftSpec& left, const ShiftSpec& right) {
  EquivariantTable out(t.n());
  const long long dr = right.r - left.r;
  const Rational ds = right.s - left.s;
  for (const auto& [key, dim] : t.entries()) out.add(key.first + dr, key.second + ds, dim);
  return out;
}

EquivariantTable poincare_dual(const EquivariantTable& t) {
  EquivariantTable out(t.n());
  for (const auto& [key, dim] : t.entries()) out.add(t.n() - key.first, Rational(1) - key.second, dim);
  return out;
}

EquivariantTable table_from_endomorphism(const std::map<long long, RationalMatrix>& per_degree, long long n) {
  EquivariantTable out(n);
  for (const auto& [degree, m] : per_degree) {
    for (const auto& block : generalized_eigenspaces(m).blocks) {
      out.add(degree, block.eigenvalue, block.multiplicity);
    }
  }
  return out;
}

EquivariantTable classical_table(const std::vector<ClassicalPoint>& points, long long n) {
  EquivariantTable out(n);
  for (const auto& p : points) out.add(p.degree, p.c0 - p.c1);
  return out;
}

}  // namespace qfloer
