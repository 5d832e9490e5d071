#include "qfloer/chain/graded_space.hpp"

#include "qfloer/errors.hpp"

#include <set>

namespace qfloer {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (!seen.insert(b.label).second) throw SchemaError("duplicate basis label '" + b.label + "'");
  }
}

GradedSpace GradedSpace::from_dims(const std::map<long long, std::size_t>& dims, const std::string& prefix) {
  std::vector<BasisElement> basis;
  for (const auto& [d, k] : dims) {
    for (std::size_t i = 0; i < k; ++i) {
      basis.push_back({prefix + std::to_string(d) + "_" + std::to_string(i), d});
    }
  }
  return GradedSpace(std::move(basis));
}

GradedSpace GradedSpace::ground() { return GradedSpace({{"1", 0}}); }

std::optional<std::size_t> GradedSpace::find(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t GradedSpace::index(const std::string& label) const {
  auto i = find(label);
  if (!i) throw SchemaError("unknown basis label '" + label + "'");
  return *i;
}

std::map<long long, std::size_t> GradedSpace::dims() const {
  std::map<long long, std::size_t> out;
  for (const auto& b : basis_) ++out[b.degree];
  return out;
}

std::vector<std::size_t> GradedSpace::indices_of_degree(long long d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree == d) out.push_back(i);
  }
  return out;
}

RationalVector GradedSpace::basis_vector(std::size_t i) const {
  RationalVector v(dim());
  v.at(i) = 1;
  return v;
}

std::optional<long long> GradedSpace::degree_of(const RationalVector& v) const {
  if (v.size() != dim()) throw SizeMismatch("vector length does not match graded space");
  std::optional<long long> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (d && *d != basis_[i].degree) throw DegreeError("vector is not homogeneous");
    d = basis_[i].degree;
  }
  return d;
}

void axpy(RationalVector& y, const Rational& a, const RationalVector& x) {
  if (y.size() != x.size()) throw SizeMismatch("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

RationalVector scaled(const Rational& a, RationalVector x) {
  for (auto& c : x) c *= a;
  return x;
}

RationalVector operator+(RationalVector a, const RationalVector& b) {
  axpy(a, 1, b);
  return a;
}

RationalVector operator-(RationalVector a, const RationalVector& b) {
  axpy(a, -1, b);
  return a;
}

}  // namespace qfloer
