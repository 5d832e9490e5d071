#pragma once

#include "qfloer/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qfloer {

struct BasisElement {
  std::string label;
  long long degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

// Finite-dimensional graded vector space with a labelled basis. Basis ids
// are positions in the basis list.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisElement> basis);

  // Labels are prefix + degree + "_" + index, in ascending degree.
  static GradedSpace from_dims(const std::map<long long, std::size_t>& dims, const std::string& prefix = "x");
  // The ground field, one basis element "1" in degree 0.
  static GradedSpace ground();

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  long long degree(std::size_t i) const { return basis_.at(i).degree; }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }

  std::optional<std::size_t> find(const std::string& label) const;
  // Throws SchemaError for unknown labels.
  std::size_t index(const std::string& label) const;

  std::map<long long, std::size_t> dims() const;
  std::vector<std::size_t> indices_of_degree(long long d) const;

  RationalVector zero() const { return RationalVector(dim()); }
  RationalVector basis_vector(std::size_t i) const;

  // Degree of a nonzero homogeneous vector; nullopt for zero vectors.
  // Throws DegreeError for inhomogeneous vectors.
  std::optional<long long> degree_of(const RationalVector& v) const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<BasisElement> basis_;
};

// y += a * x
void axpy(RationalVector& y, const Rational& a, const RationalVector& x);
RationalVector scaled(const Rational& a, RationalVector x);
RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a, const RationalVector& b);

}  // namespace qfloer
