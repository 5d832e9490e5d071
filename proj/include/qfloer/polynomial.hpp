#pragma once

#include "qfloer/linalg.hpp"
#include "qfloer/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qfloer {

// Dense univariate polynomial over Q, coefficients stored low degree first
// with no trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational evaluate(const Rational& x) const;

  // Quotient by (x - root); requires root to be a root.
  RationalPolynomial deflate(const Rational& root) const;

  std::string str() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// det(x I - m), computed with the division-free Berkowitz recurrence.
RationalPolynomial characteristic_polynomial(const RationalMatrix& m);

struct RootSplit {
  std::vector<std::pair<Rational, std::size_t>> roots;  // ascending, with multiplicity
  RationalPolynomial cofactor;                           // part without rational roots
};

// Rational roots via the rational-root theorem on the integer-cleared
// polynomial.
RootSplit rational_roots(const RationalPolynomial& p);

// Prime factorisation of |n| (n != 0) as (prime, exponent) pairs, ascending.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

}  // namespace qfloer
