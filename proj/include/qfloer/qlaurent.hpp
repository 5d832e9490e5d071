#pragma once

#include "qfloer/rational.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace qfloer {

// Element of the group ring Q[q^Q]: a finite Q-linear combination of
// monomials q^a with rational exponents a. Zero coefficients are never
// stored, and terms are ordered by ascending exponent.
class QLaurent {
 public:
  using Terms = std::map<Rational, Rational>;  // exponent -> coefficient

  QLaurent() = default;
  QLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QLaurent(int constant) : QLaurent(Rational(constant)) {}  // NOLINT

  static QLaurent monomial(const Rational& coefficient, const Rational& exponent);
  static QLaurent q(const Rational& exponent = 1) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Rational& exponent) const;

  // q -> q^{-1}.
  QLaurent invert_variable() const;
  // Sum of coefficients, i.e. the value at q = 1.
  Rational eval_at_one() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent operator-() const;

  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  // Human-readable form, e.g. "1 - q^(1/3) + q^(1/1)".
  std::string str() const;

 private:
  void add_term(const Rational& exponent, const Rational& coefficient);

  Terms terms_;
};

enum class ArithOp { add, sub, mul };

QLaurent qlaurent_arith(const QLaurent& a, const QLaurent& b, ArithOp op);

std::ostream& operator<<(std::ostream& os, const QLaurent& p);

}  // namespace qfloer
