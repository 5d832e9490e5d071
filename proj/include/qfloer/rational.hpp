#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qfloer {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always stored in lowest terms with a positive
// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : num_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(long v) : num_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long long v) : num_(v) {}           // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : num_(v) {}       // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  // Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational abs() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "n" for integers, "n/d" otherwise.
  std::string str() const;
  // Always "n/d", also for integers.
  std::string fraction_str() const;

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// (-1)^k for any integer k.
inline int sign_power(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace qfloer
