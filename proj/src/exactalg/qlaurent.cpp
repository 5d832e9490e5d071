#include "qfloer/qlaurent.hpp"

#include <ostream>

namespace qfloer {

QLaurent::QLaurent(const Rational& constant) {
  if (!constant.is_zero()) {
    terms_.emplace(Rational(0), constant);
  }
}

QLaurent QLaurent::monomial(const Rational& coefficient, const Rational& exponent) {
  QLaurent p;
  if (!coefficient.is_zero()) {
    p.terms_.emplace(exponent, coefficient);
  }
  return p;
}

Rational QLaurent::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QLaurent::add_term(const Rational& exponent, const Rational& coefficient) {
  if (coefficient.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

QLaurent QLaurent::invert_variable() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace_hint(r.terms_.begin(), -e, c);
  }
  return r;
}

Rational QLaurent::eval_at_one() const {
  Rational s;
  for (const auto& [e, c] : terms_) {
    s += c;
  }
  return s;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    add_term(e, c);
  }
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    add_term(e, -c);
  }
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  *this = *this * o;
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.terms_) {
    c = -c;
  }
  return r;
}

std::string QLaurent::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (e.is_zero()) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1)) {
      out += mag.str() + "*";
    }
    out += "q^(" + e.fraction_str() + ")";
  }
  return out;
}

QLaurent qlaurent_arith(const QLaurent& a, const QLaurent& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const QLaurent& p) { return os << p.str(); }

}  // namespace qfloer
