#include "qfloer/polynomial.hpp"

#include "qfloer/errors.hpp"

#include <boost/multiprecision/integer.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace qfloer {

namespace {

constexpr std::size_t kMaxRootCandidates = 2'000'000;

BigInt abs_int(const BigInt& x) { return x.sign() < 0 ? BigInt(-x) : x; }

BigInt pollard_brent(const BigInt& n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x5eed);
  for (unsigned attempt = 0; attempt < 8; ++attempt) {
    BigInt y = BigInt(rng()) % n;
    BigInt c = BigInt(rng()) % (n - 1) + 1;
    BigInt m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    do {
      x = y;
      for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
      BigInt k = 0;
      do {
        ys = y;
        for (BigInt i = 0; i < std::min<BigInt>(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs_int(x - y)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && r < (BigInt(1) << 21));
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = boost::multiprecision::gcd(abs_int(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  throw SplittingError("integer factorisation bound exceeded while searching rational roots");
}

void factor_into(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 32)) {
    primes.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t count = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > kMaxRootCandidates) {
      throw SplittingError("divisor enumeration bound exceeded while searching rational roots");
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::deflate(const Rational& root) const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = carry * root + coeffs_[i];
    q[i - 1] = carry;
  }
  return RationalPolynomial(std::move(q));
}

std::string RationalPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")";
    if (i > 0) out += "*x^" + std::to_string(i);
  }
  return out;
}

RationalPolynomial characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw SizeMismatch("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // Coefficients of det(x I - A_k), highest degree first.
  std::vector<Rational> poly{Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t sub = k - 1;  // size of the leading block A_{k-1}
    const Rational& diag = m(sub, sub);
    // t[0] = 1, t[1] = -a_kk, t[j] = -R A^{j-2} C for j >= 2.
    std::vector<Rational> t(k + 1);
    t[0] = 1;
    t[1] = -diag;
    std::vector<Rational> vec(sub);  // A^{j-2} C
    for (std::size_t i = 0; i < sub; ++i) vec[i] = m(i, sub);
    for (std::size_t j = 2; j <= k; ++j) {
      Rational dot;
      for (std::size_t i = 0; i < sub; ++i) dot += m(sub, i) * vec[i];
      t[j] = -dot;
      if (j < k) {
        std::vector<Rational> next(sub);
        for (std::size_t r = 0; r < sub; ++r) {
          for (std::size_t c = 0; c < sub; ++c) {
            if (!m(r, c).is_zero() && !vec[c].is_zero()) next[r] += m(r, c) * vec[c];
          }
        }
        vec = std::move(next);
      }
    }
    // Lower-triangular Toeplitz product, (k+1) x k times poly (length k).
    std::vector<Rational> next(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j < k && j <= i; ++j) {
        if (!t[i - j].is_zero() && !poly[j].is_zero()) next[i] += t[i - j] * poly[j];
      }
    }
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return RationalPolynomial(std::move(poly));
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
  if (n.is_zero()) throw std::domain_error("factorize(0)");
  BigInt rest = abs_int(n);
  std::vector<BigInt> primes;
  for (unsigned p = 2; p < 10000 && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.emplace_back(p);
      rest /= p;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<BigInt, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

RootSplit rational_roots(const RationalPolynomial& p) {
  RootSplit split;
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");

  RationalPolynomial current = p;
  // Root 0 is read off the trailing coefficients.
  std::size_t zero_mult = 0;
  while (current.degree() > 0 && current.coefficient(0).is_zero()) {
    current = current.deflate(Rational(0));
    ++zero_mult;
  }

  std::set<Rational> roots_found;
  if (current.degree() > 0) {
    // Clear denominators to get the integer polynomial with the same roots.
    BigInt lcm = 1;
    for (const auto& c : current.coefficients()) lcm = boost::multiprecision::lcm(lcm, c.den());
    BigInt lead = current.coefficients().back().num() * (lcm / current.coefficients().back().den());
    BigInt constant = current.coefficients().front().num() * (lcm / current.coefficients().front().den());

    std::vector<BigInt> num_divs = divisors(constant);
    std::vector<BigInt> den_divs = divisors(lead);
    if (num_divs.size() * den_divs.size() > kMaxRootCandidates) {
      throw SplittingError("rational root candidate bound exceeded");
    }
    std::set<Rational> candidates;
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        candidates.insert(Rational(a, b));
        candidates.insert(Rational(-a, b));
      }
    }
    for (const auto& cand : candidates) {
      if (current.degree() <= 0) break;
      if (current.evaluate(cand).is_zero()) roots_found.insert(cand);
    }
  }

  std::vector<std::pair<Rational, std::size_t>> roots;
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  for (const auto& r : roots_found) {
    std::size_t mult = 0;
    while (current.degree() > 0 && current.evaluate(r).is_zero()) {
      current = current.deflate(r);
      ++mult;
    }
    roots.emplace_back(r, mult);
  }
  std::sort(roots.begin(), roots.end());
  split.roots = std::move(roots);
  split.cofactor = std::move(current);
  return split;
}

}  // namespace qfloer
