#pragma once

#include "qfloer/linalg.hpp"
#include "qfloer/qlaurent.hpp"

#include <random>

namespace qfloer::testkit {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline QLaurent random_qlaurent(Rng& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> en(-6, 6);
  std::uniform_int_distribution<int> ed(1, 3);
  QLaurent p;
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    p += QLaurent::monomial(random_rational(rng), Rational(en(rng), ed(rng)));
  }
  return p;
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int span = 3) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, span, 2);
  return m;
}

// Unit lower times unit upper triangular: always invertible.
inline RationalMatrix random_invertible(Rng& rng, std::size_t n) {
  RationalMatrix l = RationalMatrix::identity(n), u = RationalMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) l(r, c) = random_rational(rng, 3, 2);
      if (r < c) u(r, c) = random_rational(rng, 3, 2);
    }
  }
  return l * u;
}

}  // namespace qfloer::testkit
