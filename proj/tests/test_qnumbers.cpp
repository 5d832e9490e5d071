#include "qfloer/equivariant_table.hpp"
#include "qfloer/errors.hpp"
#include "support/random.hpp"

#include <gtest/gtest.h>

using namespace qfloer;
using qfloer::testkit::Rng;

namespace {

QLaurent qm(int c, int en, int ed = 1) { return QLaurent::monomial(c, Rational(en, ed)); }

// Expanded sum over an explicit list of basis weights, one per dimension.
QLaurent expanded_supertrace(const EquivariantTable& t) {
  QLaurent out;
  for (const auto& [key, dim] : t.entries()) {
    for (std::size_t i = 0; i < dim; ++i) {
      QLaurent term = QLaurent::q(key.second);
      out += (key.first % 2 == 0) ? term : -term;
    }
  }
  return out;
}

EquivariantTable random_table(Rng& rng) {
  std::uniform_int_distribution<int> n(1, 6), count(0, 5), deg(-3, 8), dim(1, 3);
  EquivariantTable t(n(rng));
  int k = count(rng);
  for (int i = 0; i < k; ++i) t.add(deg(rng), testkit::random_rational(rng, 4, 3), dim(rng));
  return t;
}

// f(q) -> (-1)^n q f(1/q)
QLaurent dual_transform(const QLaurent& f, long long n) {
  QLaurent g = QLaurent::q() * f.invert_variable();
  return n % 2 == 0 ? g : -g;
}

}  // namespace

TEST(QIntersection, CotangentCP2) {
  EquivariantTable t(4, {{0, Rational(0), 1}, {2, Rational(1, 2), 1}, {4, Rational(1), 1}});
  EXPECT_EQ(q_intersection(t), QLaurent(1) + QLaurent::q(Rational(1, 2)) + QLaurent::q());
}

TEST(QIntersection, EmptyAndSphere) {
  EXPECT_TRUE(q_intersection(EquivariantTable(3)).is_zero());
  EquivariantTable s(3, {{0, Rational(0), 1}, {3, Rational(1), 1}});
  EXPECT_EQ(q_intersection(s), QLaurent(1) - QLaurent::q());
}

TEST(QIntersection, MatchesExpandedOracle) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    EquivariantTable t = random_table(rng);
    EXPECT_EQ(q_intersection(t), expanded_supertrace(t));
  }
}

TEST(SingleGenerator, Examples) {
  EXPECT_EQ(q_intersection(single_generator_table(3, 3)),
            QLaurent(1) - QLaurent::q(Rational(1, 3)) + QLaurent::q(Rational(2, 3)) - QLaurent::q());
  EXPECT_EQ(single_generator_table(3, 1), EquivariantTable(3, {{0, Rational(0), 1}, {3, Rational(1), 1}}));
  EXPECT_EQ(q_intersection(single_generator_table(4, 2)),
            QLaurent(1) + QLaurent::q(Rational(1, 2)) + QLaurent::q());
  EXPECT_THROW(single_generator_table(3, 2), DivisibilityError);
  EXPECT_THROW(single_generator_table(3, 0), DivisibilityError);
}

TEST(SingleGenerator, SumFormula) {
  for (long long n = 1; n <= 8; ++n) {
    for (long long k = 1; k <= n; ++k) {
      if (n % k) continue;
      QLaurent expect;
      for (long long i = 0; i <= k; ++i) expect += qm((n * i / k) % 2 ? -1 : 1, i, k);
      EXPECT_EQ(q_intersection(single_generator_table(n, k)), expect) << n << " " << k;
    }
  }
}

TEST(Shift, Examples) {
  EquivariantTable t(3, {{0, Rational(0), 1}});
  EXPECT_EQ(apply_shift(t, {}, {}), t);
  EquivariantTable g = apply_shift(t, {}, {1, Rational(0)});
  EXPECT_EQ(g, EquivariantTable(3, {{1, Rational(0), 1}}));
  EXPECT_EQ(q_intersection(g), -q_intersection(t));
  EquivariantTable e = apply_shift(t, {}, {0, Rational(1)});
  EXPECT_EQ(e, EquivariantTable(3, {{0, Rational(1), 1}}));
  EXPECT_EQ(q_intersection(e), QLaurent::q() * q_intersection(t));
}

TEST(Shift, SupertraceTransformProperty) {
  Rng rng(12);
  std::uniform_int_distribution<int> r(-4, 4);
  for (int i = 0; i < 200; ++i) {
    EquivariantTable t = random_table(rng);
    ShiftSpec l{r(rng), testkit::random_rational(rng, 3, 3)};
    ShiftSpec rt{r(rng), testkit::random_rational(rng, 3, 3)};
    QLaurent factor = QLaurent::monomial(sign_power(rt.r - l.r), rt.s - l.s);
    EXPECT_EQ(q_intersection(apply_shift(t, l, rt)), factor * q_intersection(t));
  }
}

TEST(PoincareDual, Examples) {
  EXPECT_EQ(poincare_dual(EquivariantTable(3, {{1, Rational(1, 3), 1}})),
            EquivariantTable(3, {{2, Rational(2, 3), 1}}));
  EquivariantTable mid(4, {{2, Rational(1, 2), 1}});
  EXPECT_EQ(poincare_dual(mid), mid);
  EquivariantTable s = single_generator_table(3, 1);
  EXPECT_EQ(poincare_dual(s), s);
}

TEST(PoincareDual, DualityAndInvolution) {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    EquivariantTable t = random_table(rng);
    EXPECT_EQ(poincare_dual(poincare_dual(t)), t);
    EXPECT_EQ(q_intersection(poincare_dual(t)), dual_transform(q_intersection(t), t.n()));
  }
}

TEST(EulerCharacteristic, EvalAtOne) {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    EquivariantTable t = random_table(rng);
    long long chi = 0;
    for (const auto& [key, dim] : t.entries()) chi += sign_power(key.first) * static_cast<long long>(dim);
    EXPECT_EQ(q_intersection(t).eval_at_one(), Rational(chi));
  }
}

TEST(FromEndomorphism, Examples) {
  std::map<long long, RationalMatrix> sphere{{0, RationalMatrix::from_rows({{0}})},
                                             {3, RationalMatrix::from_rows({{1}})}};
  EXPECT_EQ(table_from_endomorphism(sphere, 3), single_generator_table(3, 1));
  std::map<long long, RationalMatrix> jordan{
      {1, RationalMatrix::from_rows({{Rational(1, 3), 1}, {0, Rational(1, 3)}})}};
  EXPECT_EQ(table_from_endomorphism(jordan, 3), EquivariantTable(3, {{1, Rational(1, 3), 2}}));
  EXPECT_TRUE(table_from_endomorphism({}, 3).empty());
  std::map<long long, RationalMatrix> rot{{0, RationalMatrix::from_rows({{0, -1}, {1, 0}})}};
  EXPECT_THROW(table_from_endomorphism(rot, 2), SplittingError);
}

TEST(FromEndomorphism, ConjugatedDiagonalOracle) {
  Rng rng(15);
  std::uniform_int_distribution<int> size(1, 4), deg(-2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::map<long long, RationalMatrix> per_degree;
    EquivariantTable expect(4);
    for (int b = 0; b < 3; ++b) {
      long long d = deg(rng);
      if (per_degree.count(d)) continue;
      std::size_t n = size(rng);
      RationalMatrix diag(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        diag(i, i) = testkit::random_rational(rng, 2, 3);
        expect.add(d, diag(i, i));
      }
      RationalMatrix p = testkit::random_invertible(rng, n);
      per_degree[d] = p * diag * *inverse(p);
    }
    EXPECT_EQ(table_from_endomorphism(per_degree, 4), expect);
  }
}

TEST(Classical, Examples) {
  EXPECT_EQ(classical_table({{0, 0, 0}}, 2), EquivariantTable(2, {{0, Rational(0), 1}}));
  EquivariantTable pair = classical_table({{0, Rational(1, 2), 0}, {1, Rational(1, 2), 0}}, 2);
  EXPECT_EQ(pair, EquivariantTable(2, {{0, Rational(1, 2), 1}, {1, Rational(1, 2), 1}}));
  EXPECT_TRUE(q_intersection(pair).is_zero());
  EXPECT_EQ(classical_table({{2, 1, Rational(1, 3)}}, 3), EquivariantTable(3, {{2, Rational(2, 3), 1}}));
  EXPECT_EQ(classical_table({{1, 0, 0}, {1, 0, 0}}, 3), EquivariantTable(3, {{1, Rational(0), 2}}));
}
