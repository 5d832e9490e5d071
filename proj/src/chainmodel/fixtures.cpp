#include "qfloer/chain/fixtures.hpp"

#include "qfloer/errors.hpp"

namespace qfloer {

void define_all(ChainModel& m) {
  for (OpKind k : all_op_kinds()) {
    for (const auto& objs : m.object_tuples(object_count(k))) {
      bool spaces_ok = true;
      try {
        (void)m.blank(k, objs);
      } catch (const MissingTensor&) {
        spaces_ok = false;
      }
      if (spaces_ok) m.define(k, objs);
    }
  }
}

ChainModel truncated_polynomial_model(long long n, long long k, bool acyclic_pair) {
  if (n < 1 || k < 1 || n % k != 0) throw DivisibilityError("truncated polynomial model needs k | n");
  if (k > 1 && (n / k) % 2 != 0) throw DegreeError("truncated polynomial model needs k = 1 or n/k even");
  const long long step = n / k;

  ChainModel m;
  m.n = n;
  m.closed = GradedSpace({{"y", -1}, {"e", 0}, {"b", 1}});
  m.lagrangians = {"V"};
  std::vector<BasisElement> basis;
  for (long long i = 0; i <= k; ++i) {
    std::string label;
    if (k == 1) {
      label = i == 0 ? "e" : "f";
    } else {
      label = i == 0 ? "1" : (i == 1 ? "h" : "h" + std::to_string(i));
    }
    basis.push_back({label, i * step});
  }
  if (acyclic_pair) {
    basis.push_back({"p", n});
    basis.push_back({"q", n + 1});
  }
  const GradedSpace cf(basis);
  m.spaces[{"V", "V"}] = cf;
  define_all(m);

  const Objects v{"V"}, vv{"V", "V"}, vvv{"V", "V", "V"};
  const std::size_t top = static_cast<std::size_t>(k);
  const std::size_t ye = 0, ee = 1, bb = 2;

  m.op(OpKind::delta, {}).add({bb}, ee, 1);
  m.e = m.closed.basis_vector(ee);
  m.b = m.closed.basis_vector(bb);
  m.beta = m.closed.zero();
  (void)ye;

  MultiOp& mu2 = m.op(OpKind::mu2, vvv);
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; i + j <= top; ++j) mu2.add({i, j}, i + j, 1);

  m.op(OpKind::phi0, v).add({ee}, 0, 1);
  m.op(OpKind::phi0_dual, v).add({ee, top}, 0, 1);
  MultiOp& phi1 = m.op(OpKind::phi1, vv);
  for (std::size_t i = 1; i <= top; ++i) phi1.add({bb, i}, i, Rational(static_cast<long long>(i), k));
  m.op(OpKind::unit_dual, v).add({top}, 0, 1);

  if (acyclic_pair) {
    const std::size_t p = top + 1, q = top + 2;
    m.op(OpKind::mu1, vv).add({p}, q, 1);
    for (std::size_t x : {p, q}) {
      mu2.add({0, x}, x, 1);
      mu2.add({x, 0}, x, 1);
      phi1.add({bb, x}, x, Rational(1, 2));
    }
  }

  m.unit["V"] = cf.basis_vector(0);
  m.c["V"] = cf.zero();
  return m;
}

ChainModel sphere_model(long long n, bool acyclic_pair) { return truncated_polynomial_model(n, 1, acyclic_pair); }

}  // namespace qfloer
