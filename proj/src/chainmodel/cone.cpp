#include "qfloer/chain/cone.hpp"

#include "qfloer/chain/equivariant.hpp"
#include "qfloer/errors.hpp"

namespace qfloer {

namespace {

Rational sign(long long p) { return (p % 2 == 0) ? Rational(1) : Rational(-1); }

RationalMatrix mul_matrix_left(const MultiOp& op, const RationalVector& fixed) {
  return op.partial_matrix(1, {fixed, {}});
}

}  // namespace

std::pair<RationalVector, RationalMatrix> ConeComplex::split(const RationalVector& x) const {
  if (x.size() != space.dim()) throw SizeMismatch("cone element has the wrong length");
  RationalVector a(x.begin(), x.begin() + static_cast<long>(cf.dim()));
  RationalMatrix alpha(target.dim(), source.dim());
  for (std::size_t w = 0; w < target.dim(); ++w)
    for (std::size_t v = 0; v < source.dim(); ++v) alpha(w, v) = x[hom_index(w, v)];
  return {a, alpha};
}

RationalVector ConeComplex::join(const RationalVector& a, const RationalMatrix& alpha) const {
  RationalVector x(space.dim());
  for (std::size_t i = 0; i < cf.dim(); ++i) x[i] = a[i];
  for (std::size_t w = 0; w < target.dim(); ++w)
    for (std::size_t v = 0; v < source.dim(); ++v) x[hom_index(w, v)] = alpha(w, v);
  return x;
}

ConeComplex build_cone(const ChainModel& m, const std::string& v, const Objects& pair) {
  if (pair.size() != 2) throw SchemaError("build_cone needs two objects");
  const std::string &l0 = pair[0], &l1 = pair[1];
  ConeComplex t;
  t.v = v;
  t.pair = pair;
  t.cf = m.cf(l0, l1);
  t.source = m.cf(v, l0);
  t.target = m.cf(v, l1);
  std::vector<BasisElement> basis = t.cf.basis();
  for (std::size_t w = 0; w < t.target.dim(); ++w)
    for (std::size_t s = 0; s < t.source.dim(); ++s)
      basis.push_back({"[" + t.target.label(w) + "|" + t.source.label(s) + "]",
                       t.target.degree(w) - t.source.degree(s) + 1});
  t.space = GradedSpace(basis);

  const RationalMatrix d = m.op(OpKind::mu1, pair).matrix();
  const RationalMatrix ds = m.op(OpKind::mu1, {v, l0}).matrix();
  const RationalMatrix dt = m.op(OpKind::mu1, {v, l1}).matrix();
  const MultiOp& mu2 = m.op(OpKind::mu2, {v, l0, l1});
  t.differential = RationalMatrix(t.space.dim(), t.space.dim());
  for (std::size_t i = 0; i < t.cf.dim(); ++i) {
    RationalVector a = t.cf.basis_vector(i);
    RationalVector col = t.join(d.apply(a), mul_matrix_left(mu2, a));
    for (std::size_t r = 0; r < col.size(); ++r) t.differential(r, i) = col[r];
  }
  for (std::size_t w = 0; w < t.target.dim(); ++w) {
    for (std::size_t s = 0; s < t.source.dim(); ++s) {
      RationalMatrix e(t.target.dim(), t.source.dim());
      e(w, s) = 1;
      const long long natural = t.target.degree(w) - t.source.degree(s);
      // -mu1(alpha(v)) + (-1)^|alpha| alpha(mu1(v))
      RationalMatrix hom = RationalMatrix(t.target.dim(), t.source.dim()) - dt * e;
      hom = natural % 2 == 0 ? hom + e * ds : hom - e * ds;
      RationalVector col = t.join(t.cf.zero(), hom);
      const std::size_t c = t.hom_index(w, s);
      for (std::size_t r = 0; r < col.size(); ++r) t.differential(r, c) = col[r];
    }
  }
  if (!(t.differential * t.differential).is_zero()) {
    throw IdentityError("mu1_T does not square to zero on T(" + l0 + "," + l1 + ") relative to " + v);
  }
  return t;
}

RationalVector cone_mu2(const ChainModel& m, const std::string& v, Side side, const Objects& triple,
                        const RationalVector& lhs, const RationalVector& rhs) {
  if (triple.size() != 3) throw SchemaError("cone_mu2 needs three objects");
  const std::string &l0 = triple[0], &l1 = triple[1], &l2 = triple[2];
  const GradedSpace& sv0 = m.cf(v, l0);
  const MultiOp& mu2 = m.op(OpKind::mu2, {l0, l1, l2});
  const MultiOp& mu3 = m.op(OpKind::mu3, {v, l0, l1, l2});
  ConeComplex out;
  out.cf = m.cf(l0, l2);
  out.source = sv0;
  out.target = m.cf(v, l2);
  out.space = GradedSpace::from_dims({});
  auto assemble = [&](const RationalVector& a, const RationalMatrix& alpha) {
    RationalVector x(out.cf.dim() + out.target.dim() * out.source.dim());
    for (std::size_t i = 0; i < out.cf.dim(); ++i) x[i] = a[i];
    for (std::size_t w = 0; w < out.target.dim(); ++w)
      for (std::size_t s = 0; s < out.source.dim(); ++s) x[out.hom_index(w, s)] = alpha(w, s);
    return x;
  };
  // mu3(a2, a1, .) as a map CF(V, L0) -> CF(V, L2).
  auto mu3_matrix = [&](const RationalVector& a2, const RationalVector& a1) {
    return mu3.partial_matrix(2, {a2, a1, {}});
  };

  if (side == Side::left) {
    const GradedSpace& s12 = m.cf(l1, l2);
    ConeComplex in;
    in.cf = m.cf(l0, l1);
    in.source = sv0;
    in.target = m.cf(v, l1);
    if (lhs.size() != s12.dim()) throw SizeMismatch("cone_mu2: left argument has the wrong length");
    if (rhs.size() != in.cf.dim() + in.target.dim() * in.source.dim()) {
      throw SizeMismatch("cone_mu2: cone argument has the wrong length");
    }
    RationalVector a1(rhs.begin(), rhs.begin() + static_cast<long>(in.cf.dim()));
    RationalMatrix alpha1(in.target.dim(), in.source.dim());
    for (std::size_t w = 0; w < in.target.dim(); ++w)
      for (std::size_t s = 0; s < in.source.dim(); ++s) alpha1(w, s) = rhs[in.hom_index(w, s)];
    const MultiOp& left = m.op(OpKind::mu2, {v, l1, l2});
    RationalVector a = out.cf.zero();
    RationalMatrix hom(out.target.dim(), out.source.dim());
    for (std::size_t i = 0; i < s12.dim(); ++i) {
      if (lhs[i].is_zero()) continue;
      RationalVector a2 = scaled(lhs[i], s12.basis_vector(i));
      a = a + mu2({a2, a1});
      RationalMatrix first = left.partial_matrix(1, {a2, {}}) * alpha1;
      hom = s12.degree(i) % 2 == 0 ? hom + first : hom - first;
      hom = hom - mu3_matrix(a2, a1);
    }
    return assemble(a, hom);
  }

  const GradedSpace& s01 = m.cf(l0, l1);
  ConeComplex in;
  in.cf = m.cf(l1, l2);
  in.source = m.cf(v, l1);
  in.target = m.cf(v, l2);
  if (rhs.size() != s01.dim()) throw SizeMismatch("cone_mu2: right argument has the wrong length");
  if (lhs.size() != in.cf.dim() + in.target.dim() * in.source.dim()) {
    throw SizeMismatch("cone_mu2: cone argument has the wrong length");
  }
  RationalVector a2(lhs.begin(), lhs.begin() + static_cast<long>(in.cf.dim()));
  RationalMatrix alpha2(in.target.dim(), in.source.dim());
  for (std::size_t w = 0; w < in.target.dim(); ++w)
    for (std::size_t s = 0; s < in.source.dim(); ++s) alpha2(w, s) = lhs[in.hom_index(w, s)];
  const MultiOp& inner = m.op(OpKind::mu2, {v, l0, l1});
  RationalMatrix hom = alpha2 * inner.partial_matrix(1, {rhs, {}}) - mu3_matrix(a2, rhs);
  return assemble(mu2({a2, rhs}), hom);
}

Report check_cone_mu2(const ChainModel& m, const std::string& v, const Objects& triple) {
  if (triple.size() != 3) throw SchemaError("check_cone_mu2 needs three objects");
  const std::string &l0 = triple[0], &l1 = triple[1], &l2 = triple[2];
  Report r{"cone_mu2", triple};
  const ConeComplex t01 = build_cone(m, v, {l0, l1});
  const ConeComplex t12 = build_cone(m, v, {l1, l2});
  const ConeComplex t02 = build_cone(m, v, {l0, l2});
  const GradedSpace& s12 = m.cf(l1, l2);
  const GradedSpace& s01 = m.cf(l0, l1);
  const MultiOp& d12 = m.op(OpKind::mu1, {l1, l2});
  const MultiOp& d01 = m.op(OpKind::mu1, {l0, l1});
  for (std::size_t i = 0; i < s12.dim(); ++i) {
    RationalVector a2 = s12.basis_vector(i);
    for (std::size_t j = 0; j < t01.space.dim(); ++j) {
      RationalVector x = t01.space.basis_vector(j);
      RationalVector res = t02.differential.apply(cone_mu2(m, v, Side::left, triple, a2, x)) -
                           cone_mu2(m, v, Side::left, triple, d12({a2}), x) -
                           scaled(sign(s12.degree(i)),
                                  cone_mu2(m, v, Side::left, triple, a2, t01.differential.apply(x)));
      if (!is_zero(res)) r.fail({"left", s12.label(i), t01.space.label(j)}, t02.space, res);
    }
  }
  for (std::size_t j = 0; j < t12.space.dim(); ++j) {
    RationalVector x = t12.space.basis_vector(j);
    for (std::size_t i = 0; i < s01.dim(); ++i) {
      RationalVector a1 = s01.basis_vector(i);
      RationalVector res = t02.differential.apply(cone_mu2(m, v, Side::right, triple, x, a1)) -
                           cone_mu2(m, v, Side::right, triple, t12.differential.apply(x), a1) -
                           scaled(sign(t12.space.degree(j)), cone_mu2(m, v, Side::right, triple, x, d01({a1})));
      if (!is_zero(res)) r.fail({"right", t12.space.label(j), s01.label(i)}, t02.space, res);
    }
  }
  return r;
}

MultiOp build_tilde_phi1T(const ChainModel& m, const std::string& v, const Objects& pair) {
  if (pair.size() != 2) throw SchemaError("build_tilde_phi1T needs two objects");
  const std::string &l0 = pair[0], &l1 = pair[1];
  const RationalVector& cv = m.c_of(v);
  if (!is_zero(cv)) throw NotEquivariant("the cone construction assumes c_" + v + " = 0");
  if (!is_zero(m.op(OpKind::phi0, {v})({m.b}))) throw NotEquivariant("the cone construction assumes phi0_" + v + "(b) = 0");
  require_equivariant(m, l0);
  require_equivariant(m, l1);
  const ConeComplex t = build_cone(m, v, pair);
  const MultiOp& phi1 = m.op(OpKind::phi1, pair);
  const RationalMatrix p1 = m.op(OpKind::phi1, {v, l1}).partial_matrix(1, {m.b, {}});
  const RationalMatrix p0 = m.op(OpKind::phi1, {v, l0}).partial_matrix(1, {m.b, {}});
  const MultiOp& phi2 = m.op(OpKind::phi2, {v, l0, l1});
  const RationalVector& c0 = m.c_of(l0);
  const RationalVector& c1 = m.c_of(l1);

  MultiOp out("tilde_phi1_T", {t.space}, t.space, 0);
  for (std::size_t j = 0; j < t.space.dim(); ++j) {
    const RationalVector x = t.space.basis_vector(j);
    auto [a, alpha] = t.split(x);
    RationalMatrix hom = p1 * alpha - alpha * p0 - phi2.partial_matrix(2, {m.b, a, {}});
    RationalVector phi1T = t.join(phi1({m.b, a}), hom);
    RationalVector value = phi1T - cone_mu2(m, v, Side::left, {l0, l1, l1}, c1, x) +
                           cone_mu2(m, v, Side::right, {l0, l0, l1}, x, c0);
    if (!is_zero(value)) out.set({j}, value);
  }
  const RationalMatrix f = out.matrix();
  if (!(t.differential * f - f * t.differential).is_zero()) {
    throw IdentityError("tilde phi1_T does not commute with mu1_T");
  }
  return out;
}

EquivariantTable cone_table(const ChainModel& m, const std::string& v, const Objects& pair) {
  const ConeComplex t = build_cone(m, v, pair);
  const MultiOp phi = build_tilde_phi1T(m, v, pair);
  Cohomology h(t.space, t.differential);
  return table_from_endomorphism(degree_blocks(h.space(), h.induced(phi.matrix())), m.n);
}

EquivariantTable hom_table(const ChainModel& m, const std::string& v, const Objects& pair) {
  const FloerCohomology h0 = cohomology(m, {v, pair[0]});
  const FloerCohomology h1 = cohomology(m, {v, pair[1]});
  const GradedSpace& s0 = h0.h.space();
  const GradedSpace& s1 = h1.h.space();
  std::vector<BasisElement> basis;
  for (std::size_t w = 0; w < s1.dim(); ++w)
    for (std::size_t s = 0; s < s0.dim(); ++s)
      basis.push_back({s1.label(w) + "|" + s0.label(s), s1.degree(w) - s0.degree(s)});
  const GradedSpace hom(basis);
  RationalMatrix endo(hom.dim(), hom.dim());
  // (Phi1 E - E Phi0) for E = E_{w,s}.
  for (std::size_t w = 0; w < s1.dim(); ++w)
    for (std::size_t s = 0; s < s0.dim(); ++s) {
      const std::size_t col = w * s0.dim() + s;
      for (std::size_t w2 = 0; w2 < s1.dim(); ++w2) endo(w2 * s0.dim() + s, col) += h1.endomorphism(w2, w);
      for (std::size_t s2 = 0; s2 < s0.dim(); ++s2) endo(w * s0.dim() + s2, col) -= h0.endomorphism(s, s2);
    }
  return table_from_endomorphism(degree_blocks(hom, endo), m.n);
}

}  // namespace qfloer
