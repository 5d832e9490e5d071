#include "qfloer/chain/checks.hpp"

#include "qfloer/chain/equivariant.hpp"
#include "qfloer/chain/homotopy.hpp"
#include "qfloer/errors.hpp"

#include <functional>

namespace qfloer {

namespace {

Rational sign(long long p) { return (p % 2 == 0) ? Rational(1) : Rational(-1); }

void need(const Objects& objs, std::size_t k, const char* what) {
  if (objs.size() != k) throw SchemaError(std::string(what) + " needs " + std::to_string(k) + " objects");
}

void need_vector(const RationalVector& v, const GradedSpace& s, const char* what) {
  if (v.empty() && s.dim() > 0) throw MissingTensor(std::string("missing cochain ") + what);
  if (v.size() != s.dim()) throw SchemaError(std::string("cochain ") + what + " has the wrong length");
}

std::string cf_name(const std::string& a, const std::string& b) { return "CF(" + a + "," + b + ")"; }

}  // namespace

Report check_differentials(const ChainModel& m) {
  Report r{"differentials", {}};
  const RationalMatrix d = m.op(OpKind::d, {}).matrix();
  const RationalMatrix dd = d * d;
  for (std::size_t j = 0; j < m.closed.dim(); ++j) {
    RationalVector col = dd.column(j);
    if (!is_zero(col)) r.fail({"d.d", m.closed.label(j)}, m.closed, col);
  }
  for (const auto& [key, space] : m.spaces) {
    const RationalMatrix mu1 = m.op(OpKind::mu1, {key.first, key.second}).matrix();
    const RationalMatrix sq = mu1 * mu1;
    for (std::size_t j = 0; j < space.dim(); ++j) {
      RationalVector col = sq.column(j);
      if (!is_zero(col)) r.fail({"mu1.mu1", cf_name(key.first, key.second), space.label(j)}, space, col);
    }
  }
  return r;
}

Report check_mu2_leibniz(const ChainModel& m, const Objects& o) {
  need(o, 3, "mu2_leibniz");
  Report r{"mu2_leibniz", o};
  const GradedSpace& s21 = m.cf(o[1], o[2]);
  const GradedSpace& s10 = m.cf(o[0], o[1]);
  const GradedSpace& s20 = m.cf(o[0], o[2]);
  const MultiOp& mu2 = m.op(OpKind::mu2, o);
  const MultiOp& d21 = m.op(OpKind::mu1, {o[1], o[2]});
  const MultiOp& d10 = m.op(OpKind::mu1, {o[0], o[1]});
  const MultiOp& d20 = m.op(OpKind::mu1, {o[0], o[2]});
  for (std::size_t i = 0; i < s21.dim(); ++i) {
    RationalVector a2 = s21.basis_vector(i);
    for (std::size_t j = 0; j < s10.dim(); ++j) {
      RationalVector a1 = s10.basis_vector(j);
      RationalVector res = d20({mu2({a2, a1})}) - mu2({d21({a2}), a1}) -
                           scaled(sign(s21.degree(i)), mu2({a2, d10({a1})}));
      if (!is_zero(res)) r.fail({s21.label(i), s10.label(j)}, s20, res);
    }
  }
  return r;
}

Report check_mu3_homotopy(const ChainModel& m, const Objects& o) {
  need(o, 4, "mu3_homotopy");
  Report r{"mu3_homotopy", o};
  const GradedSpace& s3 = m.cf(o[2], o[3]);
  const GradedSpace& s2 = m.cf(o[1], o[2]);
  const GradedSpace& s1 = m.cf(o[0], o[1]);
  const GradedSpace& out = m.cf(o[0], o[3]);
  const MultiOp& mu3 = m.op(OpKind::mu3, o);
  const MultiOp& d3 = m.op(OpKind::mu1, {o[2], o[3]});
  const MultiOp& d2 = m.op(OpKind::mu1, {o[1], o[2]});
  const MultiOp& d1 = m.op(OpKind::mu1, {o[0], o[1]});
  const MultiOp& d0 = m.op(OpKind::mu1, {o[0], o[3]});
  const MultiOp& m012 = m.op(OpKind::mu2, {o[0], o[1], o[2]});
  const MultiOp& m023 = m.op(OpKind::mu2, {o[0], o[2], o[3]});
  const MultiOp& m123 = m.op(OpKind::mu2, {o[1], o[2], o[3]});
  const MultiOp& m013 = m.op(OpKind::mu2, {o[0], o[1], o[3]});
  const bool has_mu3 = !mu3.entries().empty();
  for (std::size_t i = 0; i < s3.dim(); ++i) {
    RationalVector a3 = s3.basis_vector(i);
    const long long g3 = s3.degree(i);
    for (std::size_t j = 0; j < s2.dim(); ++j) {
      RationalVector a2 = s2.basis_vector(j);
      const long long g2 = s2.degree(j);
      for (std::size_t k = 0; k < s1.dim(); ++k) {
        RationalVector a1 = s1.basis_vector(k);
        RationalVector res = m013({m123({a3, a2}), a1}) - m023({a3, m012({a2, a1})});
        if (has_mu3) {
          res = res + d0({mu3({a3, a2, a1})}) + mu3({d3({a3}), a2, a1}) +
                scaled(sign(g3), mu3({a3, d2({a2}), a1})) + scaled(sign(g3 + g2), mu3({a3, a2, d1({a1})}));
        }
        if (!is_zero(res)) r.fail({s3.label(i), s2.label(j), s1.label(k)}, out, res);
      }
    }
  }
  return r;
}

Report check_phi0_chain_map(const ChainModel& m, const Objects& o) {
  need(o, 1, "phi0_chain_map");
  Report r{"phi0_chain_map", o};
  const GradedSpace& s = m.cf(o[0], o[0]);
  const MultiOp& phi0 = m.op(OpKind::phi0, o);
  const MultiOp& mu1 = m.op(OpKind::mu1, {o[0], o[0]});
  const MultiOp& d = m.op(OpKind::d, {});
  for (std::size_t z = 0; z < m.closed.dim(); ++z) {
    RationalVector v = m.closed.basis_vector(z);
    RationalVector res = mu1({phi0({v})}) - phi0({d({v})});
    if (!is_zero(res)) r.fail({m.closed.label(z)}, s, res);
  }
  return r;
}

Report check_phi0_dual_chain_map(const ChainModel& m, const Objects& o) {
  need(o, 1, "phi0_dual_chain_map");
  Report r{"phi0_dual_chain_map", o};
  const GradedSpace& s = m.cf(o[0], o[0]);
  const MultiOp& dual = m.op(OpKind::phi0_dual, o);
  const MultiOp& mu1 = m.op(OpKind::mu1, {o[0], o[0]});
  const MultiOp& d = m.op(OpKind::d, {});
  const GradedSpace k = GradedSpace::ground();
  for (std::size_t z = 0; z < m.closed.dim(); ++z) {
    RationalVector zv = m.closed.basis_vector(z);
    for (std::size_t a = 0; a < s.dim(); ++a) {
      RationalVector av = s.basis_vector(a);
      RationalVector res = dual({d({zv}), av}) + scaled(sign(m.closed.degree(z)), dual({zv, mu1({av})}));
      if (!is_zero(res)) r.fail({m.closed.label(z), s.label(a)}, k, res);
    }
  }
  return r;
}

Report check_phi1_homotopy(const ChainModel& m, const Objects& o) {
  need(o, 2, "phi1_homotopy");
  Report r{"phi1_homotopy", o};
  const std::string &l0 = o[0], &l1 = o[1];
  const GradedSpace& s = m.cf(l0, l1);
  const MultiOp& phi1 = m.op(OpKind::phi1, o);
  const MultiOp& mu1 = m.op(OpKind::mu1, o);
  const MultiOp& d = m.op(OpKind::d, {});
  const MultiOp& p0 = m.op(OpKind::phi0, {l0});
  const MultiOp& p1 = m.op(OpKind::phi0, {l1});
  const MultiOp& left = m.op(OpKind::mu2, {l0, l1, l1});
  const MultiOp& right = m.op(OpKind::mu2, {l0, l0, l1});
  for (std::size_t z = 0; z < m.closed.dim(); ++z) {
    RationalVector zv = m.closed.basis_vector(z);
    const long long gz = m.closed.degree(z);
    for (std::size_t a = 0; a < s.dim(); ++a) {
      RationalVector av = s.basis_vector(a);
      const long long ga = s.degree(a);
      RationalVector lhs = mu1({phi1({zv, av})}) + phi1({d({zv}), av}) + scaled(sign(gz), phi1({zv, mu1({av})}));
      RationalVector rhs = left({p1({zv}), av}) - scaled(sign(ga * gz), right({av, p0({zv})}));
      RationalVector res = lhs - rhs;
      if (!is_zero(res)) r.fail({m.closed.label(z), s.label(a)}, s, res);
    }
  }
  return r;
}

Report check_phi2_homotopy(const ChainModel& m, const Objects& o) {
  need(o, 3, "phi2_homotopy");
  Report r{"phi2_homotopy", o};
  const std::string &l0 = o[0], &l1 = o[1], &l2 = o[2];
  const GradedSpace& s2 = m.cf(l1, l2);
  const GradedSpace& s1 = m.cf(l0, l1);
  const GradedSpace& out = m.cf(l0, l2);
  const MultiOp& phi2 = m.op(OpKind::phi2, o);
  const MultiOp& d = m.op(OpKind::d, {});
  const MultiOp& d2 = m.op(OpKind::mu1, {l1, l2});
  const MultiOp& d1 = m.op(OpKind::mu1, {l0, l1});
  const MultiOp& d0 = m.op(OpKind::mu1, {l0, l2});
  const MultiOp& q0 = m.op(OpKind::phi0, {l0});
  const MultiOp& q1 = m.op(OpKind::phi0, {l1});
  const MultiOp& q2 = m.op(OpKind::phi0, {l2});
  const MultiOp& m3a = m.op(OpKind::mu3, {l0, l1, l2, l2});
  const MultiOp& m3b = m.op(OpKind::mu3, {l0, l1, l1, l2});
  const MultiOp& m3c = m.op(OpKind::mu3, {l0, l0, l1, l2});
  const MultiOp& mu2 = m.op(OpKind::mu2, o);
  const MultiOp& f02 = m.op(OpKind::phi1, {l0, l2});
  const MultiOp& f12 = m.op(OpKind::phi1, {l1, l2});
  const MultiOp& f01 = m.op(OpKind::phi1, {l0, l1});
  for (std::size_t z = 0; z < m.closed.dim(); ++z) {
    RationalVector b = m.closed.basis_vector(z);
    const long long gb = m.closed.degree(z);
    for (std::size_t i = 0; i < s2.dim(); ++i) {
      RationalVector a2 = s2.basis_vector(i);
      const long long g2 = s2.degree(i);
      for (std::size_t j = 0; j < s1.dim(); ++j) {
        RationalVector a1 = s1.basis_vector(j);
        const long long g1 = s1.degree(j);
        RationalVector lhs = d0({phi2({b, a2, a1})}) - phi2({d({b}), a2, a1}) -
                             scaled(sign(gb), phi2({b, d2({a2}), a1})) -
                             scaled(sign(gb + g2), phi2({b, a2, d1({a1})}));
        RationalVector rhs = scaled(Rational(-1), m3a({q2({b}), a2, a1})) +
                             scaled(sign(g2 * gb), m3b({a2, q1({b}), a1})) -
                             scaled(sign((g2 + g1) * gb), m3c({a2, a1, q0({b})})) + f02({b, mu2({a2, a1})}) -
                             mu2({f12({b, a2}), a1}) - scaled(sign((gb + 1) * g2), mu2({a2, f01({b, a1})}));
        RationalVector res = lhs - rhs;
        if (!is_zero(res)) r.fail({m.closed.label(z), s2.label(i), s1.label(j)}, out, res);
      }
    }
  }
  return r;
}

Report check_hvee(const ChainModel& m, const Objects& o) {
  need(o, 2, "hvee");
  Report r{"hvee", o};
  const std::string &l0 = o[0], &l1 = o[1];
  const GradedSpace& s10 = m.cf(l1, l0);
  const GradedSpace& s01 = m.cf(l0, l1);
  const MultiOp& h = m.op(OpKind::hvee, o);
  const MultiOp& d10 = m.op(OpKind::mu1, {l1, l0});
  const MultiOp& d01 = m.op(OpKind::mu1, {l0, l1});
  const MultiOp& e0 = m.op(OpKind::unit_dual, {l0});
  const MultiOp& e1 = m.op(OpKind::unit_dual, {l1});
  const MultiOp& m010 = m.op(OpKind::mu2, {l0, l1, l0});
  const MultiOp& m101 = m.op(OpKind::mu2, {l1, l0, l1});
  const GradedSpace k = GradedSpace::ground();
  for (std::size_t i = 0; i < s10.dim(); ++i) {
    RationalVector a2 = s10.basis_vector(i);
    const long long g2 = s10.degree(i);
    for (std::size_t j = 0; j < s01.dim(); ++j) {
      RationalVector a1 = s01.basis_vector(j);
      const long long g1 = s01.degree(j);
      RationalVector lhs = h({d10({a2}), a1}) + scaled(sign(g2), h({a2, d01({a1})}));
      RationalVector rhs = e0({m010({a2, a1})}) - scaled(sign(g1 * g2), e1({m101({a1, a2})}));
      RationalVector res = lhs - rhs;
      if (!is_zero(res)) r.fail({s10.label(i), s01.label(j)}, k, res);
    }
  }
  return r;
}

Report check_kvee(const ChainModel& m, const Objects& o) {
  need(o, 1, "kvee");
  Report r{"kvee", o};
  const std::string& l = o[0];
  const GradedSpace& s = m.cf(l, l);
  const MultiOp& kv = m.op(OpKind::kvee, o);
  const MultiOp& d = m.op(OpKind::d, {});
  const MultiOp& delta = m.op(OpKind::delta, {});
  const MultiOp& mu1 = m.op(OpKind::mu1, {l, l});
  const MultiOp& ev = m.op(OpKind::unit_dual, o);
  const MultiOp& phi1 = m.op(OpKind::phi1, {l, l});
  const MultiOp& dual = m.op(OpKind::phi0_dual, o);
  const MultiOp& h = m.op(OpKind::hvee, {l, l});
  const MultiOp& phi0 = m.op(OpKind::phi0, o);
  const GradedSpace k = GradedSpace::ground();
  for (std::size_t z = 0; z < m.closed.dim(); ++z) {
    RationalVector b = m.closed.basis_vector(z);
    for (std::size_t a = 0; a < s.dim(); ++a) {
      RationalVector av = s.basis_vector(a);
      RationalVector lhs = kv({d({b}), av}) + scaled(sign(m.closed.degree(z)), kv({b, mu1({av})}));
      RationalVector rhs = ev({phi1({b, av})}) - dual({delta({b}), av}) - h({phi0({b}), av});
      RationalVector res = lhs - rhs;
      if (!is_zero(res)) r.fail({m.closed.label(z), s.label(a)}, k, res);
    }
  }
  return r;
}

Report check_dilation(const ChainModel& m) {
  Report r{"dilation", {}};
  need_vector(m.e, m.closed, "e");
  need_vector(m.b, m.closed, "b");
  need_vector(m.beta, m.closed, "beta");
  const MultiOp& d = m.op(OpKind::d, {});
  const MultiOp& delta = m.op(OpKind::delta, {});
  auto expect_degree = [&](const RationalVector& v, long long deg, const char* name) {
    try {
      auto g = m.closed.degree_of(v);
      if (g && *g != deg) r.fail_detail(std::string(name) + " has degree " + std::to_string(*g));
    } catch (const DegreeError&) {
      r.fail_detail(std::string(name) + " is not homogeneous");
    }
  };
  expect_degree(m.e, 0, "e");
  expect_degree(m.b, 1, "b");
  expect_degree(m.beta, -1, "beta");
  RationalVector db = d({m.b});
  if (!is_zero(db)) r.fail({"d(b)"}, m.closed, db);
  RationalVector res = delta({m.b}) - m.e - d({m.beta});
  if (!is_zero(res)) r.fail({"delta(b) - e - d(beta)"}, m.closed, res);
  return r;
}

Report check_closed_unit(const ChainModel& m) {
  Report r{"closed_unit", {}};
  need_vector(m.e, m.closed, "e");
  const MultiOp& d = m.op(OpKind::d, {});
  const MultiOp& delta = m.op(OpKind::delta, {});
  RationalVector de = d({m.e});
  if (!is_zero(de)) r.fail({"d(e)"}, m.closed, de);
  const RationalMatrix dm = d.matrix();
  const RationalMatrix dl = delta.matrix();
  RationalVector de_bv = dl.apply(m.e);
  if (auto p = primitive(dm, de_bv)) {
    r.add_primitive({"delta(e)"}, m.closed, *p);
  } else {
    r.fail({"delta(e) not exact"}, m.closed, de_bv);
  }
  if (auto h = solve_homotopy(dl * dl, m.closed, dm, m.closed, dm, -3)) {
    for (std::size_t j = 0; j < m.closed.dim(); ++j) {
      RationalVector col = h->column(j);
      if (!is_zero(col)) r.add_primitive({"delta.delta", m.closed.label(j)}, m.closed, col);
    }
  } else {
    r.fail_detail("delta^2 is not null-homotopic");
  }
  return r;
}

Report check_equivariance(const ChainModel& m, const Objects& o) {
  need(o, 1, "equivariance");
  Report r{"equivariance", o};
  const GradedSpace& s = m.cf(o[0], o[0]);
  const RationalVector& c = m.c_of(o[0]);
  need_vector(c, s, "c_L");
  need_vector(m.b, m.closed, "b");
  try {
    auto g = s.degree_of(c);
    if (g && *g != 0) r.fail_detail("c_" + o[0] + " has degree " + std::to_string(*g));
  } catch (const DegreeError&) {
    r.fail_detail("c_" + o[0] + " is not homogeneous");
  }
  RationalVector res = m.op(OpKind::mu1, {o[0], o[0]})({c}) - m.op(OpKind::phi0, o)({m.b});
  if (!is_zero(res)) r.fail({"mu1(c) - phi0(b)"}, s, res);
  return r;
}

Report check_units(const ChainModel& m, const Objects& o) {
  need(o, 1, "units");
  Report r{"units", o};
  const std::string& l = o[0];
  const GradedSpace& s = m.cf(l, l);
  const RationalVector& eL = m.unit_of(l);
  need_vector(eL, s, "e_L");
  need_vector(m.e, m.closed, "e");
  const MultiOp& mu1 = m.op(OpKind::mu1, {l, l});
  const RationalMatrix d = mu1.matrix();
  const MultiOp& ev = m.op(OpKind::unit_dual, o);
  const GradedSpace k = GradedSpace::ground();
  try {
    auto g = s.degree_of(eL);
    if (!g || *g != 0) r.fail_detail("e_" + l + " is not a nonzero degree-0 cochain");
  } catch (const DegreeError&) {
    r.fail_detail("e_" + l + " is not homogeneous");
  }
  RationalVector de = mu1({eL});
  if (!is_zero(de)) r.fail({"mu1(e_L)"}, s, de);
  const RationalMatrix evd = ev.matrix() * d;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    if (!evd(0, j).is_zero()) r.fail({"e_L^v.mu1", s.label(j)}, k, {evd(0, j)});
  }
  RationalVector diff = m.op(OpKind::phi0, o)({m.e}) - eL;
  if (auto p = primitive(d, diff)) {
    r.add_primitive({"phi0(e) - e_L"}, s, *p);
  } else {
    r.fail({"phi0(e) - e_L not exact"}, s, diff);
  }
  const MultiOp& dual = m.op(OpKind::phi0_dual, o);
  RationalVector g(s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) g[j] = dual({m.e, s.basis_vector(j)})[0] - ev({s.basis_vector(j)})[0];
  if (auto p = coprimitive(d, g)) {
    r.add_primitive({"phi0_dual(e, .) - e_L^v"}, s, *p);
  } else {
    r.fail({"phi0_dual(e, .) - e_L^v not a coboundary"}, s, g);
  }
  return r;
}

Report check_unit_homotopy(const ChainModel& m, const Objects& o) {
  need(o, 2, "unit_homotopy");
  Report r{"unit_homotopy", o};
  const std::string &l0 = o[0], &l1 = o[1];
  const GradedSpace& s = m.cf(l0, l1);
  const RationalMatrix d = m.op(OpKind::mu1, o).matrix();
  const RationalMatrix id = RationalMatrix::identity(s.dim());
  const RationalVector& e0 = m.unit_of(l0);
  const RationalVector& e1 = m.unit_of(l1);
  need_vector(e0, m.cf(l0, l0), "e_L0");
  need_vector(e1, m.cf(l1, l1), "e_L1");
  const RationalMatrix left = m.op(OpKind::mu2, {l0, l1, l1}).partial_matrix(1, {e1, {}});
  const RationalMatrix right = m.op(OpKind::mu2, {l0, l0, l1}).partial_matrix(0, {{}, e0});
  auto run = [&](const RationalMatrix& f, const std::string& name) {
    auto h = solve_homotopy(f - id, s, d, s, d, -1);
    if (!h) {
      r.fail_detail(name + " is not homotopic to the identity");
      RationalMatrix diff = f - id;
      for (std::size_t j = 0; j < s.dim(); ++j) {
        RationalVector col = diff.column(j);
        if (!is_zero(col)) r.fail({name, s.label(j)}, s, col);
      }
      return;
    }
    for (std::size_t j = 0; j < s.dim(); ++j) {
      RationalVector col = h->column(j);
      if (!is_zero(col)) r.add_primitive({name, s.label(j)}, s, col);
    }
  };
  run(left, "mu2(e_L1, .)");
  run(right, "mu2(., e_L0)");
  return r;
}

Report check_tilde_phi1_chain_map(const ChainModel& m, const Objects& o) {
  need(o, 2, "tilde_phi1_chain_map");
  Report r{"tilde_phi1_chain_map", o};
  require_equivariant(m, o[0]);
  require_equivariant(m, o[1]);
  const GradedSpace& s = m.cf(o[0], o[1]);
  const RationalMatrix t = assemble_tilde_phi1(m, o).matrix();
  const RationalMatrix d = m.op(OpKind::mu1, o).matrix();
  const RationalMatrix comm = d * t - t * d;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    RationalVector col = comm.column(j);
    if (!is_zero(col)) r.fail({s.label(j)}, s, col);
  }
  return r;
}

Report check_derivation(const ChainModel& m, const Objects& o) {
  need(o, 3, "derivation");
  Report r{"derivation", o};
  const std::string &l0 = o[0], &l1 = o[1], &l2 = o[2];
  MultiOp t02, t12, t01;
  try {
    t02 = build_tilde_phi1(m, {l0, l2});
    t12 = build_tilde_phi1(m, {l1, l2});
    t01 = build_tilde_phi1(m, {l0, l1});
  } catch (const IdentityError& err) {
    r.fail_detail(err.what());
    return r;
  }
  const MultiOp& mu2 = m.op(OpKind::mu2, o);
  const GradedSpace& s02 = m.cf(l0, l2);
  const Cohomology h12(m.cf(l1, l2), m.op(OpKind::mu1, {l1, l2}).matrix());
  const Cohomology h01(m.cf(l0, l1), m.op(OpKind::mu1, {l0, l1}).matrix());
  const RationalMatrix d02 = m.op(OpKind::mu1, {l0, l2}).matrix();
  for (std::size_t i = 0; i < h12.representatives().size(); ++i) {
    const RationalVector& a2 = h12.representatives()[i];
    for (std::size_t j = 0; j < h01.representatives().size(); ++j) {
      const RationalVector& a1 = h01.representatives()[j];
      RationalVector res = t02({mu2({a2, a1})}) - mu2({a2, t01({a1})}) - mu2({t12({a2}), a1});
      if (is_zero(res)) continue;
      if (auto p = primitive(d02, res)) {
        r.add_primitive({h12.space().label(i), h01.space().label(j)}, s02, *p);
      } else {
        r.fail({h12.space().label(i), h01.space().label(j)}, s02, res);
      }
    }
  }
  return r;
}

std::vector<Report> check_all(const ChainModel& m) {
  std::vector<Report> out;
  auto skip = [&](const std::string& name, const Objects& objs, const std::string& why) {
    Report r{name, objs};
    r.status = Status::skipped;
    r.detail = why;
    out.push_back(std::move(r));
  };
  auto run = [&](const std::string& name, const Objects& objs, const std::function<Report()>& f) {
    try {
      out.push_back(f());
    } catch (const MissingTensor& e) {
      skip(name, objs, e.what());
    } catch (const NotEquivariant& e) {
      skip(name, objs, e.what());
    } catch (const Error& e) {
      Report r{name, objs};
      r.fail_detail(e.what());
      out.push_back(std::move(r));
    }
  };
  run("differentials", {}, [&] { return check_differentials(m); });
  run("dilation", {}, [&] { return check_dilation(m); });
  run("closed_unit", {}, [&] { return check_closed_unit(m); });
  for (const auto& o : m.object_tuples(1)) {
    run("phi0_chain_map", o, [&] { return check_phi0_chain_map(m, o); });
    run("phi0_dual_chain_map", o, [&] { return check_phi0_dual_chain_map(m, o); });
    run("kvee", o, [&] { return check_kvee(m, o); });
    run("units", o, [&] { return check_units(m, o); });
    run("equivariance", o, [&] { return check_equivariance(m, o); });
  }
  for (const auto& o : m.object_tuples(2)) {
    run("phi1_homotopy", o, [&] { return check_phi1_homotopy(m, o); });
    run("hvee", o, [&] { return check_hvee(m, o); });
    run("unit_homotopy", o, [&] { return check_unit_homotopy(m, o); });
    run("tilde_phi1_chain_map", o, [&] { return check_tilde_phi1_chain_map(m, o); });
  }
  for (const auto& o : m.object_tuples(3)) {
    run("mu2_leibniz", o, [&] { return check_mu2_leibniz(m, o); });
    run("phi2_homotopy", o, [&] { return check_phi2_homotopy(m, o); });
    run("derivation", o, [&] { return check_derivation(m, o); });
  }
  for (const auto& o : m.object_tuples(4)) {
    run("mu3_homotopy", o, [&] { return check_mu3_homotopy(m, o); });
  }
  return out;
}

}  // namespace qfloer
