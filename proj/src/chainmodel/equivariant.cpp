#include "qfloer/chain/equivariant.hpp"

#include "qfloer/errors.hpp"

#include <set>

namespace qfloer {

namespace {

std::vector<RationalVector> column_space_basis(const std::vector<RationalVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  RowEchelon ech = row_reduce(from_columns(vectors, dim));
  std::vector<RationalVector> out;
  for (auto p : ech.pivots) out.push_back(vectors[p]);
  return out;
}

}  // namespace

void require_equivariant(const ChainModel& m, const std::string& l) {
  const RationalVector& c = m.c_of(l);
  const MultiOp& mu1 = m.op(OpKind::mu1, {l, l});
  const MultiOp& phi0 = m.op(OpKind::phi0, {l});
  if (c.size() != m.cf(l, l).dim()) throw NotEquivariant("c_" + l + " has the wrong length");
  auto deg = m.cf(l, l).degree_of(c);
  if (deg && *deg != 0) throw NotEquivariant("c_" + l + " is not of degree 0");
  if (!is_zero(mu1({c}) - phi0({m.b}))) throw NotEquivariant("mu1(c_" + l + ") != phi0(b) on " + l);
}

MultiOp assemble_tilde_phi1(const ChainModel& m, const Objects& pair) {
  if (pair.size() != 2) throw SchemaError("tilde phi1 needs two objects");
  const std::string& l0 = pair[0];
  const std::string& l1 = pair[1];
  const GradedSpace& cf = m.cf(l0, l1);
  const MultiOp& phi1 = m.op(OpKind::phi1, {l0, l1});
  const MultiOp& left = m.op(OpKind::mu2, {l0, l1, l1});
  const MultiOp& right = m.op(OpKind::mu2, {l0, l0, l1});
  const RationalVector& c0 = m.c_of(l0);
  const RationalVector& c1 = m.c_of(l1);

  MultiOp out("tilde_phi1", {cf}, cf, 0);
  for (std::size_t i = 0; i < cf.dim(); ++i) {
    RationalVector a = cf.basis_vector(i);
    RationalVector v = phi1({m.b, a}) - left({c1, a}) + right({a, c0});
    if (!is_zero(v)) out.set({i}, v);
  }
  return out;
}

MultiOp build_tilde_phi1(const ChainModel& m, const Objects& pair) {
  if (pair.size() != 2) throw SchemaError("build_tilde_phi1 needs two objects");
  require_equivariant(m, pair[0]);
  require_equivariant(m, pair[1]);
  MultiOp out = assemble_tilde_phi1(m, pair);
  const RationalMatrix mu1 = m.op(OpKind::mu1, pair).matrix();
  const RationalMatrix t = out.matrix();
  if (!(mu1 * t - t * mu1).is_zero()) {
    throw IdentityError("tilde phi1 on (" + pair[0] + ", " + pair[1] + ") does not commute with mu1");
  }
  return out;
}

MultiOp build_tilde_phi2(const ChainModel& m, const Objects& triple) {
  if (triple.size() != 3) throw SchemaError("build_tilde_phi2 needs three objects");
  const std::string &l0 = triple[0], &l1 = triple[1], &l2 = triple[2];
  const GradedSpace& s21 = m.cf(l1, l2);
  const GradedSpace& s10 = m.cf(l0, l1);
  const MultiOp& phi2 = m.op(OpKind::phi2, {l0, l1, l2});
  const MultiOp& m3a = m.op(OpKind::mu3, {l0, l1, l2, l2});
  const MultiOp& m3b = m.op(OpKind::mu3, {l0, l1, l1, l2});
  const MultiOp& m3c = m.op(OpKind::mu3, {l0, l0, l1, l2});
  const RationalVector& c0 = m.c_of(l0);
  const RationalVector& c1 = m.c_of(l1);
  const RationalVector& c2 = m.c_of(l2);

  MultiOp out("tilde_phi2", {s21, s10}, m.cf(l0, l2), -1);
  for (std::size_t i = 0; i < s21.dim(); ++i) {
    RationalVector a2 = s21.basis_vector(i);
    for (std::size_t j = 0; j < s10.dim(); ++j) {
      RationalVector a1 = s10.basis_vector(j);
      RationalVector v = phi2({m.b, a2, a1}) - m3a({c2, a2, a1}) + m3b({a2, c1, a1}) - m3c({a2, a1, c0});
      if (!is_zero(v)) out.set({i, j}, v);
    }
  }
  return out;
}

Cohomology::Cohomology(GradedSpace chains, RationalMatrix differential)
    : chains_(std::move(chains)), d_(std::move(differential)) {
  const std::size_t n = chains_.dim();
  if (d_.rows() != n || d_.cols() != n) throw SizeMismatch("differential does not match the chain space");
  std::vector<BasisElement> h_basis;
  std::set<std::string> used;
  for (const auto& [deg, count] : chains_.dims()) {
    (void)count;
    Slice& slice = slices_[deg];
    std::vector<RationalVector> images;
    for (std::size_t j : chains_.indices_of_degree(deg - 1)) images.push_back(d_.column(j));
    slice.boundaries = column_space_basis(images, n);

    const std::vector<std::size_t> idx = chains_.indices_of_degree(deg);
    RationalMatrix block(n, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) block(r, c) = d_(r, idx[c]);
    std::vector<RationalVector> span = slice.boundaries;
    std::size_t current = span.empty() ? 0 : rank(from_columns(span, n));
    for (const auto& k : kernel_basis(block)) {
      RationalVector z(n);
      for (std::size_t c = 0; c < idx.size(); ++c) z[idx[c]] = k[c];
      span.push_back(z);
      std::size_t r = rank(from_columns(span, n));
      if (r == current) {
        span.pop_back();
        continue;
      }
      current = r;
      std::size_t lead = 0;
      while (z[lead].is_zero()) ++lead;
      std::string label = "[" + chains_.label(lead) + "]";
      while (used.count(label)) label += "'";
      used.insert(label);
      slice.classes.push_back(reps_.size());
      reps_.push_back(std::move(z));
      h_basis.push_back({label, deg});
    }
  }
  space_ = GradedSpace(std::move(h_basis));
}

bool Cohomology::is_cycle(const RationalVector& v) const { return is_zero(d_.apply(v)); }

bool Cohomology::is_boundary(const RationalVector& v) const { return solve(d_, v).has_value(); }

RationalVector Cohomology::class_of(const RationalVector& v) const {
  if (v.size() != chains_.dim()) throw SizeMismatch("class_of: vector length mismatch");
  if (!is_cycle(v)) throw IdentityError("class_of: vector is not a cycle");
  RationalVector out(reps_.size());
  for (const auto& [deg, slice] : slices_) {
    RationalVector part(v.size());
    bool any = false;
    for (std::size_t i : chains_.indices_of_degree(deg)) {
      part[i] = v[i];
      any = any || !v[i].is_zero();
    }
    if (!any) continue;
    std::vector<RationalVector> cols = slice.boundaries;
    for (std::size_t r : slice.classes) cols.push_back(reps_[r]);
    auto coeffs = solve(from_columns(cols, v.size()), part);
    if (!coeffs) throw IdentityError("class_of: cycle outside the computed span");
    for (std::size_t k = 0; k < slice.classes.size(); ++k) {
      out[slice.classes[k]] = (*coeffs)[slice.boundaries.size() + k];
    }
  }
  return out;
}

RationalMatrix Cohomology::induced(const RationalMatrix& f, const Cohomology& target) const {
  if (f.cols() != chains_.dim() || f.rows() != target.chains_.dim()) {
    throw SizeMismatch("induced: chain map shape mismatch");
  }
  for (const auto& [deg, slice] : slices_) {
    (void)deg;
    for (const auto& bvec : slice.boundaries) {
      if (!target.is_boundary(f.apply(bvec))) throw IdentityError("induced: a boundary is not sent to a boundary");
    }
  }
  RationalMatrix out(target.reps_.size(), reps_.size());
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    RationalVector image = f.apply(reps_[j]);
    if (!target.is_cycle(image)) throw IdentityError("induced: a cycle is not sent to a cycle");
    RationalVector cls = target.class_of(image);
    for (std::size_t i = 0; i < cls.size(); ++i) out(i, j) = cls[i];
  }
  return out;
}

std::map<long long, RationalMatrix> degree_blocks(const GradedSpace& space, const RationalMatrix& endo) {
  if (endo.rows() != space.dim() || endo.cols() != space.dim()) throw SizeMismatch("degree_blocks: shape mismatch");
  for (std::size_t r = 0; r < space.dim(); ++r)
    for (std::size_t c = 0; c < space.dim(); ++c)
      if (space.degree(r) != space.degree(c) && !endo(r, c).is_zero()) {
        throw DegreeError("endomorphism does not preserve degree");
      }
  std::map<long long, RationalMatrix> out;
  for (const auto& [deg, count] : space.dims()) {
    auto idx = space.indices_of_degree(deg);
    RationalMatrix block(count, count);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < count; ++c) block(r, c) = endo(idx[r], idx[c]);
    out.emplace(deg, std::move(block));
  }
  return out;
}

FloerCohomology cohomology(const ChainModel& m, const Objects& pair) {
  if (pair.size() != 2) throw SchemaError("cohomology needs two objects");
  MultiOp t = build_tilde_phi1(m, pair);
  FloerCohomology out;
  out.h = Cohomology(m.cf(pair[0], pair[1]), m.op(OpKind::mu1, pair).matrix());
  out.endomorphism = out.h.induced(t.matrix());
  out.per_degree = degree_blocks(out.h.space(), out.endomorphism);
  return out;
}

EquivariantTable floer_table(const ChainModel& m, const Objects& pair) {
  return table_from_endomorphism(cohomology(m, pair).per_degree, m.n);
}

}  // namespace qfloer
