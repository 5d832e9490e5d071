#include "qfloer/chain/sign_convention.hpp"

#include "qfloer/errors.hpp"

namespace qfloer {

namespace {

const MultiOp& mu(const ChainModel& m, std::size_t arity, const Objects& objs) {
  switch (arity) {
    case 1: return m.op(OpKind::mu1, objs);
    case 2: return m.op(OpKind::mu2, objs);
    case 3: return m.op(OpKind::mu3, objs);
  }
  throw SchemaError("no mu of arity " + std::to_string(arity));
}

}  // namespace

MultiOp to_alternate_convention(const MultiOp& op) {
  const std::size_t d = op.arity();
  if (d > 3) throw SchemaError("to_alternate_convention supports arity at most 3");
  MultiOp out(op.name(), op.inputs(), op.output(), op.shift());
  for (const auto& [tuple, value] : op.entries()) {
    long long exponent = 0;
    for (std::size_t s = 0; s < d; ++s) {
      exponent += static_cast<long long>(d - s) * op.inputs()[s].degree(tuple[s]);
    }
    out.set(tuple, exponent % 2 == 0 ? value : scaled(Rational(-1), value));
  }
  return out;
}

ChainModel to_alternate_convention(const ChainModel& m) {
  ChainModel out = m;
  for (auto& [key, op] : out.ops) {
    if (key.first == OpKind::mu1 || key.first == OpKind::mu2 || key.first == OpKind::mu3) {
      op = to_alternate_convention(op);
    }
  }
  return out;
}

Report check_alternate_relation(const ChainModel& t, const Objects& o) {
  if (o.size() < 2 || o.size() > 4) throw SchemaError("check_alternate_relation needs 2 to 4 objects");
  const std::size_t d = o.size() - 1;
  Report r{"alternate_relation_" + std::to_string(d), o};
  // a_k lives in CF(o[k-1], o[k]).
  std::vector<const GradedSpace*> spaces(d + 1, nullptr);
  for (std::size_t k = 1; k <= d; ++k) spaces[k] = &t.cf(o[k - 1], o[k]);
  const GradedSpace& target = t.cf(o[0], o[d]);

  std::vector<std::size_t> idx(d + 1, 0);
  std::vector<std::size_t> dims(d + 1, 0);
  for (std::size_t k = 1; k <= d; ++k) {
    dims[k] = spaces[k]->dim();
    if (dims[k] == 0) return r;
  }
  while (true) {
    std::vector<RationalVector> a(d + 1);
    std::vector<long long> deg(d + 1, 0);
    for (std::size_t k = 1; k <= d; ++k) {
      a[k] = spaces[k]->basis_vector(idx[k]);
      deg[k] = spaces[k]->degree(idx[k]);
    }
    RationalVector total = target.zero();
    for (std::size_t mm = 1; mm <= d; ++mm) {
      for (std::size_t n = 0; n + mm <= d; ++n) {
        long long star = 0;
        for (std::size_t j = 1; j <= n; ++j) star += deg[j] - 1;
        // Inner operation on a_(n+mm), ..., a_(n+1).
        Objects inner_objs(o.begin() + static_cast<long>(n), o.begin() + static_cast<long>(n + mm + 1));
        std::vector<RationalVector> inner_args;
        for (std::size_t k = n + mm; k > n; --k) inner_args.push_back(a[k]);
        RationalVector inner = mu(t, mm, inner_objs)(inner_args);
        // Outer operation on a_d, ..., a_(n+mm+1), inner, a_n, ..., a_1.
        Objects outer_objs(o.begin(), o.begin() + static_cast<long>(n + 1));
        outer_objs.insert(outer_objs.end(), o.begin() + static_cast<long>(n + mm), o.end());
        std::vector<RationalVector> outer_args;
        for (std::size_t k = d; k > n + mm; --k) outer_args.push_back(a[k]);
        outer_args.push_back(inner);
        for (std::size_t k = n; k >= 1; --k) outer_args.push_back(a[k]);
        RationalVector term = mu(t, d - mm + 1, outer_objs)(outer_args);
        axpy(total, star % 2 == 0 ? Rational(1) : Rational(-1), term);
      }
    }
    if (!is_zero(total)) {
      std::vector<std::string> labels;
      for (std::size_t k = d; k >= 1; --k) labels.push_back(spaces[k]->label(idx[k]));
      r.fail(std::move(labels), target, total);
    }
    std::size_t k = 1;
    while (k <= d && ++idx[k] == dims[k]) idx[k++] = 0;
    if (k > d) break;
  }
  return r;
}

}  // namespace qfloer
