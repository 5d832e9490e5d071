#include "qfloer/chain/chain_model.hpp"

#include "qfloer/errors.hpp"

namespace qfloer {

namespace {

std::string join(const Objects& objs) {
  std::string s;
  for (std::size_t i = 0; i < objs.size(); ++i) s += (i ? "," : "") + objs[i];
  return s;
}

}  // namespace

const std::vector<OpKind>& all_op_kinds() {
  static const std::vector<OpKind> kinds{OpKind::d,    OpKind::delta,     OpKind::mu1,  OpKind::mu2,
                                         OpKind::mu3,  OpKind::phi0,      OpKind::phi0_dual,
                                         OpKind::phi1, OpKind::phi2,      OpKind::hvee, OpKind::kvee,
                                         OpKind::unit_dual};
  return kinds;
}

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::d: return "d";
    case OpKind::delta: return "delta";
    case OpKind::mu1: return "mu1";
    case OpKind::mu2: return "mu2";
    case OpKind::mu3: return "mu3";
    case OpKind::phi0: return "phi0";
    case OpKind::phi0_dual: return "phi0_dual";
    case OpKind::phi1: return "phi1";
    case OpKind::phi2: return "phi2";
    case OpKind::hvee: return "hvee";
    case OpKind::kvee: return "kvee";
    case OpKind::unit_dual: return "unit_dual";
  }
  return "?";
}

OpKind op_kind_from_string(const std::string& s) {
  for (OpKind k : all_op_kinds()) {
    if (to_string(k) == s) return k;
  }
  throw SchemaError("unknown operation '" + s + "'");
}

std::size_t object_count(OpKind k) {
  switch (k) {
    case OpKind::d:
    case OpKind::delta: return 0;
    case OpKind::phi0:
    case OpKind::phi0_dual:
    case OpKind::kvee:
    case OpKind::unit_dual: return 1;
    case OpKind::mu1:
    case OpKind::phi1:
    case OpKind::hvee: return 2;
    case OpKind::mu2:
    case OpKind::phi2: return 3;
    case OpKind::mu3: return 4;
  }
  return 0;
}

bool ChainModel::has_space(const std::string& l0, const std::string& l1) const {
  return spaces.count({l0, l1}) > 0;
}

const GradedSpace& ChainModel::cf(const std::string& l0, const std::string& l1) const {
  auto it = spaces.find({l0, l1});
  if (it == spaces.end()) throw MissingTensor("no Floer complex CF(" + l0 + "," + l1 + ")");
  return it->second;
}

bool ChainModel::has(OpKind k, const Objects& objs) const { return ops.count({k, objs}) > 0; }

const MultiOp& ChainModel::op(OpKind k, const Objects& objs) const {
  auto it = ops.find({k, objs});
  if (it == ops.end()) throw MissingTensor("missing tensor " + to_string(k) + "[" + join(objs) + "]");
  return it->second;
}

MultiOp& ChainModel::op(OpKind k, const Objects& objs) {
  auto it = ops.find({k, objs});
  if (it == ops.end()) throw MissingTensor("missing tensor " + to_string(k) + "[" + join(objs) + "]");
  return it->second;
}

MultiOp ChainModel::blank(OpKind k, const Objects& o) const {
  if (o.size() != object_count(k)) {
    throw SchemaError(to_string(k) + " takes " + std::to_string(object_count(k)) + " objects, got " +
                      std::to_string(o.size()));
  }
  const std::string name = to_string(k) + (o.empty() ? "" : "[" + join(o) + "]");
  const GradedSpace k1 = GradedSpace::ground();
  switch (k) {
    case OpKind::d: return MultiOp(name, {closed}, closed, 1);
    case OpKind::delta: return MultiOp(name, {closed}, closed, -1);
    case OpKind::mu1: return MultiOp(name, {cf(o[0], o[1])}, cf(o[0], o[1]), 1);
    case OpKind::mu2: return MultiOp(name, {cf(o[1], o[2]), cf(o[0], o[1])}, cf(o[0], o[2]), 0);
    case OpKind::mu3:
      return MultiOp(name, {cf(o[2], o[3]), cf(o[1], o[2]), cf(o[0], o[1])}, cf(o[0], o[3]), -1);
    case OpKind::phi0: return MultiOp(name, {closed}, cf(o[0], o[0]), 0);
    case OpKind::phi0_dual: return MultiOp(name, {closed, cf(o[0], o[0])}, k1, -n);
    case OpKind::phi1: return MultiOp(name, {closed, cf(o[0], o[1])}, cf(o[0], o[1]), -1);
    case OpKind::phi2: return MultiOp(name, {closed, cf(o[1], o[2]), cf(o[0], o[1])}, cf(o[0], o[2]), -2);
    case OpKind::hvee: return MultiOp(name, {cf(o[1], o[0]), cf(o[0], o[1])}, k1, -n - 1);
    case OpKind::kvee: return MultiOp(name, {closed, cf(o[0], o[0])}, k1, -n - 2);
    case OpKind::unit_dual: return MultiOp(name, {cf(o[0], o[0])}, k1, -n);
  }
  throw SchemaError("unknown operation kind");
}

MultiOp& ChainModel::define(OpKind k, const Objects& objs) {
  auto it = ops.find({k, objs});
  if (it != ops.end()) return it->second;
  return ops.emplace(std::make_pair(k, objs), blank(k, objs)).first->second;
}

const RationalVector& ChainModel::unit_of(const std::string& l) const {
  auto it = unit.find(l);
  if (it == unit.end()) throw MissingTensor("missing unit e_" + l);
  return it->second;
}

const RationalVector& ChainModel::c_of(const std::string& l) const {
  auto it = c.find(l);
  if (it == c.end()) throw NotEquivariant("no equivariant structure c_" + l);
  return it->second;
}

std::vector<Objects> ChainModel::object_tuples(std::size_t length) const {
  std::vector<Objects> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Objects> next;
    for (const auto& prefix : out) {
      for (const auto& l : lagrangians) {
        Objects o = prefix;
        o.push_back(l);
        next.push_back(std::move(o));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace qfloer
