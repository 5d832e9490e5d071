#pragma once

#include "qfloer/chain/multi_op.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qfloer {

// Operations of the open-closed structure. Object lists follow the
// subscripts: mu2 on {L0,L1,L2} maps CF(L1,L2) x CF(L0,L1) -> CF(L0,L2),
// hvee on {L0,L1} pairs CF(L1,L0) x CF(L0,L1), and the closed-sector maps
// d and delta take no objects.
enum class OpKind { d, delta, mu1, mu2, mu3, phi0, phi0_dual, phi1, phi2, hvee, kvee, unit_dual };

const std::vector<OpKind>& all_op_kinds();
std::string to_string(OpKind k);
OpKind op_kind_from_string(const std::string& s);  // SchemaError on unknown names
// Number of objects an operation is indexed by.
std::size_t object_count(OpKind k);

using Objects = std::vector<std::string>;

struct ChainModel {
  long long n = 0;
  GradedSpace closed;
  std::vector<std::string> lagrangians;
  std::map<std::pair<std::string, std::string>, GradedSpace> spaces;  // CF(L0, L1)
  std::map<std::pair<OpKind, Objects>, MultiOp> ops;

  RationalVector e;     // closed unit, degree 0
  RationalVector b;     // dilation, degree 1
  RationalVector beta;  // degree -1, delta b = e + d beta
  std::map<std::string, RationalVector> unit;  // e_L in CF^0(L, L)
  std::map<std::string, RationalVector> c;     // equivariant structure c_L in CF^0(L, L)

  bool has_space(const std::string& l0, const std::string& l1) const;
  // Throws MissingTensor.
  const GradedSpace& cf(const std::string& l0, const std::string& l1) const;

  bool has(OpKind k, const Objects& objs) const;
  // Throws MissingTensor.
  const MultiOp& op(OpKind k, const Objects& objs) const;
  MultiOp& op(OpKind k, const Objects& objs);

  // Empty (zero) operation with the right signature; spaces must exist.
  MultiOp blank(OpKind k, const Objects& objs) const;
  // Inserts a zero operation if absent and returns it.
  MultiOp& define(OpKind k, const Objects& objs);

  const RationalVector& unit_of(const std::string& l) const;
  const RationalVector& c_of(const std::string& l) const;

  // Every object tuple of the given length, in lexicographic order of the
  // lagrangian list.
  std::vector<Objects> object_tuples(std::size_t length) const;
};

}  // namespace qfloer
