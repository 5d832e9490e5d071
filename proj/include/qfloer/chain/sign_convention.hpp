#pragma once

#include "qfloer/chain/chain_model.hpp"
#include "qfloer/chain/report.hpp"

namespace qfloer {

// mubar(a_d, ..., a_1) = (-1)^(|a_1| + 2|a_2| + ... + d|a_d|) mu(a_d, ..., a_1).
// Inputs are stored in written order, so slot s carries a_(d - s).
// The map is an involution. Throws SchemaError for arity > 3.
MultiOp to_alternate_convention(const MultiOp& op);

// Applies the translation to mu1, mu2 and mu3; other tensors are copied.
ChainModel to_alternate_convention(const ChainModel& m);

// The relation
//   sum (-1)^(sum_{j<=n} (|a_j| - 1)) mu^(d-m+1)(a_d, ..., mu^m(a_(n+m), ..., a_(n+1)), a_n, ..., a_1) = 0
// for d = objs.size() - 1 in {1, 2, 3}, evaluated on every basis tuple of a
// model already in the translated convention.
Report check_alternate_relation(const ChainModel& translated, const Objects& objs);

}  // namespace qfloer
