#pragma once

#include "qfloer/chain/graded_space.hpp"

#include <map>
#include <string>
#include <vector>

namespace qfloer {

// Multilinear map inputs[0] x ... x inputs[k-1] -> output of a fixed degree
// shift, stored sparsely by basis tuple. Inputs are listed in the order in
// which they are written, so mu2(a2, a1) has inputs {CF(L1,L2), CF(L0,L1)}.
class MultiOp {
 public:
  using Tuple = std::vector<std::size_t>;

  MultiOp() = default;
  MultiOp(std::string name, std::vector<GradedSpace> inputs, GradedSpace output, long long shift);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return inputs_.size(); }
  long long shift() const { return shift_; }
  const std::vector<GradedSpace>& inputs() const { return inputs_; }
  const GradedSpace& output() const { return output_; }
  const std::map<Tuple, RationalVector>& entries() const { return entries_; }

  // Replaces the value on a basis tuple. Throws DegreeError if a nonzero
  // coordinate has the wrong degree.
  void set(const Tuple& in, const RationalVector& out);
  // Adds c to one output coordinate.
  void add(const Tuple& in, std::size_t out, const Rational& c);
  void clear() { entries_.clear(); }

  // Output degree of a basis tuple.
  long long target_degree(const Tuple& in) const;

  RationalVector on_basis(const Tuple& in) const;
  RationalVector operator()(const std::vector<RationalVector>& args) const;

  // Linear map in slot `slot` with the other arguments held fixed; the entry
  // for `slot` in `fixed` is ignored.
  RationalMatrix partial_matrix(std::size_t slot, const std::vector<RationalVector>& fixed) const;
  // Matrix of an arity-one operation.
  RationalMatrix matrix() const;

  // Every tuple of basis ids, in lexicographic order.
  std::vector<Tuple> all_tuples() const;

  friend bool operator==(const MultiOp&, const MultiOp&) = default;

 private:
  void check_tuple(const Tuple& in) const;

  std::string name_;
  std::vector<GradedSpace> inputs_;
  GradedSpace output_;
  long long shift_ = 0;
  std::map<Tuple, RationalVector> entries_;
};

}  // namespace qfloer
