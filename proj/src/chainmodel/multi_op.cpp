#include "qfloer/chain/multi_op.hpp"

#include "qfloer/errors.hpp"

namespace qfloer {

MultiOp::MultiOp(std::string name, std::vector<GradedSpace> inputs, GradedSpace output, long long shift)
    : name_(std::move(name)), inputs_(std::move(inputs)), output_(std::move(output)), shift_(shift) {}

void MultiOp::check_tuple(const Tuple& in) const {
  if (in.size() != inputs_.size()) {
    throw SizeMismatch(name_ + ": expected " + std::to_string(inputs_.size()) + " inputs, got " +
                       std::to_string(in.size()));
  }
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (in[k] >= inputs_[k].dim()) throw SizeMismatch(name_ + ": basis id out of range");
  }
}

long long MultiOp::target_degree(const Tuple& in) const {
  check_tuple(in);
  long long d = shift_;
  for (std::size_t k = 0; k < in.size(); ++k) d += inputs_[k].degree(in[k]);
  return d;
}

void MultiOp::set(const Tuple& in, const RationalVector& out) {
  if (out.size() != output_.dim()) throw SizeMismatch(name_ + ": output vector has wrong length");
  const long long d = target_degree(in);
  bool nonzero = false;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].is_zero()) continue;
    nonzero = true;
    if (output_.degree(i) != d) {
      std::string args;
      for (std::size_t k = 0; k < in.size(); ++k) args += (k ? "," : "") + inputs_[k].label(in[k]);
      throw DegreeError(name_ + "(" + args + ") -> " + output_.label(i) + ": output degree " +
                        std::to_string(output_.degree(i)) + " but expected " + std::to_string(d));
    }
  }
  if (nonzero) {
    entries_[in] = out;
  } else {
    entries_.erase(in);
  }
}

void MultiOp::add(const Tuple& in, std::size_t out, const Rational& c) {
  RationalVector v = on_basis(in);
  v.at(out) += c;
  set(in, v);
}

RationalVector MultiOp::on_basis(const Tuple& in) const {
  check_tuple(in);
  auto it = entries_.find(in);
  return it == entries_.end() ? output_.zero() : it->second;
}

RationalVector MultiOp::operator()(const std::vector<RationalVector>& args) const {
  if (args.size() != inputs_.size()) throw SizeMismatch(name_ + ": wrong number of arguments");
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].size() != inputs_[k].dim()) throw SizeMismatch(name_ + ": argument has wrong length");
  }
  RationalVector out = output_.zero();
  std::vector<std::vector<std::size_t>> support(args.size());
  std::size_t combos = 1;
  for (std::size_t k = 0; k < args.size(); ++k) {
    for (std::size_t i = 0; i < args[k].size(); ++i)
      if (!args[k][i].is_zero()) support[k].push_back(i);
    combos *= support[k].size();
    if (combos == 0) return out;
  }
  if (combos < entries_.size()) {
    Tuple t(args.size());
    std::vector<std::size_t> pos(args.size(), 0);
    while (true) {
      Rational c = 1;
      for (std::size_t k = 0; k < args.size(); ++k) {
        t[k] = support[k][pos[k]];
        c *= args[k][t[k]];
      }
      auto it = entries_.find(t);
      if (it != entries_.end()) axpy(out, c, it->second);
      std::size_t k = 0;
      while (k < args.size() && ++pos[k] == support[k].size()) pos[k++] = 0;
      if (k == args.size()) break;
    }
    return out;
  }
  for (const auto& [in, value] : entries_) {
    Rational c = 1;
    for (std::size_t k = 0; k < in.size() && !c.is_zero(); ++k) c *= args[k][in[k]];
    if (!c.is_zero()) axpy(out, c, value);
  }
  return out;
}

RationalMatrix MultiOp::partial_matrix(std::size_t slot, const std::vector<RationalVector>& fixed) const {
  if (slot >= inputs_.size()) throw SizeMismatch(name_ + ": slot out of range");
  RationalMatrix m(output_.dim(), inputs_[slot].dim());
  for (const auto& [in, value] : entries_) {
    Rational c = 1;
    for (std::size_t k = 0; k < in.size() && !c.is_zero(); ++k) {
      if (k != slot) c *= fixed.at(k).at(in[k]);
    }
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < value.size(); ++r) {
      if (!value[r].is_zero()) m(r, in[slot]) += c * value[r];
    }
  }
  return m;
}

RationalMatrix MultiOp::matrix() const {
  if (arity() != 1) throw SizeMismatch(name_ + ": matrix() needs an arity-one operation");
  return partial_matrix(0, {RationalVector{}});
}

std::vector<MultiOp::Tuple> MultiOp::all_tuples() const {
  std::vector<Tuple> out;
  for (const auto& s : inputs_) {
    if (s.dim() == 0) return out;
  }
  Tuple t(inputs_.size(), 0);
  while (true) {
    out.push_back(t);
    std::size_t k = t.size();
    while (k > 0) {
      --k;
      if (++t[k] < inputs_[k].dim()) break;
      t[k] = 0;
      if (k == 0) return out;
    }
    if (t.empty()) return out;
  }
}

}  // namespace qfloer
