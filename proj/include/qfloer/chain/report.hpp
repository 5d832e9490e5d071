#pragma once

#include "qfloer/chain/chain_model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qfloer {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

// A basis tuple with a nonzero residual, or, for existence checks, the
// primitive that was found.
struct Witness {
  std::string kind = "residual";  // "residual" | "primitive"
  std::vector<std::string> inputs;
  std::vector<std::pair<std::string, Rational>> value;  // nonzero coordinates by label
};

struct Report {
  Report() = default;
  Report(std::string id, Objects objs) : identity(std::move(id)), objects(std::move(objs)) {}

  std::string identity;
  Objects objects;
  Status status = Status::pass;
  std::size_t failures = 0;        // number of failing basis tuples
  std::vector<Witness> witnesses;  // sorted by basis tuple, capped
  std::string detail;

  bool passed() const { return status == Status::pass; }
  // Marks the report failed and stores the residual (up to the cap).
  void fail(std::vector<std::string> inputs, const GradedSpace& target, const RationalVector& residual);
  void fail_detail(const std::string& why);
  void add_primitive(std::vector<std::string> inputs, const GradedSpace& target, const RationalVector& value);
};

constexpr std::size_t kMaxWitnesses = 32;

}  // namespace qfloer
