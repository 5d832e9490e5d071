#include "qfloer/chain/report.hpp"

namespace qfloer {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::vector<std::pair<std::string, Rational>> labelled(const GradedSpace& target, const RationalVector& v) {
  std::vector<std::pair<std::string, Rational>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(target.label(i), v[i]);
  }
  return out;
}

}  // namespace

void Report::fail(std::vector<std::string> inputs, const GradedSpace& target, const RationalVector& residual) {
  status = Status::fail;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) {
    witnesses.push_back({"residual", std::move(inputs), labelled(target, residual)});
  }
}

void Report::fail_detail(const std::string& why) {
  status = Status::fail;
  ++failures;
  if (!detail.empty()) detail += "; ";
  detail += why;
}

void Report::add_primitive(std::vector<std::string> inputs, const GradedSpace& target, const RationalVector& value) {
  if (witnesses.size() < kMaxWitnesses) {
    witnesses.push_back({"primitive", std::move(inputs), labelled(target, value)});
  }
}

}  // namespace qfloer
