#pragma once

#include <string>

#include "hopfmon/report.hpp"
#include "hopfmon/tensor.hpp"

namespace hopfmon {

// Accumulates one named identity over a loop of basis tuples and keeps the
// first failing tuple as the witness.
class IdentityCheck {
 public:
  explicit IdentityCheck(std::string name) : name_(std::move(name)) {}

  // False once a failure has been recorded, so loops can stop early.
  bool expect(const TensorElement& lhs, const TensorElement& rhs, const std::string& at = {}) {
    if (!failure_.empty()) return false;
    if (lhs == rhs) return true;
    std::string diff = first_difference(lhs, rhs);
    failure_ = at.empty() ? diff : "at (" + at + "): " + diff;
    return false;
  }
  void fail(std::string detail) {
    if (failure_.empty()) failure_ = std::move(detail);
  }
  bool failed() const { return !failure_.empty(); }
  void finish(Report& report, std::string detail_on_pass = {}) const {
    report.add(name_, failure_.empty(), failure_.empty() ? std::move(detail_on_pass) : failure_);
  }

 private:
  std::string name_;
  std::string failure_;
};

}  // namespace hopfmon
