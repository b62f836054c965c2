#pragma once

#include <string>
#include <vector>

namespace hopfmon {

enum class Verdict { Pass, Fail, Skip };

const char* verdict_name(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  // First failing basis tuple (lexicographic) with both sides, or a short
  // informational note on success.
  std::string detail;

  bool passed() const { return verdict != Verdict::Fail; }
};

// Ordered list of named identity checks.  Witness selection is deterministic
// so a report renders byte-identically across runs.
class Report {
 public:
  Report() = default;
  explicit Report(std::string target) : target_(std::move(target)) {}

  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string detail);
  void skip(std::string name, std::string detail);
  void add(std::string name, bool ok, std::string detail = {});
  void add(Check check) { checks_.push_back(std::move(check)); }
  void merge(const Report& other, const std::string& prefix = {});
  void note(std::string key, std::string value);

  const std::string& target() const { return target_; }
  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }
  bool ok() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  std::string first_failure() const;

 private:
  std::string target_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

}  // namespace hopfmon
