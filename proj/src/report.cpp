#include "hopfmon/report.hpp"

namespace hopfmon {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skip:
      return "skip";
  }
  return "?";
}

void Report::pass(std::string name, std::string detail) {
  checks_.push_back({std::move(name), Verdict::Pass, std::move(detail)});
}

void Report::fail(std::string name, std::string detail) {
  checks_.push_back({std::move(name), Verdict::Fail, std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks_.push_back({std::move(name), Verdict::Skip, std::move(detail)});
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks_.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.verdict, c.detail});
  for (const auto& n : other.notes_) notes_.emplace_back(prefix + n.first, n.second);
}

void Report::note(std::string key, std::string value) { notes_.emplace_back(std::move(key), std::move(value)); }

bool Report::ok() const {
  for (const auto& c : checks_)
    if (c.verdict == Verdict::Fail) return false;
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->verdict == Verdict::Pass;
}

std::string Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.verdict == Verdict::Fail) return c.name + ": " + c.detail;
  return {};
}

}  // namespace hopfmon
