#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

struct CheckResult {
  std::string name;
  std::string instance;
  bool pass = false;
  std::string detail;
};

// Collects pass/fail lines from a verification sweep. Failures are recorded,
// never thrown.
class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string name, std::string instance, bool pass, std::string detail = {}) {
    checks_.push_back({std::move(name), std::move(instance), pass, std::move(detail)});
  }
  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  const std::string& title() const { return title_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  std::size_t size() const { return checks_.size(); }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks_) f += c.pass ? 0 : 1;
    return f;
  }
  bool passed() const { return failures() == 0; }

 private:
  std::string title_;
  std::vector<CheckResult> checks_;
};

}  // namespace brauer
