#pragma once

#include <string>
#include <utility>
#include <vector>

namespace symfuse {

/// Outcome of one verification. Verifications report failures; they do not throw.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

class CheckReport {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    results_.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    results_.insert(results_.end(), other.results_.begin(), other.results_.end());
  }

  const std::vector<CheckResult>& results() const { return results_; }
  bool all_pass() const {
    for (const auto& r : results_)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : results_) n += r.pass ? 0 : 1;
    return n;
  }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace symfuse
