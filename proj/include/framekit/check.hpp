#ifndef FRAMEKIT_CHECK_HPP
#define FRAMEKIT_CHECK_HPP

#include <string>

namespace framekit {

enum class CheckStatus { Pass, Fail, Skipped };

constexpr const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

/// Outcome of one exhaustive or sampled check. `detail` holds the
/// counterexample on failure and the failed hypothesis when skipped.
struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {CheckStatus::Fail, std::move(why)}; }
  static CheckResult skip(std::string hypothesis) { return {CheckStatus::Skipped, std::move(hypothesis)}; }

  bool passed() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
  bool skipped() const { return status == CheckStatus::Skipped; }

  /// First failure wins; a skip never overrides a verdict.
  void merge(const CheckResult& other) {
    if (status == CheckStatus::Fail) return;
    if (other.status == CheckStatus::Fail || status == CheckStatus::Skipped) *this = other;
  }
};

}  // namespace framekit

#endif  // FRAMEKIT_CHECK_HPP
