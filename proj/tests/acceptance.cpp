// One line per acceptance criterion. A criterion passes when every required
// (theorem, frame) cell passes with enough cases and no cell fails anywhere.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>

#include "framekit/framekit.hpp"

using namespace framekit;

namespace {

struct FrameFacts {
  FrameProfile profile;
  std::size_t bl = 0;
  bool boolean = false;
};

using Hypothesis = std::function<bool(const FrameFacts&)>;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::pair<std::string, Hypothesis>> cells;  // theorem id, frames where it must pass
  std::size_t min_cases = 0;
};

const Hypothesis any = [](const FrameFacts&) { return true; };
const Hypothesis zero_dim = [](const FrameFacts& f) { return f.profile.zero_dimensional; };
const Hypothesis bl16 = [](const FrameFacts& f) { return f.bl <= 16; };
const Hypothesis bl8 = [](const FrameFacts& f) { return f.bl <= 8; };

std::string judge(const Criterion& c, const SuiteReport& report, const std::map<std::string, FrameFacts>& facts) {
  std::size_t required = 0;
  for (const auto& [id, hyp] : c.cells)
    for (const auto& [name, f] : facts) {
      auto it = std::ranges::find_if(report.entries, [&](const SuiteEntry& e) { return e.theorem == id && e.frame == name; });
      if (it == report.entries.end()) return "missing " + id + " on " + name;
      if (it->result.failed()) return id + " failed on " + name + ": " + it->result.detail;
      if (!hyp(f)) continue;
      ++required;
      if (!it->result.passed()) return id + " not run on " + name + ": " + it->result.detail;
      if (it->cases < c.min_cases)
        return id + " ran " + std::to_string(it->cases) + " cases on " + name + ", need " + std::to_string(c.min_cases);
    }
  if (required == 0) return "no frame satisfies the hypothesis";
  return {};
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  SuiteOptions options;
  options.seed = 42;
  std::string first, second;
  SuiteReport report;
  try {
    report = run_suite(options);
    first = report_json(report).dump(2);
    second = report_json(run_suite(options)).dump(2);
  } catch (const Error& e) {
    std::cout << "suite aborted: " << e.what() << "\n";
    return 1;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::map<std::string, FrameFacts> facts;
  for (const auto& e : default_corpus()) {
    if (!e.expected) continue;
    auto bl = complemented_elements(*e.frame).size();
    facts[e.name] = {*e.expected, bl, bl == e.frame->size()};
  }

  std::vector<std::pair<std::string, Hypothesis>> c1;
  for (int k = 1; k <= 9; ++k) c1.emplace_back("c1." + std::to_string(k), k == 4 || k == 9 ? zero_dim : any);
  c1.emplace_back("aa", zero_dim);

  const std::vector<Criterion> criteria{
      {1, "lattice laws", {{"laws", any}}},
      {2, "nine-part cozero lemma and cozero joins", c1},
      {3, "beta0 to beta comparison", {{"cs", [](const FrameFacts& f) { return f.profile.completely_regular; }}}},
      {4, "clean decomposition", {{"ac", [](const FrameFacts& f) { return f.boolean && f.bl <= 16; }}}, 1000},
      {5, "interval cozeros and idempotents", {{"ec", any}}},
      {6, "factorization round trip", {{"cb", any}}, 500},
      {7, "annihilator criterion and d_c condition", {{"dc", zero_dim}, {"d1", zero_dim}}, 500},
      {8, "maximal ideals by scan", {{"m", bl16}, {"i", bl16}}},
      {9, "bracketing, witnesses, generators", {{"m1", bl8}, {"om", bl8}, {"ig", bl8}}},
      {10, "fixed ideals and points", {{"f", any}, {"p", zero_dim}, {"ff", zero_dim}, {"fm", any}}},
      {11, "spectrum opens", {{"b", bl8}, {"q", bl8}}},
  };

  bool all = !report.self_check.failed();
  if (!all) std::cout << "corpus self-check failed: " << report.self_check.detail << "\n";
  for (const auto& c : criteria) {
    auto why = judge(c, report, facts);
    all = all && why.empty();
    std::cout << (why.empty() ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << (why.empty() ? "" : ": " + why) << "\n";
  }
  bool same = first == second;
  all = all && same;
  std::cout << (same ? "PASS" : "FAIL") << "  12. byte-identical report for seed 42\n";
  std::cout << "two suite runs took " << std::fixed << seconds << " s; " << report.count(CheckStatus::Pass) << " pass, "
            << report.count(CheckStatus::Fail) << " fail, " << report.count(CheckStatus::Skipped) << " skipped\n";
  return all ? 0 : 1;
}
