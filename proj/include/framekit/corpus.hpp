#ifndef FRAMEKIT_CORPUS_HPP
#define FRAMEKIT_CORPUS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framekit/check.hpp"
#include "framekit/construct.hpp"
#include "framekit/step_ring.hpp"

namespace framekit {

struct CorpusEntry {
  std::string name;
  FramePtr frame;
  /// nullopt marks an error-path entry: classify must refuse it.
  std::optional<FrameProfile> expected;
};

namespace detail {

inline FrameProfile boolean_profile() { return {true, true, true, true, true}; }

/// A finite non-Boolean frame is not regular but still strongly
/// zero-dimensional (its completely-below relation only relates
/// complemented elements).
inline FrameProfile non_boolean_profile() { return {false, false, false, true, true}; }

inline FrameProfile expected_for(bool boolean) { return boolean ? boolean_profile() : non_boolean_profile(); }

/// Topologies on {1..n} up to homeomorphism, as sorted open-set masks; each
/// class is represented by its lexicographically least relabelling.
inline std::vector<std::vector<Mask>> topologies_up_to_homeomorphism(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  const Mask full = subsets - 1;
  std::vector<std::size_t> perm(n);
  std::vector<std::vector<std::size_t>> perms;
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<Mask>> classes;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    if (!(family & 1) || !(family >> full & 1)) continue;
    bool closed = true;
    for (Mask a = 0; a < subsets && closed; ++a)
      for (Mask b = 0; b < subsets && closed; ++b)
        if ((family >> a & 1) && (family >> b & 1)) closed = (family >> (a | b) & 1) && (family >> (a & b) & 1);
    if (!closed) continue;
    std::vector<Mask> best;
    for (const auto& p : perms) {
      std::vector<Mask> image;
      for (Mask s = 0; s < subsets; ++s) {
        if (!(family >> s & 1)) continue;
        Mask t = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (s >> i & 1) t |= Mask{1} << p[i];
        image.push_back(t);
      }
      std::ranges::sort(image);
      if (best.empty() || image < best) best = image;
    }
    if (std::ranges::find(classes, best) == classes.end()) classes.push_back(best);
  }
  std::ranges::sort(classes, [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return classes;
}

/// Set-level test: every open has an open complement.
inline bool topology_is_boolean(const std::vector<Mask>& opens, Mask full) {
  return std::ranges::all_of(opens, [&](Mask u) { return std::ranges::find(opens, full & ~u) != opens.end(); });
}

inline std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

inline FiniteLattice diamond() {
  return build_lattice({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline FiniteLattice pentagon() {
  return build_lattice({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

}  // namespace detail

/// The bundled corpus in a fixed order.
inline std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, FiniteLattice lattice, std::optional<FrameProfile> expected) {
    out.push_back({std::move(name), share(std::move(lattice)), expected});
  };
  add("two", chain_lattice(2), detail::boolean_profile());
  for (std::size_t n : {3, 4, 5}) add("chain" + std::to_string(n), chain_lattice(n), detail::non_boolean_profile());
  for (std::size_t n : {1, 2, 3, 4}) add("boolean" + std::to_string(n), boolean_lattice(n), detail::boolean_profile());
  add("sierpinski", topology_lattice({"1", "2"}, {{}, {"1"}, {"1", "2"}}), detail::non_boolean_profile());
  for (std::size_t n : {2, 3}) {
    const detail::Mask full = (detail::Mask{1} << n) - 1;
    const auto points = detail::point_names(n);
    std::size_t k = 0;
    for (const auto& opens : detail::topologies_up_to_homeomorphism(n)) {
      std::vector<std::vector<std::string>> named;
      for (auto m : opens) {
        std::vector<std::string> set;
        for (std::size_t i = 0; i < n; ++i)
          if (m >> i & 1) set.push_back(points[i]);
        named.push_back(std::move(set));
      }
      add("top" + std::to_string(n) + "-" + std::to_string(k++), topology_lattice(points, named),
          detail::expected_for(detail::topology_is_boolean(opens, full)));
    }
  }
  add("m3", detail::diamond(), std::nullopt);
  add("n5", detail::pentagon(), std::nullopt);
  add("boolean2xchain3", product_lattice(boolean_lattice(2), chain_lattice(3)), detail::non_boolean_profile());
  return out;
}

/// Built-in frame ids accepted wherever a frame id is expected.
inline std::optional<FiniteLattice> builtin_frame(const std::string& id) {
  auto number = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!id.starts_with(prefix) || id.size() == prefix.size()) return std::nullopt;
    auto digits = std::string_view(id).substr(prefix.size());
    if (digits.find_first_not_of("0123456789") != std::string_view::npos || digits.size() > 3) return std::nullopt;
    return std::stoul(std::string(digits));
  };
  if (auto n = number("boolean")) return boolean_lattice(*n);
  if (auto n = number("chain")) {
    if (*n < 1) return std::nullopt;
    return chain_lattice(*n);
  }
  for (auto& entry : default_corpus())
    if (entry.name == id) return *entry.frame;
  return std::nullopt;
}

/// classify() matches every expected profile; error-path entries are refused.
inline CheckResult corpus_self_check(const std::vector<CorpusEntry>& corpus) {
  CheckResult result;
  for (const auto& entry : corpus) {
    if (!entry.expected) {
      try {
        classify(*entry.frame);
        result.merge(CheckResult::fail(entry.name + ": non-distributive frame was classified"));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDistributive) result.merge(CheckResult::fail(entry.name + ": " + e.what()));
      }
      continue;
    }
    if (classify(*entry.frame) != *entry.expected) result.merge(CheckResult::fail(entry.name + ": profile differs"));
  }
  return result;
}

}  // namespace framekit

#endif  // FRAMEKIT_CORPUS_HPP
