#ifndef FRAMEKIT_CONSTRUCT_HPP
#define FRAMEKIT_CONSTRUCT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "framekit/lattice.hpp"

namespace framekit {

namespace detail {

using Mask = std::uint64_t;

inline std::string set_name(const std::vector<std::string>& points, Mask mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (mask & (Mask{1} << i)) {
      if (!first) out += ',';
      out += points[i];
      first = false;
    }
  return out + "}";
}

/// Lattice of the given subsets ordered by inclusion, enumerated by
/// (cardinality, mask).
inline FiniteLattice inclusion_lattice(const std::vector<std::string>& points, std::vector<Mask> sets) {
  std::ranges::sort(sets, [](Mask a, Mask b) {
    auto pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::string> names;
  names.reserve(sets.size());
  for (Mask m : sets) names.push_back(set_name(points, m));
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && (sets[i] & ~sets[j]) == 0) order.emplace_back(i, j);
  return FiniteLattice::build_indexed(std::move(names), order);
}

inline void require_distinct_points(const std::vector<std::string>& points) {
  if (points.size() > 63) throw Error(ErrorCode::InvalidParams, "at most 63 points are supported");
  std::set<std::string> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw Error(ErrorCode::InvalidParams, "duplicate point names");
}

}  // namespace detail

/// The power set of {1..n} ordered by inclusion.
inline FiniteLattice boolean_lattice(std::size_t n) {
  if (n > 10) throw Error(ErrorCode::InvalidParams, "boolean(n) supports n <= 10");
  std::vector<std::string> points;
  for (std::size_t i = 1; i <= n; ++i) points.push_back(std::to_string(i));
  std::vector<detail::Mask> sets;
  for (detail::Mask m = 0; m < (detail::Mask{1} << n); ++m) sets.push_back(m);
  return detail::inclusion_lattice(points, sets);
}

/// n-element chain 0 < m1 < ... < m(n-2) < 1.
inline FiniteLattice chain_lattice(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "chain(n) needs n >= 1");
  std::vector<std::string> names;
  names.push_back("0");
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("m" + std::to_string(i));
  if (n > 1) names.push_back("1");
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i + 1 < n; ++i) order.emplace_back(i, i + 1);
  return FiniteLattice::build_indexed(std::move(names), order);
}

/// The frame of open sets of a finite space.
inline FiniteLattice topology_lattice(const std::vector<std::string>& points,
                                      const std::vector<std::vector<std::string>>& opens) {
  detail::require_distinct_points(points);
  std::vector<detail::Mask> sets;
  for (const auto& open : opens) {
    detail::Mask m = 0;
    for (const auto& p : open) {
      auto it = std::ranges::find(points, p);
      if (it == points.end()) throw Error(ErrorCode::InvalidParams, "open set mentions unknown point '" + p + "'");
      m |= detail::Mask{1} << static_cast<std::size_t>(it - points.begin());
    }
    sets.push_back(m);
  }
  const detail::Mask full = points.empty() ? 0 : (~detail::Mask{0} >> (64 - points.size()));
  std::set<detail::Mask> family(sets.begin(), sets.end());
  if (!family.contains(0) || !family.contains(full))
    throw Error(ErrorCode::NotATopology, "opens must contain the empty set and the whole space");
  for (auto a : family)
    for (auto b : family)
      if (!family.contains(a | b) || !family.contains(a & b))
        throw Error(ErrorCode::NotATopology, "opens " + detail::set_name(points, a) + " and " +
                                                 detail::set_name(points, b) + " break closure");
  return detail::inclusion_lattice(points, std::vector<detail::Mask>(family.begin(), family.end()));
}

/// Lattice of down-sets of a finite poset (Birkhoff's representation).
inline FiniteLattice downset_lattice(const std::vector<std::string>& elements,
                                     const std::vector<std::pair<std::string, std::string>>& order) {
  detail::require_distinct_points(elements);
  const std::size_t n = elements.size();
  std::vector<detail::Mask> below(n, 0);  // strict and non-strict lower set of each element
  for (std::size_t i = 0; i < n; ++i) below[i] = detail::Mask{1} << i;
  for (const auto& [lo, hi] : order) {
    auto a = std::ranges::find(elements, lo);
    auto b = std::ranges::find(elements, hi);
    if (a == elements.end() || b == elements.end())
      throw Error(ErrorCode::InvalidParams, "order pair names an unknown element");
    below[static_cast<std::size_t>(b - elements.begin())] |= detail::Mask{1} << static_cast<std::size_t>(a - elements.begin());
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (below[i] & (detail::Mask{1} << k)) below[i] |= below[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((below[i] >> j & 1) && (below[j] >> i & 1))
        throw Error(ErrorCode::NotAPoset, "'" + elements[i] + "' and '" + elements[j] + "' form a cycle");

  std::set<detail::Mask> found{0};
  std::vector<detail::Mask> frontier{0};
  while (!frontier.empty()) {
    auto d = frontier.back();
    frontier.pop_back();
    for (std::size_t x = 0; x < n; ++x) {
      auto bit = detail::Mask{1} << x;
      if ((d & bit) || (below[x] & ~bit & ~d)) continue;
      if (found.insert(d | bit).second) frontier.push_back(d | bit);
    }
    if (found.size() > 4096) throw Error(ErrorCode::TooLarge, "more than 4096 down-sets");
  }
  return detail::inclusion_lattice(elements, std::vector<detail::Mask>(found.begin(), found.end()));
}

/// Componentwise product; elements are named "(a,b)" in row-major order.
inline FiniteLattice product_lattice(const FiniteLattice& left, const FiniteLattice& right) {
  const std::size_t m = right.size();
  std::vector<std::string> names;
  for (Element a : left.elements())
    for (Element b : right.elements()) names.push_back("(" + left.name(a) + "," + right.name(b) + ")");
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (auto [a, a2] : left.covers())
    for (Element b : right.elements()) order.emplace_back(a.index * m + b.index, a2.index * m + b.index);
  for (Element a : left.elements())
    for (auto [b, b2] : right.covers()) order.emplace_back(a.index * m + b.index, a.index * m + b2.index);
  return FiniteLattice::build_indexed(std::move(names), order);
}

}  // namespace framekit

#endif  // FRAMEKIT_CONSTRUCT_HPP
