#ifndef FRAMEKIT_LATTICE_HPP
#define FRAMEKIT_LATTICE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "framekit/error.hpp"

namespace framekit {

/// Handle to an element of one particular FiniteLattice. The index is the
/// element's position in the lattice's enumeration order.
struct Element {
  std::uint32_t index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class BelowKind { Rather, Completely, CCompletely };

constexpr std::string_view to_string(BelowKind kind) {
  switch (kind) {
    case BelowKind::Rather: return "rather";
    case BelowKind::Completely: return "completely";
    case BelowKind::CCompletely: return "c-completely";
  }
  return "?";
}

/// A binary relation on the elements of a lattice, stored as a dense matrix.
class BelowRelation {
 public:
  BelowRelation() = default;
  BelowRelation(BelowKind kind, std::size_t n) : kind_(kind), n_(n), bits_(n * n, 0) {}

  BelowKind kind() const noexcept { return kind_; }
  std::size_t universe() const noexcept { return n_; }

  bool contains(Element a, Element b) const { return bits_[a.index * n_ + b.index] != 0; }
  void set(Element a, Element b, bool on) { bits_[a.index * n_ + b.index] = on ? 1 : 0; }

  std::size_t count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

  std::vector<std::pair<Element, Element>> pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        if (bits_[a * n_ + b]) out.emplace_back(Element{a}, Element{b});
    return out;
  }

  bool subset_of(const BelowRelation& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const BelowRelation& x, const BelowRelation& y) {
    return x.n_ == y.n_ && x.bits_ == y.bits_;
  }

 private:
  BelowKind kind_ = BelowKind::Rather;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

class FiniteLattice;
BelowRelation below_relation(const FiniteLattice& lattice, BelowKind kind);

/// A finite bounded lattice with explicit order, meet and join tables.
///
/// Instances are immutable once built. Relations derived lazily (the
/// below-relations) are cached behind a once-flag, so a lattice can be shared
/// across threads.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Builds the lattice generated by `order` (reflexive-transitive closure).
  /// Element order follows `elements`.
  static FiniteLattice build(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& order);

  /// Same as build() but with order pairs given by element position.
  static FiniteLattice build_indexed(std::vector<std::string> elements,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& order);

  std::size_t size() const noexcept { return names_.size(); }

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(names_.size())) |
           std::views::transform([](std::uint32_t i) { return Element{i}; });
  }

  const std::string& name(Element e) const { return names_.at(e.index); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Element> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return Element{it->second};
  }

  Element at(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw Error(ErrorCode::InvalidParams, "unknown element '" + std::string(name) + "'");
  }

  bool leq(Element a, Element b) const { return leq_[a.index * size() + b.index] != 0; }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  Element meet(Element a, Element b) const { return Element{meet_[a.index * size() + b.index]}; }
  Element join(Element a, Element b) const { return Element{join_[a.index * size() + b.index]}; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  bool is_distributive() const noexcept { return distributive_; }

  template <std::ranges::input_range R>
  Element join_all(const R& range) const {
    Element acc = bottom_;
    for (Element e : range) acc = join(acc, e);
    return acc;
  }

  template <std::ranges::input_range R>
  Element meet_all(const R& range) const {
    Element acc = top_;
    for (Element e : range) acc = meet(acc, e);
    return acc;
  }

  /// a* ; requires a distributive lattice.
  Element pseudocomplement(Element a) const {
    require_distributive("pseudocomplement");
    return Element{pseudo_[a.index]};
  }

  bool is_complemented(Element a) const { return join(a, pseudocomplement(a)) == top_; }

  void require_distributive(std::string_view operation) const {
    if (!distributive_)
      throw Error(ErrorCode::NotDistributive, std::string(operation) + " needs a distributive lattice");
  }

  /// Cached completely-below relation (see below_relation).
  const BelowRelation& completely_below() const;
  const BelowRelation& rather_below() const;

  /// Hasse diagram edges (covering pairs a < b), sorted by (a, b).
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a : elements())
      for (Element b : elements()) {
        if (!lt(a, b)) continue;
        bool covering = true;
        for (Element c : elements())
          if (lt(a, c) && lt(c, b)) {
            covering = false;
            break;
          }
        if (covering) out.emplace_back(a, b);
      }
    return out;
  }

  /// Same names and the same order.
  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return x.names_ == y.names_ && x.leq_ == y.leq_;
  }

 private:
  struct Cache {
    std::once_flag rather_once;
    std::once_flag completely_once;
    BelowRelation rather;
    BelowRelation completely;
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> pseudo_;
  Element bottom_{};
  Element top_{};
  bool distributive_ = false;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline FiniteLattice FiniteLattice::build(
    std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& order) {
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < elements.size(); ++i) position.emplace(elements[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(order.size());
  for (const auto& [lo, hi] : order) {
    auto a = position.find(lo);
    auto b = position.find(hi);
    if (a == position.end() || b == position.end())
      throw Error(ErrorCode::InvalidParams, "order pair (" + lo + ", " + hi + ") names an unknown element");
    indexed.emplace_back(a->second, b->second);
  }
  return build_indexed(std::move(elements), indexed);
}

inline FiniteLattice FiniteLattice::build_indexed(
    std::vector<std::string> elements, const std::vector<std::pair<std::size_t, std::size_t>>& order) {
  if (elements.empty()) throw Error(ErrorCode::InvalidParams, "a lattice needs at least one element");
  FiniteLattice lat;
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!lat.index_.emplace(elements[i], static_cast<std::uint32_t>(i)).second)
      throw Error(ErrorCode::InvalidParams, "duplicate element '" + elements[i] + "'");
  }
  lat.names_ = std::move(elements);

  auto& leq = lat.leq_;
  leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : order) {
    if (a >= n || b >= n) throw Error(ErrorCode::InvalidParams, "order pair index out of range");
    leq[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(ErrorCode::NotAPoset, "'" + lat.names_[i] + "' and '" + lat.names_[j] +
                                              "' are mutually below each other");

  // greatest lower / least upper bound of each pair by candidate scan
  auto bound = [&](std::size_t a, std::size_t b, bool lower) -> std::optional<std::uint32_t> {
    auto below = [&](std::size_t x, std::size_t y) { return lower ? leq[x * n + y] != 0 : leq[y * n + x] != 0; };
    std::optional<std::size_t> best;
    for (std::size_t x = 0; x < n; ++x) {
      if (!(below(x, a) && below(x, b))) continue;
      if (!best || below(*best, x)) best = x;
    }
    if (!best) return std::nullopt;
    for (std::size_t x = 0; x < n; ++x)
      if (below(x, a) && below(x, b) && !below(x, *best)) return std::nullopt;
    return static_cast<std::uint32_t>(*best);
  };
  lat.meet_.assign(n * n, 0);
  lat.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto m = bound(a, b, true);
      auto j = bound(a, b, false);
      if (!m || !j)
        throw Error(ErrorCode::NotALattice, "'" + lat.names_[a] + "' and '" + lat.names_[b] + "' lack a " +
                                                (m ? "least upper" : "greatest lower") + " bound");
      lat.meet_[a * n + b] = lat.meet_[b * n + a] = *m;
      lat.join_[a * n + b] = lat.join_[b * n + a] = *j;
    }

  std::optional<std::size_t> bot, top;
  for (std::size_t x = 0; x < n; ++x) {
    bool is_bot = true, is_top = true;
    for (std::size_t y = 0; y < n; ++y) {
      is_bot = is_bot && leq[x * n + y];
      is_top = is_top && leq[y * n + x];
    }
    if (is_bot) bot = x;
    if (is_top) top = x;
  }
  if (!bot || !top) throw Error(ErrorCode::Unbounded, "no global bottom or top");
  lat.bottom_ = Element{static_cast<std::uint32_t>(*bot)};
  lat.top_ = Element{static_cast<std::uint32_t>(*top)};

  lat.distributive_ = true;
  for (std::size_t a = 0; a < n && lat.distributive_; ++a)
    for (std::size_t b = 0; b < n && lat.distributive_; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = lat.meet_[a * n + lat.join_[b * n + c]];
        auto rhs = lat.join_[lat.meet_[a * n + b] * n + lat.meet_[a * n + c]];
        if (lhs != rhs) {
          lat.distributive_ = false;
          break;
        }
      }

  if (lat.distributive_) {
    // a* is the join of everything disjoint from a
    lat.pseudo_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      std::uint32_t acc = lat.bottom_.index;
      for (std::size_t x = 0; x < n; ++x)
        if (lat.meet_[a * n + x] == lat.bottom_.index) acc = lat.join_[acc * n + x];
      lat.pseudo_[a] = acc;
    }
  }
  return lat;
}

/// Shorthand for FiniteLattice::build.
inline FiniteLattice build_lattice(std::vector<std::string> elements,
                                   const std::vector<std::pair<std::string, std::string>>& order) {
  return FiniteLattice::build(std::move(elements), order);
}

/// Relative pseudocomplement a -> b = join of all x with a ^ x <= b.
inline Element heyting(const FiniteLattice& lattice, Element a, Element b) {
  lattice.require_distributive("heyting");
  Element acc = lattice.bottom();
  for (Element x : lattice.elements())
    if (lattice.leq(lattice.meet(a, x), b)) acc = lattice.join(acc, x);
  return acc;
}

inline Element pseudocomplement(const FiniteLattice& lattice, Element a) { return heyting(lattice, a, lattice.bottom()); }

namespace detail {

/// Deletes pairs without an interpolant until nothing changes. The result is
/// the greatest interpolative subrelation of the input, whatever the scan order.
inline void prune_to_interpolative(const FiniteLattice& lattice, BelowRelation& rel, bool reverse_scan) {
  const auto n = static_cast<std::uint32_t>(lattice.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t step = 0; step < n * n; ++step) {
      std::uint32_t idx = reverse_scan ? n * n - 1 - step : step;
      Element a{idx / n}, b{idx % n};
      if (!rel.contains(a, b)) continue;
      bool interpolated = false;
      for (Element c : lattice.elements())
        if (rel.contains(a, c) && rel.contains(c, b)) {
          interpolated = true;
          break;
        }
      if (!interpolated) {
        rel.set(a, b, false);
        changed = true;
      }
    }
  }
}

}  // namespace detail

/// Greatest interpolative subrelation of rather-below, with a selectable scan
/// order for the pruning loop.
inline BelowRelation completely_below_pruned(const FiniteLattice& lattice, bool reverse_scan) {
  BelowRelation rel = below_relation(lattice, BelowKind::Rather);
  BelowRelation out(BelowKind::Completely, lattice.size());
  for (auto [a, b] : rel.pairs()) out.set(a, b, true);
  detail::prune_to_interpolative(lattice, out, reverse_scan);
  return out;
}

inline std::vector<Element> complemented_elements(const FiniteLattice& lattice) {
  lattice.require_distributive("complemented_elements");
  std::vector<Element> out;
  for (Element a : lattice.elements())
    if (lattice.is_complemented(a)) out.push_back(a);
  return out;
}

inline BelowRelation below_relation(const FiniteLattice& lattice, BelowKind kind) {
  lattice.require_distributive("below_relation");
  BelowRelation rel(kind, lattice.size());
  switch (kind) {
    case BelowKind::Rather:
      for (Element a : lattice.elements())
        for (Element b : lattice.elements())
          rel.set(a, b, lattice.join(lattice.pseudocomplement(a), b) == lattice.top());
      break;
    case BelowKind::Completely:
      return completely_below_pruned(lattice, false);
    case BelowKind::CCompletely: {
      auto boolean_part = complemented_elements(lattice);
      for (Element a : lattice.elements())
        for (Element b : lattice.elements())
          rel.set(a, b, std::ranges::any_of(boolean_part, [&](Element d) {
                    return lattice.leq(a, d) && lattice.leq(d, b);
                  }));
      break;
    }
  }
  return rel;
}

inline const BelowRelation& FiniteLattice::rather_below() const {
  std::call_once(cache_->rather_once, [this] { cache_->rather = below_relation(*this, BelowKind::Rather); });
  return cache_->rather;
}

inline const BelowRelation& FiniteLattice::completely_below() const {
  std::call_once(cache_->completely_once,
                 [this] { cache_->completely = below_relation(*this, BelowKind::Completely); });
  return cache_->completely;
}

/// Pt(L): every p != 1 with a ^ b <= p  =>  a <= p or b <= p.
inline std::vector<Element> prime_elements(const FiniteLattice& lattice) {
  std::vector<Element> out;
  for (Element p : lattice.elements()) {
    if (p == lattice.top()) continue;
    bool prime = true;
    for (Element a : lattice.elements()) {
      if (lattice.leq(a, p)) continue;
      for (Element b : lattice.elements())
        if (!lattice.leq(b, p) && lattice.leq(lattice.meet(a, b), p)) {
          prime = false;
          break;
        }
      if (!prime) break;
    }
    if (prime) out.push_back(p);
  }
  return out;
}

struct FrameProfile {
  bool regular = false;
  bool completely_regular = false;
  bool zero_dimensional = false;
  bool strongly_zero_dimensional = false;
  bool compact = true;  // every finite frame

  friend bool operator==(const FrameProfile&, const FrameProfile&) = default;
};

inline FrameProfile classify(const FiniteLattice& lattice) {
  lattice.require_distributive("classify");
  const auto& rather = lattice.rather_below();
  const auto& completely = lattice.completely_below();
  const auto boolean_part = complemented_elements(lattice);

  auto generated_by = [&](auto&& pred) {
    for (Element a : lattice.elements()) {
      Element acc = lattice.bottom();
      for (Element x : lattice.elements())
        if (pred(x, a)) acc = lattice.join(acc, x);
      if (acc != a) return false;
    }
    return true;
  };

  FrameProfile profile;
  profile.regular = generated_by([&](Element x, Element a) { return rather.contains(x, a); });
  profile.completely_regular = generated_by([&](Element x, Element a) { return completely.contains(x, a); });
  profile.zero_dimensional = generated_by([&](Element x, Element a) {
    return lattice.leq(x, a) && lattice.is_complemented(x);
  });
  profile.strongly_zero_dimensional = true;
  for (auto [a, b] : completely.pairs()) {
    bool witnessed = std::ranges::any_of(boolean_part, [&](Element c) { return lattice.leq(a, c) && lattice.leq(c, b); });
    if (!witnessed) {
      profile.strongly_zero_dimensional = false;
      break;
    }
  }
  profile.compact = true;
  return profile;
}

/// Preserves 0, 1, binary meets and binary joins (all joins, at finite scale).
inline bool is_frame_homomorphism(const FiniteLattice& from, const FiniteLattice& to, std::span<const Element> map) {
  if (map.size() != from.size()) return false;
  auto f = [&](Element e) { return map[e.index]; };
  if (f(from.bottom()) != to.bottom() || f(from.top()) != to.top()) return false;
  for (Element a : from.elements())
    for (Element b : from.elements()) {
      if (f(from.meet(a, b)) != to.meet(f(a), f(b))) return false;
      if (f(from.join(a, b)) != to.join(f(a), f(b))) return false;
    }
  return true;
}

/// Bijective, order preserving and reflecting.
inline bool is_order_isomorphism(const FiniteLattice& from, const FiniteLattice& to, std::span<const Element> map) {
  if (map.size() != from.size() || from.size() != to.size()) return false;
  std::vector<bool> hit(to.size(), false);
  for (Element e : from.elements()) {
    if (map[e.index].index >= to.size() || hit[map[e.index].index]) return false;
    hit[map[e.index].index] = true;
  }
  for (Element a : from.elements())
    for (Element b : from.elements())
      if (from.leq(a, b) != to.leq(map[a.index], map[b.index])) return false;
  return true;
}

}  // namespace framekit

#endif  // FRAMEKIT_LATTICE_HPP
