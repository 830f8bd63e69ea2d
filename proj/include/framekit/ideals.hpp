#ifndef FRAMEKIT_IDEALS_HPP
#define FRAMEKIT_IDEALS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "framekit/lattice.hpp"

namespace framekit {

/// Enumeration limits. `ideals` bounds the carrier of any ideal enumeration,
/// `lattice` bounds the size of lattices handed to table-based constructions.
struct Caps {
  std::size_t ideals = 20;
  std::size_t lattice = 256;
};

/// A subset of a lattice's elements, stored as a membership mask. Whether it
/// really is an ideal is checked by is_ideal(); constructors that hand out
/// Ideal values guarantee it.
class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::vector<std::uint8_t> mask) : mask_(std::move(mask)) {}

  static Ideal from_members(std::size_t universe, const std::vector<Element>& members) {
    std::vector<std::uint8_t> mask(universe, 0);
    for (Element e : members) mask.at(e.index) = 1;
    return Ideal(std::move(mask));
  }

  bool contains(Element e) const { return e.index < mask_.size() && mask_[e.index] != 0; }
  std::size_t universe() const noexcept { return mask_.size(); }
  const std::vector<std::uint8_t>& mask() const noexcept { return mask_; }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < mask_.size(); ++i)
      if (mask_[i]) out.push_back(Element{i});
    return out;
  }

  bool subset_of(const Ideal& other) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
      if (mask_[i] && !other.contains(Element{static_cast<std::uint32_t>(i)})) return false;
    return true;
  }

  Ideal intersect(const Ideal& other) const {
    auto mask = mask_;
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = mask[i] && other.contains(Element{static_cast<std::uint32_t>(i)});
    return Ideal(std::move(mask));
  }

  friend auto operator<=>(const Ideal&, const Ideal&) = default;

 private:
  std::vector<std::uint8_t> mask_;
};

inline bool is_ideal(const FiniteLattice& lattice, const Ideal& candidate) {
  if (candidate.universe() != lattice.size() || !candidate.contains(lattice.bottom())) return false;
  for (Element y : lattice.elements()) {
    if (!candidate.contains(y)) continue;
    for (Element x : lattice.elements()) {
      if (lattice.leq(x, y) && !candidate.contains(x)) return false;
      if (candidate.contains(x) && !candidate.contains(lattice.join(x, y))) return false;
    }
  }
  return true;
}

/// Smallest ideal containing the given elements: close under finite joins, then
/// take the down-set.
inline Ideal generated_ideal(const FiniteLattice& lattice, const std::vector<Element>& generators) {
  std::set<Element> joins{lattice.bottom()};
  std::vector<Element> pending(generators.begin(), generators.end());
  while (!pending.empty()) {
    Element g = pending.back();
    pending.pop_back();
    if (joins.contains(g)) continue;
    std::vector<Element> fresh{g};
    for (Element j : joins) fresh.push_back(lattice.join(j, g));
    joins.insert(g);
    for (Element f : fresh)
      if (!joins.contains(f)) pending.push_back(f);
  }
  std::vector<std::uint8_t> mask(lattice.size(), 0);
  for (Element x : lattice.elements())
    for (Element j : joins)
      if (lattice.leq(x, j)) {
        mask[x.index] = 1;
        break;
      }
  return Ideal(std::move(mask));
}

inline Ideal principal_ideal(const FiniteLattice& lattice, Element a) {
  std::vector<std::uint8_t> mask(lattice.size(), 0);
  for (Element x : lattice.elements()) mask[x.index] = lattice.leq(x, a) ? 1 : 0;
  return Ideal(std::move(mask));
}

/// Maximal members of an ideal, used for display names.
inline std::vector<Element> maximal_members(const FiniteLattice& lattice, const Ideal& ideal) {
  std::vector<Element> out;
  for (Element x : ideal.members()) {
    bool maximal = true;
    for (Element y : ideal.members())
      if (lattice.lt(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

inline std::string ideal_name(const FiniteLattice& lattice, const Ideal& ideal) {
  auto tops = maximal_members(lattice, ideal);
  std::vector<std::string> names;
  for (Element e : tops) names.push_back(lattice.name(e));
  std::ranges::sort(names);
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "]";
}

/// All ideals of a finite lattice, found by closing {0} under "add one more
/// generator". Listed in the enumeration order of their joins.
inline std::vector<Ideal> enumerate_ideals(const FiniteLattice& lattice, const Caps& caps = {}) {
  if (lattice.size() > caps.ideals)
    throw Error(ErrorCode::TooLarge, "ideal enumeration over " + std::to_string(lattice.size()) +
                                         " elements exceeds cap " + std::to_string(caps.ideals));
  std::set<Ideal> found;
  std::vector<Ideal> frontier{generated_ideal(lattice, {})};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    Ideal current = std::move(frontier.back());
    frontier.pop_back();
    auto members = current.members();
    for (Element a : lattice.elements()) {
      if (current.contains(a)) continue;
      auto gens = members;
      gens.push_back(a);
      Ideal next = generated_ideal(lattice, gens);
      if (found.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Ideal> out(found.begin(), found.end());
  std::ranges::stable_sort(out, [&](const Ideal& x, const Ideal& y) {
    return lattice.join_all(x.members()).index < lattice.join_all(y.members()).index;
  });
  return out;
}

/// A lattice whose elements are ideals of a carrier lattice, ordered by inclusion.
struct IdealLattice {
  FiniteLattice carrier;
  FiniteLattice frame;
  std::vector<Ideal> ideals;  // ideals[i] is frame element i

  const Ideal& ideal(Element e) const { return ideals.at(e.index); }

  std::optional<Element> find(const Ideal& ideal) const {
    auto it = lookup.find(ideal.mask());
    if (it == lookup.end()) return std::nullopt;
    return Element{it->second};
  }

  Element element_of(const Ideal& ideal) const {
    if (auto e = find(ideal)) return *e;
    throw Error(ErrorCode::NotAnIdeal, "subset " + ideal_name(carrier, ideal) + " is not an element of this ideal lattice");
  }

  /// a -> principal ideal of a
  Element embed(Element a) const { return element_of(principal_ideal(carrier, a)); }

  std::map<std::vector<std::uint8_t>, std::uint32_t> lookup;
};

/// Ideal lattice on an explicit family of ideals (all ideals, or a filtered subfamily).
inline IdealLattice ideal_lattice_of(const FiniteLattice& carrier, std::vector<Ideal> family, const Caps& caps = {}) {
  if (family.size() > caps.lattice)
    throw Error(ErrorCode::TooLarge, "ideal lattice with " + std::to_string(family.size()) +
                                         " elements exceeds cap " + std::to_string(caps.lattice));
  IdealLattice out;
  out.carrier = carrier;
  std::vector<std::string> names;
  for (const auto& ideal : family) names.push_back(ideal_name(carrier, ideal));
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (i != j && family[i].subset_of(family[j])) order.emplace_back(i, j);
  out.frame = FiniteLattice::build_indexed(std::move(names), order);
  for (std::uint32_t i = 0; i < family.size(); ++i) out.lookup.emplace(family[i].mask(), i);
  out.ideals = std::move(family);
  return out;
}

/// Id(A): every ideal of A ordered by inclusion.
inline IdealLattice ideal_frame(const FiniteLattice& carrier, const Caps& caps = {}) {
  return ideal_lattice_of(carrier, enumerate_ideals(carrier, caps), caps);
}

/// A sublattice together with its inclusion into the parent lattice.
struct Sublattice {
  FiniteLattice lattice;
  std::vector<Element> to_parent;
  std::vector<std::optional<Element>> from_parent;
};

/// BL as a lattice in its own right; element names are inherited from L.
inline Sublattice boolean_part(const FiniteLattice& lattice) {
  std::vector<Element> members;
  for (Element a : lattice.elements())
    if (lattice.is_complemented(a)) members.push_back(a);
  Sublattice out;
  std::vector<std::string> names;
  for (Element a : members) names.push_back(lattice.name(a));
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (i != j && lattice.leq(members[i], members[j])) order.emplace_back(i, j);
  out.lattice = FiniteLattice::build_indexed(std::move(names), order);
  out.to_parent = members;
  out.from_parent.assign(lattice.size(), std::nullopt);
  for (std::uint32_t i = 0; i < members.size(); ++i) out.from_parent[members[i].index] = Element{i};
  return out;
}

}  // namespace framekit

#endif  // FRAMEKIT_IDEALS_HPP
