#ifndef FRAMEKIT_COMPACTIFY_HPP
#define FRAMEKIT_COMPACTIFY_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framekit/check.hpp"
#include "framekit/ideals.hpp"
#include "framekit/lattice.hpp"

namespace framekit {

/// A join map from `upper` onto `lower` together with its right adjoint.
struct Adjunction {
  FiniteLattice upper;
  FiniteLattice lower;
  std::vector<Element> join_map;       // indexed by upper
  std::vector<Element> right_adjoint;  // indexed by lower

  Element join(Element upper_element) const { return join_map.at(upper_element.index); }
  Element adjoint(Element lower_element) const { return right_adjoint.at(lower_element.index); }
};

/// join(I) <= a  iff  I <= adjoint(a), for every pair.
inline bool satisfies_galois(const Adjunction& adj) {
  for (Element i : adj.upper.elements())
    for (Element a : adj.lower.elements())
      if (adj.lower.leq(adj.join(i), a) != adj.upper.leq(i, adj.adjoint(a))) return false;
  return true;
}

inline bool is_dense(const Adjunction& adj) {
  for (Element i : adj.upper.elements())
    if (adj.join(i) == adj.lower.bottom() && i != adj.upper.bottom()) return false;
  return true;
}

inline bool is_onto(const Adjunction& adj) {
  std::vector<bool> hit(adj.lower.size(), false);
  for (Element i : adj.upper.elements()) hit[adj.join(i).index] = true;
  return std::ranges::all_of(hit, [](bool b) { return b; });
}

/// A compactification realized as an ideal lattice over a carrier that sits
/// inside L (BL for the Banaschewski construction, L itself for Stone-Cech).
struct Compactification {
  IdealLattice ideals;
  std::vector<Element> carrier_to_lower;
  Adjunction adjunction;

  const FiniteLattice& frame() const { return adjunction.upper; }
  const FiniteLattice& base() const { return adjunction.lower; }

  /// Members of ideal `i`, as elements of L.
  std::vector<Element> members(Element i) const {
    std::vector<Element> out;
    for (Element c : ideals.ideal(i).members()) out.push_back(carrier_to_lower[c.index]);
    return out;
  }

  /// Whether the L-element `a` lies in ideal `i`.
  bool contains(Element i, Element a) const {
    for (Element c : ideals.ideal(i).members())
      if (carrier_to_lower[c.index] == a) return true;
    return false;
  }

  /// Frame element for the ideal of carrier elements given as L-elements.
  std::optional<Element> find(const std::vector<Element>& lower_members) const {
    std::vector<std::uint8_t> mask(ideals.carrier.size(), 0);
    for (Element a : lower_members) {
      auto it = std::ranges::find(carrier_to_lower, a);
      if (it == carrier_to_lower.end()) return std::nullopt;
      mask[static_cast<std::size_t>(it - carrier_to_lower.begin())] = 1;
    }
    return ideals.find(Ideal(std::move(mask)));
  }
};

namespace detail {

inline void require_lattice_cap(const FiniteLattice& lattice, const Caps& caps) {
  if (lattice.size() > caps.lattice)
    throw Error(ErrorCode::TooLarge, "lattice with " + std::to_string(lattice.size()) + " elements exceeds cap " +
                                         std::to_string(caps.lattice));
}

inline Compactification assemble(const FiniteLattice& base, IdealLattice ideals, std::vector<Element> carrier_to_lower,
                                 const std::function<std::vector<Element>(Element)>& adjoint_members) {
  Compactification out;
  out.carrier_to_lower = std::move(carrier_to_lower);
  out.ideals = std::move(ideals);
  out.adjunction.upper = out.ideals.frame;
  out.adjunction.lower = base;
  for (Element i : out.ideals.frame.elements()) out.adjunction.join_map.push_back(base.join_all(out.members(i)));
  for (Element a : base.elements()) {
    auto members = adjoint_members(a);
    auto found = out.find(members);
    if (!found) {
      std::string listed;
      for (Element m : members) listed += base.name(m) + " ";
      throw Error(ErrorCode::NotAnIdeal, "right adjoint at '" + base.name(a) + "' = { " + listed + "} is not in the frame");
    }
    out.adjunction.right_adjoint.push_back(*found);
  }
  if (!satisfies_galois(out.adjunction))
    throw Error(ErrorCode::InvariantViolated, "join map and right adjoint do not form a Galois connection");
  return out;
}

}  // namespace detail

/// beta_0 L: the ideals of BL, with j0 = join and r0(a) = (down a) meet BL.
inline Compactification banaschewski(const FiniteLattice& lattice, const Caps& caps = {}) {
  lattice.require_distributive("banaschewski");
  detail::require_lattice_cap(lattice, caps);
  Sublattice boolean = boolean_part(lattice);
  IdealLattice ideals = ideal_frame(boolean.lattice, caps);
  return detail::assemble(lattice, std::move(ideals), boolean.to_parent, [&](Element a) {
    std::vector<Element> out;
    for (Element x : boolean.to_parent)
      if (lattice.leq(x, a)) out.push_back(x);
    return out;
  });
}

inline bool is_completely_regular_ideal(const FiniteLattice& lattice, const Ideal& ideal) {
  const auto& cb = lattice.completely_below();
  for (Element a : ideal.members()) {
    bool witnessed = false;
    for (Element b : ideal.members())
      if (cb.contains(a, b)) {
        witnessed = true;
        break;
      }
    if (!witnessed) return false;
  }
  return true;
}

/// beta L: completely regular ideals of L, with r(a) = {x | x << a}.
inline Compactification stone_cech_finite(const FiniteLattice& lattice, const Caps& caps = {}) {
  lattice.require_distributive("stone_cech_finite");
  detail::require_lattice_cap(lattice, caps);
  std::vector<Ideal> regular;
  for (auto& ideal : enumerate_ideals(lattice, caps))
    if (is_completely_regular_ideal(lattice, ideal)) regular.push_back(std::move(ideal));
  IdealLattice ideals = ideal_lattice_of(lattice, std::move(regular), caps);
  std::vector<Element> identity(lattice.elements().begin(), lattice.elements().end());
  const auto& cb = lattice.completely_below();
  return detail::assemble(lattice, std::move(ideals), identity, [&](Element a) {
    std::vector<Element> out;
    for (Element x : lattice.elements())
      if (cb.contains(x, a)) out.push_back(x);
    return out;
  });
}

/// The comparison map f(I) = down-closure of I from beta_0 L into beta L.
struct CsComparison {
  std::vector<Element> map;  // beta_0 L element -> beta L element
  bool completely_regular = false;  // hypothesis of the equivalence
  bool strongly_zero_dimensional = false;
  bool is_frame_homomorphism = false;
  bool is_isomorphism = false;
  Compactification beta0;
  Compactification beta;
};

inline CsComparison cs_comparison(const FiniteLattice& lattice, const Caps& caps = {}) {
  CsComparison out;
  auto profile = classify(lattice);
  out.completely_regular = profile.completely_regular;
  out.strongly_zero_dimensional = profile.strongly_zero_dimensional;
  out.beta0 = banaschewski(lattice, caps);
  out.beta = stone_cech_finite(lattice, caps);
  for (Element i : out.beta0.frame().elements()) {
    std::vector<Element> down;
    auto generators = out.beta0.members(i);
    for (Element x : lattice.elements())
      if (std::ranges::any_of(generators, [&](Element a) { return lattice.leq(x, a); })) down.push_back(x);
    auto target = out.beta.find(down);
    if (!target) throw Error(ErrorCode::InvariantViolated, "down-closure of an ideal of BL is not completely regular");
    out.map.push_back(*target);
  }
  out.is_frame_homomorphism = is_frame_homomorphism(out.beta0.frame(), out.beta.frame(), out.map);
  out.is_isomorphism = out.is_frame_homomorphism && is_order_isomorphism(out.beta0.frame(), out.beta.frame(), out.map);
  return out;
}

/// Elements of L that are joins of complemented elements (the cozero part
/// Coz_c L at finite scale).
inline std::vector<Element> joins_of_complemented(const FiniteLattice& lattice) {
  std::set<Element> joins{lattice.bottom()};
  auto complemented = complemented_elements(lattice);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element j : std::vector<Element>(joins.begin(), joins.end()))
      for (Element c : complemented) grew = joins.insert(lattice.join(j, c)).second || grew;
  }
  return {joins.begin(), joins.end()};
}

struct LemmaC1Report {
  std::vector<CheckResult> parts;  // parts[k] is part k+1
  CheckResult prop_aa;
  /// Whether join(r0(a)) = a for *every* a, outside the stated hypothesis.
  bool part1_all_elements = false;
};

/// Exhaustive check of the nine properties of the right adjoint r0 of
/// j0 : beta_0 L -> L, plus binary-join preservation on Coz_c L.
inline LemmaC1Report check_lemma_c1(const FiniteLattice& lattice, const Caps& caps = {}) {
  auto beta0 = banaschewski(lattice, caps);
  const auto& up = beta0.frame();
  const auto& adj = beta0.adjunction;
  const auto& cb_up = up.completely_below();
  const auto& cb = lattice.completely_below();
  const bool zero_dim = classify(lattice).zero_dimensional;
  const auto complemented = complemented_elements(lattice);
  const auto cozero = joins_of_complemented(lattice);
  auto n = [&](Element a) { return lattice.name(a); };
  auto nu = [&](Element i) { return up.name(i); };
  auto r0 = [&](Element a) { return adj.adjoint(a); };
  auto sup = [&](Element i) { return adj.join(i); };
  auto exists_in = [&](Element j, auto&& pred) {
    return std::ranges::any_of(beta0.members(j), pred);
  };

  LemmaC1Report report;
  report.parts.resize(9);

  // 1. a a join of complemented elements => join r0(a) = a
  for (Element a : cozero)
    if (sup(r0(a)) != a) report.parts[0].merge(CheckResult::fail("a=" + n(a)));
  report.part1_all_elements = std::ranges::all_of(lattice.elements(), [&](Element a) { return sup(r0(a)) == a; });

  // 2. s in Coz_c L => join r0(s) = s
  for (Element s : cozero)
    if (sup(r0(s)) != s) report.parts[1].merge(CheckResult::fail("s=" + n(s)));

  // 3. join r0(a) = a => r0(a*) = r0(a)*
  for (Element a : lattice.elements())
    if (sup(r0(a)) == a && r0(lattice.pseudocomplement(a)) != up.pseudocomplement(r0(a)))
      report.parts[2].merge(CheckResult::fail("a=" + n(a)));

  // 4. zero-dimensional => r0 commutes with pseudocomplement
  if (!zero_dim) {
    report.parts[3] = CheckResult::skip("zeroDimensional");
  } else {
    for (Element a : lattice.elements())
      if (r0(lattice.pseudocomplement(a)) != up.pseudocomplement(r0(a)))
        report.parts[3].merge(CheckResult::fail("a=" + n(a)));
  }

  // 5. a, b in BL => r0(a v b) = r0(a) v r0(b)
  for (Element a : complemented)
    for (Element b : complemented)
      if (r0(lattice.join(a, b)) != up.join(r0(a), r0(b)))
        report.parts[4].merge(CheckResult::fail("a=" + n(a) + ", b=" + n(b)));

  // 6. I << J in beta_0 L => some b in J with join I << b
  for (Element i : up.elements())
    for (Element j : up.elements())
      if (cb_up.contains(i, j) && !exists_in(j, [&](Element b) { return cb.contains(sup(i), b); }))
        report.parts[5].merge(CheckResult::fail("I=" + nu(i) + ", J=" + nu(j)));

  // 7. s in Coz_c L: r0(s) << J iff some b in J with s << b
  for (Element s : cozero)
    for (Element j : up.elements())
      if (cb_up.contains(r0(s), j) != exists_in(j, [&](Element b) { return cb.contains(s, b); }))
        report.parts[6].merge(CheckResult::fail("s=" + n(s) + ", J=" + nu(j)));

  // 8. a in BL: r0(a) << J iff a in J
  for (Element a : complemented)
    for (Element j : up.elements())
      if (cb_up.contains(r0(a), j) != beta0.contains(j, a))
        report.parts[7].merge(CheckResult::fail("a=" + n(a) + ", J=" + nu(j)));

  // 9. zero-dimensional: r0(a) << J iff some b in J with a << b
  if (!zero_dim) {
    report.parts[8] = CheckResult::skip("zeroDimensional");
  } else {
    for (Element a : lattice.elements())
      for (Element j : up.elements())
        if (cb_up.contains(r0(a), j) != exists_in(j, [&](Element b) { return cb.contains(a, b); }))
          report.parts[8].merge(CheckResult::fail("a=" + n(a) + ", J=" + nu(j)));
  }

  if (!zero_dim) {
    report.prop_aa = CheckResult::skip("zeroDimensional");
  } else {
    for (Element a : cozero)
      for (Element b : cozero)
        if (r0(lattice.join(a, b)) != up.join(r0(a), r0(b)))
          report.prop_aa.merge(CheckResult::fail("a=" + n(a) + ", b=" + n(b)));
  }
  return report;
}

}  // namespace framekit

#endif  // FRAMEKIT_COMPACTIFY_HPP
