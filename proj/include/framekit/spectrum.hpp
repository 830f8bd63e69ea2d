#ifndef FRAMEKIT_SPECTRUM_HPP
#define FRAMEKIT_SPECTRUM_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "framekit/check.hpp"
#include "framekit/compactify.hpp"
#include "framekit/construct.hpp"
#include "framekit/step_ring.hpp"

// Ring ideals of the step-function ring are handled through their cozero
// ideals: a z_c-ideal Q is determined by the lattice ideal Coz[Q] of BL, and
// membership is alpha in Q iff coz(alpha) in Coz[Q].

namespace framekit {

/// Everything the ideal machinery needs about one frame L: L itself, BL and
/// beta_0 L with its adjunction.
struct CozeroContext {
  FramePtr frame;
  Compactification beta0;
  std::vector<Element> complemented;
  FrameProfile profile;

  static CozeroContext make(FramePtr frame, const Caps& caps = {}) {
    CozeroContext ctx;
    ctx.frame = std::move(frame);
    ctx.profile = classify(*ctx.frame);
    ctx.beta0 = banaschewski(*ctx.frame, caps);
    ctx.complemented = complemented_elements(*ctx.frame);
    return ctx;
  }

  const FiniteLattice& lattice() const { return *frame; }
  const FiniteLattice& upper() const { return beta0.frame(); }
  Element r0(Element a) const { return beta0.adjunction.adjoint(a); }
};

class CozIdeal {
 public:
  CozIdeal() = default;
  CozIdeal(FramePtr frame, Ideal lattice_ideal) : frame_(std::move(frame)), ideal_(std::move(lattice_ideal)) {}

  const Ideal& lattice_ideal() const { return ideal_; }
  const FiniteLattice& frame() const { return *frame_; }

  bool contains_cozero(Element b) const { return ideal_.contains(b); }
  bool member(const StepFunction& alpha) const { return ideal_.contains(coz(alpha)); }
  bool proper() const { return !ideal_.contains(frame_->top()); }
  bool subset_of(const CozIdeal& other) const { return ideal_.subset_of(other.ideal_); }

  Element join() const { return frame_->join_all(ideal_.members()); }
  std::string name() const { return ideal_name(*frame_, ideal_); }

  friend bool operator==(const CozIdeal& a, const CozIdeal& b) { return a.ideal_ == b.ideal_; }

 private:
  FramePtr frame_;
  Ideal ideal_;  // mask over the elements of L, supported on BL
};

/// Coz^<-[J] for an ideal J of BL, given as a mask over L.
inline CozIdeal mk_ideal(const CozeroContext& ctx, const Ideal& lattice_ideal) {
  const auto& lat = ctx.lattice();
  if (lattice_ideal.universe() != lat.size()) throw Error(ErrorCode::NotAnIdeal, "mask has the wrong size");
  for (Element x : lattice_ideal.members())
    if (!lat.is_complemented(x)) throw Error(ErrorCode::NotAnIdeal, "'" + lat.name(x) + "' is not in BL");
  if (!lattice_ideal.contains(lat.bottom())) throw Error(ErrorCode::NotAnIdeal, "ideal must contain 0");
  for (Element y : lattice_ideal.members())
    for (Element x : ctx.complemented) {
      if (lat.leq(x, y) && !lattice_ideal.contains(x))
        throw Error(ErrorCode::NotAnIdeal, "not down-closed below '" + lat.name(y) + "'");
      if (lattice_ideal.contains(x) && !lattice_ideal.contains(lat.join(x, y)))
        throw Error(ErrorCode::NotAnIdeal, "not closed under '" + lat.name(x) + "' v '" + lat.name(y) + "'");
    }
  return CozIdeal(ctx.frame, lattice_ideal);
}

inline CozIdeal mk_ideal(const CozeroContext& ctx, const std::vector<Element>& members) {
  return mk_ideal(ctx, Ideal::from_members(ctx.lattice().size(), members));
}

/// The CozIdeal whose cozero ideal is the beta_0 L element `i`.
inline CozIdeal from_beta0(const CozeroContext& ctx, Element i) { return mk_ideal(ctx, ctx.beta0.members(i)); }

/// The beta_0 L element with the same members as Coz[Q].
inline Element to_beta0(const CozeroContext& ctx, const CozIdeal& q) {
  auto e = ctx.beta0.find(q.lattice_ideal().members());
  if (!e) throw Error(ErrorCode::NotAnIdeal, "cozero ideal " + q.name() + " is not an element of beta_0 L");
  return *e;
}

/// M^I_c = {alpha | r0(coz alpha) <= I}.
inline CozIdeal mc_ideal(const CozeroContext& ctx, Element i) {
  std::vector<Element> members;
  for (Element b : ctx.complemented)
    if (ctx.upper().leq(ctx.r0(b), i)) members.push_back(b);
  return mk_ideal(ctx, members);
}

/// O^I_c = {alpha | r0(coz alpha) completely below I in beta_0 L}.
inline CozIdeal oc_ideal(const CozeroContext& ctx, Element i) {
  const auto& cb = ctx.upper().completely_below();
  std::vector<Element> members;
  for (Element b : ctx.complemented)
    if (cb.contains(ctx.r0(b), i)) members.push_back(b);
  return mk_ideal(ctx, members);
}

struct IdealFlags {
  bool fixed = false;
  bool dc = false;
};

/// fixed: join of the cozeros is below 1. dc: b in J and c <= b** forces c in J.
inline IdealFlags fixed_and_dc(const CozeroContext& ctx, const CozIdeal& q) {
  const auto& lat = ctx.lattice();
  IdealFlags flags;
  flags.fixed = q.join() != lat.top();
  flags.dc = true;
  for (Element b : q.lattice_ideal().members()) {
    Element bb = lat.pseudocomplement(lat.pseudocomplement(b));
    for (Element c : ctx.complemented)
      if (lat.leq(c, bb) && !q.contains_cozero(c)) flags.dc = false;
  }
  return flags;
}

/// M_{ca} = {alpha | coz alpha <= a}.
inline CozIdeal fixed_ideal_below(const CozeroContext& ctx, Element a) {
  std::vector<Element> members;
  for (Element b : ctx.complemented)
    if (ctx.lattice().leq(b, a)) members.push_back(b);
  return mk_ideal(ctx, members);
}

/// P + Q: the ideal of BL generated by both cozero ideals.
inline CozIdeal ideal_sum(const CozeroContext& ctx, const CozIdeal& p, const CozIdeal& q) {
  auto members = p.lattice_ideal().members();
  for (Element x : q.lattice_ideal().members()) members.push_back(x);
  std::vector<Element> kept;
  for (Element x : generated_ideal(ctx.lattice(), members).members())
    if (ctx.lattice().is_complemented(x)) kept.push_back(x);
  return mk_ideal(ctx, kept);
}

struct MaximalIdeal {
  Element point;  // prime element of beta_0 L
  CozIdeal ideal;
};

/// The maximal ideals M^I_c for I ranging over Pt(beta_0 L).
inline std::vector<MaximalIdeal> maximal_ideals(const CozeroContext& ctx) {
  std::vector<MaximalIdeal> out;
  for (Element i : prime_elements(ctx.upper())) out.push_back({i, mc_ideal(ctx, i)});
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a].ideal == out[b].ideal)
        throw Error(ErrorCode::InvariantViolated, "distinct points share the ideal " + out[a].ideal.name());
  if (ctx.profile.zero_dimensional) {
    auto points = prime_elements(ctx.lattice());
    if (points.size() != out.size())
      throw Error(ErrorCode::InvariantViolated, "maximal ideals and points of L differ in number");
    for (Element p : points) {
      auto fixed = fixed_ideal_below(ctx, p);
      if (std::ranges::none_of(out, [&](const MaximalIdeal& m) { return m.ideal == fixed; }))
        throw Error(ErrorCode::InvariantViolated, "M_c at point '" + ctx.lattice().name(p) + "' is not maximal");
    }
    for (const auto& m : out)
      if (!fixed_and_dc(ctx, m.ideal).fixed)
        throw Error(ErrorCode::InvariantViolated, "maximal ideal " + m.ideal.name() + " is not fixed");
  }
  return out;
}

/// J_Q = join of r0(coz alpha) over alpha in Q.
inline Element j_of(const CozeroContext& ctx, const CozIdeal& q) {
  Element acc = ctx.upper().bottom();
  for (Element b : q.lattice_ideal().members()) acc = ctx.upper().join(acc, ctx.r0(b));
  return acc;
}

struct Bracket {
  Element point;  // J_Q
  bool lower_holds = false;  // O^{J_Q}_c subset of Q
  bool upper_holds = false;  // Q subset of M^{J_Q}_c
};

inline Bracket locate(const CozeroContext& ctx, const CozIdeal& q) {
  Bracket out;
  out.point = j_of(ctx, q);
  out.lower_holds = oc_ideal(ctx, out.point).subset_of(q);
  out.upper_holds = q.subset_of(mc_ideal(ctx, out.point));
  return out;
}

struct OmReport {
  CheckResult annihilator;      // alpha in O^I_c => alpha*beta = 0 for some beta outside M^I_c
  CheckResult converse;         // alpha outside O^I_c => no such beta
  CheckResult generated;        // alpha = rho * e_d with d in I
  CheckResult factorization;    // alpha = e_{coz alpha} * delta
  CheckResult unique_maximal;   // M^I_c is the only maximal ideal above O^I_c
  std::size_t samples_in_oc = 0;
};

/// For a prime I of beta_0 L, checks the annihilator characterization of
/// O^I_c and the idempotent factorizations on the cozero generators
/// (2 * e_b for b in BL) and on the extra samples.
inline OmReport om_lemma_check(const CozeroContext& ctx, Element i, const std::vector<StepFunction>& samples = {}) {
  const auto& lat = ctx.lattice();
  auto primes = prime_elements(ctx.upper());
  if (std::ranges::find(primes, i) == primes.end())
    throw Error(ErrorCode::HypothesisFailed, "'" + ctx.upper().name(i) + "' is not a prime of beta_0 L");
  const auto oc = oc_ideal(ctx, i);
  const auto mc = mc_ideal(ctx, i);
  const auto& cb = lat.completely_below();
  const auto one = StepFunction::constant(ctx.frame, 1);
  const auto zero = StepFunction::constant(ctx.frame, 0);

  std::vector<StepFunction> alphas;
  for (Element b : ctx.complemented) alphas.push_back(scale(idempotent(ctx.frame, b), 2));
  alphas.insert(alphas.end(), samples.begin(), samples.end());

  OmReport report;
  for (const auto& alpha : alphas) {
    const Element c = coz(alpha);
    const std::string label = "coz=" + lat.name(c);
    if (oc.member(alpha)) {
      ++report.samples_in_oc;
      const auto members = ctx.beta0.members(i);
      auto witness = std::ranges::find_if(members, [&](Element x) { return cb.contains(c, x); });
      if (witness == members.end()) {
        report.generated.merge(CheckResult::fail(label + ": no d in I with coz << d"));
        continue;
      }
      const Element d = *witness;
      auto e = idempotent(ctx.frame, d);
      if (factor_cb(alpha, e) * e != alpha) report.generated.merge(CheckResult::fail(label + ": rho*e_d != alpha"));
      auto beta = e - one;
      if (alpha * beta != zero || mc.member(beta))
        report.annihilator.merge(CheckResult::fail(label + ": e-1 does not annihilate outside M^I_c"));
      auto ec = idempotent(ctx.frame, c);
      if (ec * factor_cb(alpha, ec) != alpha) report.factorization.merge(CheckResult::fail(label));
    } else {
      for (Element b : ctx.complemented) {
        auto beta = idempotent(ctx.frame, b);
        if (!mc.member(beta) && alpha * beta == zero)
          report.converse.merge(CheckResult::fail(label + ": annihilated by e_" + lat.name(b)));
      }
    }
  }
  std::size_t above = 0;
  for (const auto& m : maximal_ideals(ctx))
    if (oc.subset_of(m.ideal)) {
      ++above;
      if (!(m.ideal == mc)) report.unique_maximal.merge(CheckResult::fail("also below " + m.ideal.name()));
    }
  if (above != 1) report.unique_maximal.merge(CheckResult::fail(std::to_string(above) + " maximal ideals above O^I_c"));
  return report;
}

struct SpectrumFrame {
  std::vector<MaximalIdeal> maximals;
  FiniteLattice opens;
  std::vector<std::uint64_t> open_sets;  // opens element -> set of maximal indices
  std::vector<Element> psi;              // opens element -> beta_0 L element

  bool psi_well_defined = false;
  bool psi_frame_homomorphism = false;
  bool psi_bijective = false;
  bool opens_zero_dimensional = false;
  bool d_preserves_meets = false;  // D(P) n D(Q) = D(P n Q)
  bool d_preserves_joins = false;  // D(P + Q) = D(P) u D(Q)
  bool lemma_q1 = false;
  bool lemma_q2 = false;
  bool lemma_q3 = false;
  bool lemma_q4 = false;

  bool theorem_b() const { return psi_well_defined && psi_frame_homomorphism && psi_bijective; }
};

/// Hull-kernel frame of the maximal spectrum, compared with beta_0 L.
inline SpectrumFrame spectrum(const CozeroContext& ctx) {
  SpectrumFrame out;
  out.maximals = maximal_ideals(ctx);
  if (out.maximals.size() > 63) throw Error(ErrorCode::TooLarge, "more than 63 maximal ideals");
  const auto& up = ctx.upper();

  // every CozIdeal is Coz^<-[J] for J in beta_0 L
  std::vector<CozIdeal> family;
  for (Element i : up.elements()) family.push_back(from_beta0(ctx, i));
  auto d_of = [&](const CozIdeal& q) {
    std::uint64_t set = 0;
    for (std::size_t m = 0; m < out.maximals.size(); ++m)
      if (!q.subset_of(out.maximals[m].ideal)) set |= std::uint64_t{1} << m;
    return set;
  };
  std::vector<std::uint64_t> d(family.size());
  std::vector<Element> j(family.size());
  for (std::size_t k = 0; k < family.size(); ++k) {
    d[k] = d_of(family[k]);
    j[k] = j_of(ctx, family[k]);
  }

  std::vector<std::string> points;
  for (const auto& m : out.maximals) points.push_back("M" + m.ideal.name());
  out.opens = detail::inclusion_lattice(points, d);
  out.open_sets.resize(out.opens.size());
  out.psi.assign(out.opens.size(), up.bottom());
  std::vector<bool> assigned(out.opens.size(), false);
  out.psi_well_defined = true;
  for (std::size_t k = 0; k < family.size(); ++k) {
    Element o = out.opens.at(detail::set_name(points, d[k]));
    out.open_sets[o.index] = d[k];
    if (assigned[o.index] && out.psi[o.index] != j[k]) out.psi_well_defined = false;
    out.psi[o.index] = j[k];
    assigned[o.index] = true;
  }

  out.psi_frame_homomorphism = is_frame_homomorphism(out.opens, up, out.psi);
  out.psi_bijective = out.opens.size() == up.size() && is_order_isomorphism(out.opens, up, out.psi);
  out.opens_zero_dimensional = classify(out.opens).zero_dimensional;

  out.d_preserves_meets = out.d_preserves_joins = true;
  out.lemma_q1 = out.lemma_q2 = out.lemma_q3 = true;
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = 0; b < family.size(); ++b) {
      const auto& p = family[a];
      const auto& q = family[b];
      CozIdeal meet(ctx.frame, p.lattice_ideal().intersect(q.lattice_ideal()));
      CozIdeal sum = ideal_sum(ctx, p, q);
      if ((d[a] & d[b]) != d_of(meet)) out.d_preserves_meets = false;
      if ((d[a] | d[b]) != d_of(sum)) out.d_preserves_joins = false;
      if (p.subset_of(q) && !up.leq(j[a], j[b])) out.lemma_q1 = false;
      if (j_of(ctx, meet) != up.meet(j[a], j[b])) out.lemma_q2 = false;
      if (j_of(ctx, sum) != up.join(j[a], j[b])) out.lemma_q3 = false;
    }
  out.lemma_q4 = std::ranges::all_of(up.elements(), [&](Element i) { return j_of(ctx, oc_ideal(ctx, i)) == i; });
  return out;
}

}  // namespace framekit

#endif  // FRAMEKIT_SPECTRUM_HPP
