#ifndef FRAMEKIT_VERIFY_HPP
#define FRAMEKIT_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "framekit/compactify.hpp"
#include "framekit/corpus.hpp"
#include "framekit/json_io.hpp"
#include "framekit/random.hpp"
#include "framekit/spectrum.hpp"
#include "framekit/step_ring.hpp"

namespace framekit {

struct SuiteOptions {
  std::uint64_t seed = 42;
  Caps caps;
  std::vector<std::string> frames;  // empty: the whole corpus
  std::size_t clean_samples = 1000;
  std::size_t interval_samples = 300;
  std::size_t factor_samples = 500;
  std::size_t annihilator_samples = 500;
  std::size_t generator_samples = 8;  // extra random alpha per prime in om/ig
};

struct SuiteEntry {
  std::string theorem;
  std::string frame;
  CheckResult result;
  std::size_t cases = 0;
  double millis = 0;  // human table only
};

struct SuiteReport {
  std::uint64_t seed = 0;
  Caps caps;
  CheckResult self_check;
  std::vector<SuiteEntry> entries;

  std::size_t count(CheckStatus status) const {
    return static_cast<std::size_t>(std::ranges::count_if(entries, [&](const SuiteEntry& e) { return e.result.status == status; }));
  }
  bool ok() const { return !self_check.failed() && count(CheckStatus::Fail) == 0; }
};

/// Theorem ids in report order.
inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v{"laws", "cs", "aa", "ac", "ec", "cb", "dc", "d1", "i", "m", "m1", "om", "ig", "f", "p", "ff", "fm", "q", "b"};
    for (int k = 1; k <= 9; ++k) v.push_back("c1." + std::to_string(k));
    std::ranges::sort(v);
    return v;
  }();
  return ids;
}

namespace detail {

// FNV-1a, so per-cell seeds do not depend on std::hash.
inline std::uint64_t cell_seed(std::uint64_t seed, const std::string& theorem, const std::string& frame) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : theorem + "/" + frame) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

struct Outcome {
  CheckResult result;
  std::size_t cases = 0;
};

inline Outcome skip(std::string hypothesis) { return {CheckResult::skip(std::move(hypothesis)), 0}; }

inline Outcome check_laws(const FiniteLattice& lat) {
  if (lat.size() > 32) return skip("|L|<=32");
  Outcome out;
  auto n = [&](Element a) { return lat.name(a); };
  for (Element a : lat.elements()) {
    Element ps = lat.pseudocomplement(a);
    Element pss = lat.pseudocomplement(ps);
    if (!lat.leq(a, pss) || lat.pseudocomplement(pss) != ps || lat.meet(a, ps) != lat.bottom())
      out.result.merge(CheckResult::fail("pseudocomplement law at a=" + n(a)));
    for (Element b : lat.elements()) {
      Element h = heyting(lat, a, b);
      if (lat.meet(a, h) != lat.meet(a, b)) out.result.merge(CheckResult::fail("a^(a->b)=a^b at a=" + n(a) + ", b=" + n(b)));
      for (Element x : lat.elements()) {
        ++out.cases;
        if (lat.leq(x, h) != lat.leq(lat.meet(a, x), b))
          out.result.merge(CheckResult::fail("residuation at a=" + n(a) + ", b=" + n(b) + ", x=" + n(x)));
      }
    }
  }
  return out;
}

inline Outcome check_cs(const FiniteLattice& lat, const FrameProfile& profile, const Caps& caps) {
  if (!profile.completely_regular) return skip("completelyRegular");
  auto cmp = cs_comparison(lat, caps);
  Outcome out{{}, cmp.beta0.frame().size()};
  if (!cmp.is_frame_homomorphism) out.result.merge(CheckResult::fail("f is not a frame homomorphism"));
  if (cmp.is_isomorphism != cmp.strongly_zero_dimensional)
    out.result.merge(CheckResult::fail("isomorphism does not match strong zero-dimensionality"));
  if (!cmp.is_isomorphism) out.result.merge(CheckResult::fail("f is not an isomorphism"));
  return out;
}

inline Outcome check_clean(const FramePtr& frame, std::size_t samples, Sampler& rng) {
  Outcome out;
  const auto one = StepFunction::constant(frame, 1);
  for (std::size_t k = 0; k < samples; ++k) {
    auto alpha = rng.step_function(frame);
    auto d = clean_decompose(alpha);
    ++out.cases;
    std::string at = "sample " + std::to_string(k);
    if (d.idempotent * d.idempotent != d.idempotent) out.result.merge(CheckResult::fail(at + ": e*e != e"));
    if (!is_unit(d.unit) || d.unit * invert(d.unit) != one) out.result.merge(CheckResult::fail(at + ": u is not a unit"));
    if (d.idempotent + d.unit != alpha) out.result.merge(CheckResult::fail(at + ": e+u != alpha"));
    if (!d.formula_agrees) out.result.merge(CheckResult::fail(at + ": unit differs from the interval formula"));
  }
  return out;
}

/// Probe list for r: 1/k for small k, values +- 1/2, and 0.
inline std::vector<Rational> probes(const StepFunction& f) {
  std::set<Rational> out{Rational(0)};
  for (long k = 2; k <= static_cast<long>(f.parts().size()) + 4; ++k) out.insert(Rational(1, k));
  for (const auto& p : f.parts()) {
    out.insert(p.value + Rational(1, 2));
    out.insert(p.value - Rational(1, 2));
  }
  return {out.begin(), out.end()};
}

inline Outcome check_intervals(const FramePtr& frame, std::size_t samples, Sampler& rng) {
  Outcome out;
  const auto& lat = *frame;
  for (std::size_t k = 0; k < samples; ++k) {
    auto alpha = rng.step_function(frame);
    for (const auto& r : probes(alpha)) {
      if (in_image(alpha, r)) continue;
      ++out.cases;
      std::string at = "sample " + std::to_string(k) + ", r=" + format_rational(r);
      Element lo = eval_interval(alpha, RationalInterval::below(r));
      Element hi = eval_interval(alpha, RationalInterval::above(r));
      if (!lat.is_complemented(lo) || lat.pseudocomplement(lo) != hi)
        out.result.merge(CheckResult::fail(at + ": alpha(-,r) is not complemented by alpha(r,-)"));
      if (r > 0 && r < 1) {
        auto e = idempotent(frame, hi);
        if (!lat.leq(coz(e), coz(alpha)) || !lat.leq(coz(e - Rational(1)), coz(alpha - Rational(1))))
          out.result.merge(CheckResult::fail(at + ": cozero inequality fails for e_c"));
      }
    }
  }
  return out;
}

inline Outcome check_factor(const FramePtr& frame, std::size_t samples, Sampler& rng) {
  Outcome out;
  const auto& lat = *frame;
  std::size_t attempts = 0;
  while (out.cases < samples && attempts < 20 * samples) {
    ++attempts;
    auto delta = rng.step_function(frame);
    auto psi = rng.step_function(frame);
    if (attempts % 3 == 0) {
      // off-hypothesis pairs must be refused
      if (!lat.leq(coz(psi), coz(delta))) {
        try {
          factor_cb(psi, delta);
          out.result.merge(CheckResult::fail("factorization accepted coz(phi) not below coz(delta)"));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::HypothesisFailed) throw;
        }
      }
      continue;
    }
    auto phi = attempts % 3 == 1 ? psi * delta : psi * idempotent(frame, coz(delta));
    ++out.cases;
    if (factor_cb(phi, delta) * delta != phi)
      out.result.merge(CheckResult::fail("rho*delta != phi at attempt " + std::to_string(attempts)));
  }
  if (out.cases < samples) out.result.merge(CheckResult::fail("too few instances satisfy the hypothesis"));
  return out;
}

/// Bit k set iff e_{bl[k]} * alpha = 0, computed in the ring.
inline std::uint64_t annihilator_mask(const std::vector<StepFunction>& idempotents, const StepFunction& alpha,
                                      const StepFunction& zero) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < idempotents.size(); ++k)
    if (idempotents[k] * alpha == zero) mask |= std::uint64_t{1} << k;
  return mask;
}

struct AnnihilatorSample {
  std::vector<StepFunction> functions;
  std::vector<std::uint64_t> masks;
};

inline AnnihilatorSample annihilator_sample(const CozeroContext& ctx, std::size_t samples, Sampler& rng) {
  if (ctx.complemented.size() > 64) throw Error(ErrorCode::TooLarge, "|BL| > 64");
  std::vector<StepFunction> idem;
  for (Element b : ctx.complemented) idem.push_back(idempotent(ctx.frame, b));
  const auto zero = StepFunction::constant(ctx.frame, 0);
  AnnihilatorSample out;
  for (const auto& e : idem) out.functions.push_back(e);  // the cozero generators
  for (std::size_t k = 0; k < samples; ++k) out.functions.push_back(rng.step_function(ctx.frame));
  for (const auto& f : out.functions) out.masks.push_back(annihilator_mask(idem, f, zero));
  return out;
}

inline Outcome check_dc(const CozeroContext& ctx, std::size_t samples, Sampler& rng) {
  if (!ctx.profile.zero_dimensional) return skip("zeroDimensional");
  const auto& lat = ctx.lattice();
  auto s = annihilator_sample(ctx, samples, rng);
  Outcome out;
  for (std::size_t a = 0; a < s.functions.size(); ++a)
    for (std::size_t b = 0; b < s.functions.size(); ++b) {
      ++out.cases;
      bool ann = (s.masks[a] & ~s.masks[b]) == 0;
      bool lattice_side = lat.leq(lat.pseudocomplement(coz(s.functions[a])), lat.pseudocomplement(coz(s.functions[b])));
      if (ann != lattice_side)
        out.result.merge(CheckResult::fail("pair " + std::to_string(a) + "," + std::to_string(b) +
                                           ": annihilator inclusion disagrees with pseudocomplements"));
    }
  return out;
}

inline Outcome check_d1(const CozeroContext& ctx, std::size_t samples, Sampler& rng) {
  if (!ctx.profile.zero_dimensional) return skip("zeroDimensional");
  auto s = annihilator_sample(ctx, samples, rng);
  Outcome out;
  for (Element i : ctx.upper().elements()) {
    auto q = from_beta0(ctx, i);
    // ring-level d_c condition: alpha in Q and ann(alpha) within ann(beta) force beta in Q
    bool ring_side = true;
    for (std::size_t a = 0; a < s.functions.size() && ring_side; ++a) {
      if (!q.member(s.functions[a])) continue;
      for (std::size_t b = 0; b < s.functions.size(); ++b)
        if ((s.masks[a] & ~s.masks[b]) == 0 && !q.member(s.functions[b])) {
          ring_side = false;
          break;
        }
    }
    out.cases += s.functions.size();  // each ideal is tested against the whole sample
    bool lattice_side = fixed_and_dc(ctx, q).dc;
    if (!lattice_side) out.result.merge(CheckResult::fail("ideal " + q.name() + " is not d_c"));
    if (lattice_side != ring_side) out.result.merge(CheckResult::fail("ideal " + q.name() + ": d_c conditions disagree"));
  }
  return out;
}

inline Outcome check_i(const CozeroContext& ctx) {
  if (ctx.complemented.size() > 16) return skip("|BL|<=16");
  Outcome out;
  const auto& lat = ctx.lattice();
  const auto& up = ctx.upper();
  std::vector<CozIdeal> mc;
  for (Element i : up.elements()) {
    auto m = mc_ideal(ctx, i);
    auto o = oc_ideal(ctx, i);
    auto self = from_beta0(ctx, i);
    Element sup = ctx.beta0.adjunction.join(i);
    ++out.cases;
    if (o.join() != sup || m.join() != sup)
      out.result.merge(CheckResult::fail("joins differ at I=" + up.name(i) + " (join " + lat.name(sup) + ")"));
    if (!(m == self) || !(o == self)) out.result.merge(CheckResult::fail("M and O do not collapse to I=" + up.name(i)));
    mc.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < mc.size(); ++a)
    for (std::size_t b = a + 1; b < mc.size(); ++b) {
      ++out.cases;
      if (mc[a] == mc[b]) out.result.merge(CheckResult::fail("M coincides for " + up.name(Element{static_cast<std::uint32_t>(a)}) +
                                                             " and " + up.name(Element{static_cast<std::uint32_t>(b)})));
    }
  return out;
}

/// Maximal proper ideals of BL by scanning every subset of BL.
inline std::vector<Ideal> maximal_ideals_by_scan(const CozeroContext& ctx, const Caps& caps) {
  const auto& lat = ctx.lattice();
  const auto& bl = ctx.complemented;
  const std::size_t k = bl.size();
  if (k > caps.ideals) throw Error(ErrorCode::TooLarge, "|BL|=" + std::to_string(k) + " exceeds the subset-scan cap");
  std::vector<std::uint64_t> proper;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    auto in = [&](std::size_t x) { return (s >> x & 1) != 0; };
    bool ideal = true;
    for (std::size_t x = 0; x < k && ideal; ++x) {
      if (bl[x] == lat.bottom() && !in(x)) ideal = false;
      if (bl[x] == lat.top() && in(x)) ideal = false;
      if (!in(x)) continue;
      for (std::size_t y = 0; y < k && ideal; ++y) {
        if (lat.leq(bl[y], bl[x]) && !in(y)) ideal = false;
        if (in(y) && !in(static_cast<std::size_t>(std::ranges::find(bl, lat.join(bl[x], bl[y])) - bl.begin()))) ideal = false;
      }
    }
    if (ideal) proper.push_back(s);
  }
  std::vector<Ideal> out;
  for (auto s : proper) {
    bool maximal = std::ranges::none_of(proper, [&](std::uint64_t t) { return t != s && (s & ~t) == 0; });
    if (!maximal) continue;
    std::vector<Element> members;
    for (std::size_t x = 0; x < k; ++x)
      if (s >> x & 1) members.push_back(bl[x]);
    out.push_back(Ideal::from_members(lat.size(), members));
  }
  return out;
}

inline Outcome check_m(const CozeroContext& ctx, const Caps& caps) {
  if (ctx.complemented.size() > 16) return skip("|BL|<=16");
  auto scanned = maximal_ideals_by_scan(ctx, caps);
  auto found = maximal_ideals(ctx);
  Outcome out{{}, std::size_t{1} << ctx.complemented.size()};
  if (scanned.size() != found.size())
    out.result.merge(CheckResult::fail(std::to_string(scanned.size()) + " maximal ideals by scan, " +
                                       std::to_string(found.size()) + " from points"));
  for (const auto& m : found)
    if (std::ranges::find(scanned, m.ideal.lattice_ideal()) == scanned.end())
      out.result.merge(CheckResult::fail(m.ideal.name() + " is not maximal"));
  return out;
}

inline bool is_prime_ideal(const FiniteLattice& lat, const std::vector<Element>& bl, const Ideal& ideal) {
  if (ideal.contains(lat.top())) return false;
  for (Element a : bl)
    for (Element b : bl)
      if (ideal.contains(lat.meet(a, b)) && !ideal.contains(a) && !ideal.contains(b)) return false;
  return true;
}

inline Outcome check_m1(const CozeroContext& ctx) {
  if (ctx.complemented.size() > 8) return skip("|BL|<=8");
  Outcome out;
  const auto points = prime_elements(ctx.upper());
  for (Element i : ctx.upper().elements()) {
    auto q = from_beta0(ctx, i);
    auto bracket = locate(ctx, q);
    ++out.cases;
    if (!bracket.lower_holds || !bracket.upper_holds) out.result.merge(CheckResult::fail("bracket fails for " + q.name()));
    if (!is_prime_ideal(ctx.lattice(), ctx.complemented, q.lattice_ideal())) continue;
    auto holding = std::ranges::count_if(points, [&](Element p) {
      return oc_ideal(ctx, p).subset_of(q) && q.subset_of(mc_ideal(ctx, p));
    });
    if (holding != 1)
      out.result.merge(CheckResult::fail("prime " + q.name() + " is bracketed by " + std::to_string(holding) + " points"));
  }
  return out;
}

inline std::pair<Outcome, Outcome> check_om_ig(const CozeroContext& ctx, std::size_t extra, Sampler& rng) {
  if (ctx.complemented.size() > 8) return {skip("|BL|<=8"), skip("|BL|<=8")};
  Outcome om, ig;
  for (Element i : prime_elements(ctx.upper())) {
    std::vector<StepFunction> samples;
    for (std::size_t k = 0; k < extra; ++k) samples.push_back(rng.step_function(ctx.frame));
    auto report = om_lemma_check(ctx, i, samples);
    const std::size_t cases = ctx.complemented.size() + extra;
    om.cases += cases;
    ig.cases += report.samples_in_oc;
    auto at = [&](CheckResult r) {
      if (r.failed()) r.detail = "I=" + ctx.upper().name(i) + ": " + r.detail;
      return r;
    };
    om.result.merge(at(report.annihilator));
    om.result.merge(at(report.converse));
    om.result.merge(at(report.unique_maximal));
    ig.result.merge(at(report.generated));
    ig.result.merge(at(report.factorization));
  }
  return {om, ig};
}

inline Outcome check_f(const CozeroContext& ctx) {
  Outcome out;
  const auto& lat = ctx.lattice();
  for (Element i : ctx.upper().elements()) {
    ++out.cases;
    bool below_top = ctx.beta0.adjunction.join(i) != lat.top();
    if (fixed_and_dc(ctx, mc_ideal(ctx, i)).fixed != below_top)
      out.result.merge(CheckResult::fail("I=" + ctx.upper().name(i)));
  }
  return out;
}

inline Outcome check_p(const CozeroContext& ctx) {
  if (!ctx.profile.zero_dimensional) return skip("zeroDimensional");
  Outcome out;
  const auto& lat = ctx.lattice();
  const auto points = prime_elements(lat);
  for (Element i : prime_elements(ctx.upper())) {
    Element sup = ctx.beta0.adjunction.join(i);
    if (sup == lat.top()) continue;
    ++out.cases;
    if (std::ranges::find(points, sup) == points.end())
      out.result.merge(CheckResult::fail("join of I=" + ctx.upper().name(i) + " is not a point of L"));
  }
  return out;
}

inline Outcome check_ff(const CozeroContext& ctx) {
  if (!ctx.profile.zero_dimensional) return skip("zeroDimensional");
  Outcome out;
  const auto points = prime_elements(ctx.lattice());
  const auto maximals = maximal_ideals(ctx);
  out.cases = points.size();
  if (points.size() != maximals.size()) out.result.merge(CheckResult::fail("point count differs from maximal count"));
  for (Element p : points) {
    auto fixed = fixed_ideal_below(ctx, p);
    if (std::ranges::none_of(maximals, [&](const MaximalIdeal& m) { return m.ideal == fixed; }))
      out.result.merge(CheckResult::fail("M_c at '" + ctx.lattice().name(p) + "' is not maximal"));
  }
  return out;
}

inline Outcome check_fm(const CozeroContext& ctx) {
  Outcome out;
  for (Element i : ctx.upper().elements()) {
    auto q = from_beta0(ctx, i);
    if (!q.proper()) continue;
    ++out.cases;
    if (!fixed_and_dc(ctx, q).fixed) out.result.merge(CheckResult::fail(q.name() + " is proper but free"));
  }
  return out;
}

inline std::pair<Outcome, Outcome> check_q_b(const CozeroContext& ctx) {
  if (ctx.complemented.size() > 8) return {skip("|BL|<=8"), skip("|BL|<=8")};
  auto s = spectrum(ctx);
  const std::size_t n = ctx.upper().size();
  Outcome q{{}, n * n}, b{{}, n};
  if (!s.lemma_q1) q.result.merge(CheckResult::fail("part 1: P within Q but J_P not below J_Q"));
  if (!s.lemma_q2) q.result.merge(CheckResult::fail("part 2: J of a meet"));
  if (!s.lemma_q3) q.result.merge(CheckResult::fail("part 3: J of a sum"));
  if (!s.lemma_q4) q.result.merge(CheckResult::fail("part 4: J of O^I differs from I"));
  if (!s.psi_well_defined) b.result.merge(CheckResult::fail("psi is not well defined"));
  if (!s.psi_frame_homomorphism) b.result.merge(CheckResult::fail("psi is not a frame homomorphism"));
  if (!s.psi_bijective || s.opens.size() != n) b.result.merge(CheckResult::fail("psi is not bijective"));
  if (!s.opens_zero_dimensional) b.result.merge(CheckResult::fail("opens lattice is not zero-dimensional"));
  if (!s.d_preserves_meets || !s.d_preserves_joins) b.result.merge(CheckResult::fail("D does not preserve meets and joins"));
  return {q, b};
}

}  // namespace detail

/// Runs every theorem check on every distributive corpus entry selected by
/// `options.frames`. Failures are entries, never exceptions.
inline SuiteReport run_suite(const SuiteOptions& options, const std::vector<CorpusEntry>& corpus = default_corpus()) {
  SuiteReport report;
  report.seed = options.seed;
  report.caps = options.caps;
  for (const auto& name : options.frames)
    if (std::ranges::none_of(corpus, [&](const CorpusEntry& e) { return e.name == name; }))
      throw Error(ErrorCode::UnknownFrame, "no corpus frame named '" + name + "'");
  report.self_check = corpus_self_check(corpus);
  if (report.self_check.failed()) return report;

  for (const auto& entry : corpus) {
    if (!entry.expected) continue;
    if (!options.frames.empty() && std::ranges::find(options.frames, entry.name) == options.frames.end()) continue;
    const auto& frame = entry.frame;
    const auto profile = *entry.expected;

    std::optional<CozeroContext> ctx;
    std::optional<Error> ctx_error;
    auto context = [&]() -> const CozeroContext& {
      if (!ctx && !ctx_error) {
        try {
          ctx = CozeroContext::make(frame, options.caps);
        } catch (const Error& e) {
          ctx_error = e;
        }
      }
      if (ctx_error) throw *ctx_error;
      return *ctx;
    };
    auto record = [&](const std::string& theorem, detail::Outcome outcome, double millis) {
      report.entries.push_back({theorem, entry.name, std::move(outcome.result), outcome.cases, millis});
    };
    auto guarded = [&](std::vector<std::string> theorems, auto&& body) {
      auto start = std::chrono::steady_clock::now();
      std::vector<detail::Outcome> outcomes;
      try {
        outcomes = body();
      } catch (const Error& e) {
        auto r = e.code() == ErrorCode::TooLarge ? detail::skip(std::string("TooLarge: ") + e.what())
                                                 : detail::Outcome{CheckResult::fail(e.what()), 0};
        outcomes.assign(theorems.size(), r);
      }
      double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      for (std::size_t k = 0; k < theorems.size(); ++k) record(theorems[k], outcomes[k], millis / theorems.size());
    };
    auto rng_for = [&](const std::string& theorem) { return Sampler(detail::cell_seed(options.seed, theorem, entry.name)); };
    using V = std::vector<detail::Outcome>;

    guarded({"laws"}, [&] { return V{detail::check_laws(*frame)}; });
    guarded({"cs"}, [&] { return V{detail::check_cs(*frame, profile, options.caps)}; });

    std::vector<std::string> c1_ids;
    for (int k = 1; k <= 9; ++k) c1_ids.push_back("c1." + std::to_string(k));
    c1_ids.push_back("aa");
    guarded(c1_ids, [&] {
      auto c1 = check_lemma_c1(*frame, options.caps);
      const std::size_t cases = frame->size();
      V out;
      for (const auto& part : c1.parts) out.push_back({part, part.skipped() ? 0 : cases});
      out.push_back({c1.prop_aa, c1.prop_aa.skipped() ? 0 : cases});
      return out;
    });

    const std::size_t bl = complemented_elements(*frame).size();
    guarded({"ac"}, [&] {
      if (bl > 16) return V{detail::skip("|BL|<=16")};
      auto rng = rng_for("ac");
      return V{detail::check_clean(frame, options.clean_samples, rng)};
    });
    guarded({"ec"}, [&] {
      auto rng = rng_for("ec");
      return V{detail::check_intervals(frame, options.interval_samples, rng)};
    });
    guarded({"cb"}, [&] {
      auto rng = rng_for("cb");
      return V{detail::check_factor(frame, options.factor_samples, rng)};
    });
    guarded({"dc"}, [&] {
      auto rng = rng_for("dc");
      return V{detail::check_dc(context(), options.annihilator_samples, rng)};
    });
    guarded({"d1"}, [&] {
      auto rng = rng_for("d1");
      return V{detail::check_d1(context(), options.annihilator_samples, rng)};
    });
    guarded({"i"}, [&] { return V{detail::check_i(context())}; });
    guarded({"m"}, [&] { return V{detail::check_m(context(), options.caps)}; });
    guarded({"m1"}, [&] { return V{detail::check_m1(context())}; });
    guarded({"om", "ig"}, [&] {
      auto rng = rng_for("om");
      auto [om, ig] = detail::check_om_ig(context(), options.generator_samples, rng);
      return V{om, ig};
    });
    guarded({"f"}, [&] { return V{detail::check_f(context())}; });
    guarded({"p"}, [&] { return V{detail::check_p(context())}; });
    guarded({"ff"}, [&] { return V{detail::check_ff(context())}; });
    guarded({"fm"}, [&] { return V{detail::check_fm(context())}; });
    guarded({"q", "b"}, [&] {
      auto [q, b] = detail::check_q_b(context());
      return V{q, b};
    });
  }
  std::ranges::stable_sort(report.entries, [](const SuiteEntry& a, const SuiteEntry& b) {
    return std::tie(a.theorem, a.frame) < std::tie(b.theorem, b.frame);
  });
  return report;
}

/// Deterministic: no timings, entries sorted by (theorem, frame).
inline Json report_json(const SuiteReport& report) {
  Json results = Json::array();
  for (const auto& e : report.entries) {
    Json row = {{"theorem", e.theorem}, {"frame", e.frame}, {"status", to_string(e.result.status)}, {"cases", e.cases}};
    row.update(check_json(e.result));
    results.push_back(std::move(row));
  }
  return {{"seed", report.seed},
          {"caps", {{"ideals", report.caps.ideals}, {"lattice", report.caps.lattice}}},
          {"selfCheck", check_json(report.self_check)},
          {"results", std::move(results)},
          {"summary",
           {{"pass", report.count(CheckStatus::Pass)},
            {"fail", report.count(CheckStatus::Fail)},
            {"skipped", report.count(CheckStatus::Skipped)}}}};
}

inline std::string report_table(const SuiteReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "theorem" << std::setw(18) << "frame" << std::setw(9) << "status" << std::right
      << std::setw(9) << "cases" << std::setw(10) << "ms" << "  detail\n";
  for (const auto& e : report.entries)
    out << std::left << std::setw(8) << e.theorem << std::setw(18) << e.frame << std::setw(9) << to_string(e.result.status)
        << std::right << std::setw(9) << e.cases << std::setw(10) << std::fixed << std::setprecision(1) << e.millis << "  "
        << e.result.detail << "\n";
  out << "self-check: " << to_string(report.self_check.status) << "; " << report.count(CheckStatus::Pass) << " pass, "
      << report.count(CheckStatus::Fail) << " fail, " << report.count(CheckStatus::Skipped) << " skipped\n";
  return out.str();
}

}  // namespace framekit

#endif  // FRAMEKIT_VERIFY_HPP
