#include <gtest/gtest.h>

#include "framekit/construct.hpp"
#include "framekit/corpus.hpp"
#include "framekit/random.hpp"
#include "framekit/spectrum.hpp"

using namespace framekit;

namespace {

struct Square : ::testing::Test {
  FramePtr L = share(boolean_lattice(2));
  CozeroContext ctx = CozeroContext::make(L);
  Element a = L->at("{1}");
  Element b = L->at("{2}");
  Element point_of(Element x) { return ctx.r0(x); }
};

std::vector<CorpusEntry> distributive_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& e : default_corpus())
    if (e.expected) out.push_back(e);
  return out;
}

}  // namespace

TEST_F(Square, Membership) {
  auto zero = mk_ideal(ctx, {L->bottom()});
  Sampler rng(3);
  for (int k = 0; k < 50; ++k) {
    auto f = rng.step_function(L);
    EXPECT_EQ(zero.member(f), f == StepFunction::constant(L, 0));
  }
  auto down_a = mk_ideal(ctx, {L->bottom(), a});
  EXPECT_TRUE(down_a.member(idempotent(L, a)));
  EXPECT_FALSE(down_a.member(idempotent(L, b)));
  auto all = mk_ideal(ctx, {L->bottom(), a, b, L->top()});
  EXPECT_FALSE(all.proper());
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(all.member(rng.step_function(L)));
}

TEST_F(Square, NotAnIdeal) {
  auto code = [&](std::vector<Element> members) {
    try {
      mk_ideal(ctx, members);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvariantViolated;
  };
  EXPECT_EQ(code({a}), ErrorCode::NotAnIdeal);                     // no bottom
  EXPECT_EQ(code({L->bottom(), L->top()}), ErrorCode::NotAnIdeal);  // not down-closed
  EXPECT_EQ(code({L->bottom(), a, b}), ErrorCode::NotAnIdeal);      // not join-closed
  auto c3 = share(chain_lattice(3));
  auto cctx = CozeroContext::make(c3);
  EXPECT_THROW(mk_ideal(cctx, {c3->bottom(), c3->at("m1")}), Error);  // m1 is not in BL
}

TEST_F(Square, MaximalAndOpenTypeIdeals) {
  const auto& up = ctx.upper();
  EXPECT_EQ(mc_ideal(ctx, up.bottom()), mk_ideal(ctx, {L->bottom()}));
  auto ia = point_of(a);
  auto expected = mk_ideal(ctx, {L->bottom(), a});
  EXPECT_EQ(mc_ideal(ctx, ia), expected);
  EXPECT_EQ(oc_ideal(ctx, ia), expected);
  EXPECT_FALSE(mc_ideal(ctx, up.top()).proper());
}

TEST_F(Square, FixedAndDc) {
  auto down_a = mk_ideal(ctx, {L->bottom(), a});
  EXPECT_TRUE(fixed_and_dc(ctx, down_a).fixed);
  EXPECT_TRUE(fixed_and_dc(ctx, down_a).dc);
  auto all = mk_ideal(ctx, {L->bottom(), a, b, L->top()});
  EXPECT_FALSE(fixed_and_dc(ctx, all).fixed);
}

TEST_F(Square, Locate) {
  const auto& up = ctx.upper();
  EXPECT_EQ(locate(ctx, mk_ideal(ctx, {L->bottom()})).point, up.bottom());
  auto q = mk_ideal(ctx, {L->bottom(), a});
  auto br = locate(ctx, q);
  EXPECT_EQ(br.point, ctx.r0(a));
  EXPECT_TRUE(br.lower_holds && br.upper_holds);
  EXPECT_EQ(oc_ideal(ctx, br.point), q);
  EXPECT_EQ(mc_ideal(ctx, br.point), q);
  EXPECT_EQ(locate(ctx, mk_ideal(ctx, {L->bottom(), a, b, L->top()})).point, up.top());
}

TEST_F(Square, AnnihilatingWitness) {
  auto ia = point_of(a);
  auto m = mc_ideal(ctx, ia);
  auto alpha = scale(idempotent(L, a), 2);
  auto beta = idempotent(L, a) - Rational(1);
  EXPECT_EQ(alpha * beta, StepFunction::constant(L, 0));
  EXPECT_EQ(coz(beta), b);
  EXPECT_FALSE(m.member(beta));
  // alpha = 0 is annihilated by -1, which lies outside every proper ideal
  EXPECT_FALSE(m.member(StepFunction::constant(L, -1)));
  auto report = om_lemma_check(ctx, ia);
  for (const auto* r : {&report.annihilator, &report.converse, &report.generated, &report.factorization, &report.unique_maximal})
    EXPECT_TRUE(r->passed()) << r->detail;
  EXPECT_THROW(om_lemma_check(ctx, ctx.upper().top()), Error);
}

TEST(MaximalIdeals, Counts) {
  auto count = [](FiniteLattice L) { return maximal_ideals(CozeroContext::make(share(std::move(L)))).size(); };
  EXPECT_EQ(count(boolean_lattice(2)), 2u);
  EXPECT_EQ(count(boolean_lattice(3)), 3u);
  auto two = CozeroContext::make(share(chain_lattice(2)));
  auto m = maximal_ideals(two);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].ideal, mk_ideal(two, {two.lattice().bottom()}));
}

TEST(MaximalIdeals, AreThePrincipalIdealsOfCoatomsOfBL) {
  for (const auto& e : distributive_corpus()) {
    auto ctx = CozeroContext::make(e.frame);
    const auto& L = ctx.lattice();
    std::vector<Ideal> expected;
    for (Element c : ctx.complemented) {
      if (c == L.top()) continue;
      bool coatom = std::ranges::none_of(ctx.complemented, [&](Element d) { return L.lt(c, d) && d != L.top(); });
      if (!coatom) continue;
      std::vector<Element> below;
      for (Element d : ctx.complemented)
        if (L.leq(d, c)) below.push_back(d);
      expected.push_back(Ideal::from_members(L.size(), below));
    }
    auto found = maximal_ideals(ctx);
    ASSERT_EQ(found.size(), expected.size()) << e.name;
    for (const auto& m : found) EXPECT_NE(std::ranges::find(expected, m.ideal.lattice_ideal()), expected.end()) << e.name;
  }
}

TEST(ZcTransfer, EqualCozerosShareMembership) {
  Sampler rng(5);
  for (const auto& e : distributive_corpus()) {
    auto ctx = CozeroContext::make(e.frame);
    std::vector<CozIdeal> family;
    for (Element i : ctx.upper().elements()) family.push_back(from_beta0(ctx, i));
    for (int k = 0; k < 60; ++k) {
      auto f = rng.step_function(e.frame), g = rng.step_function(e.frame);
      if (coz(f) != coz(g)) continue;
      for (const auto& q : family) EXPECT_EQ(q.member(f), q.member(g));
    }
    for (Element i : ctx.upper().elements()) EXPECT_EQ(to_beta0(ctx, from_beta0(ctx, i)), i);
  }
}

TEST(Spectrum, Examples) {
  auto two = CozeroContext::make(share(chain_lattice(2)));
  auto s2 = spectrum(two);
  EXPECT_EQ(s2.maximals.size(), 1u);
  EXPECT_EQ(s2.opens.size(), 2u);
  EXPECT_TRUE(s2.theorem_b());

  auto sq = CozeroContext::make(share(boolean_lattice(2)));
  auto s = spectrum(sq);
  EXPECT_EQ(s.opens.size(), 4u);
  EXPECT_TRUE(s.theorem_b());
  Element a = sq.lattice().at("{1}");
  auto q = mk_ideal(sq, {sq.lattice().bottom(), a});
  // psi(D(Q)) = J_Q = down-set of a in BL
  bool seen = false;
  for (Element o : s.opens.elements()) {
    std::uint64_t d = 0;
    for (std::size_t m = 0; m < s.maximals.size(); ++m)
      if (!q.subset_of(s.maximals[m].ideal)) d |= std::uint64_t{1} << m;
    if (s.open_sets[o.index] == d) {
      EXPECT_EQ(s.psi[o.index], sq.r0(a));
      seen = true;
    }
  }
  EXPECT_TRUE(seen);

  auto cube = spectrum(CozeroContext::make(share(boolean_lattice(3))));
  EXPECT_EQ(cube.opens.size(), 8u);
  EXPECT_EQ(complemented_elements(cube.opens).size(), 8u);
}

TEST(Spectrum, WholeCorpusUpToEightCozeros) {
  for (const auto& e : distributive_corpus()) {
    auto ctx = CozeroContext::make(e.frame);
    if (ctx.complemented.size() > 8) continue;
    auto s = spectrum(ctx);
    EXPECT_TRUE(s.theorem_b()) << e.name;
    EXPECT_TRUE(s.opens_zero_dimensional) << e.name;
    EXPECT_TRUE(s.d_preserves_meets && s.d_preserves_joins) << e.name;
    EXPECT_TRUE(s.lemma_q1 && s.lemma_q2 && s.lemma_q3 && s.lemma_q4) << e.name;
    EXPECT_EQ(s.opens.size(), ctx.upper().size()) << e.name;
  }
}
