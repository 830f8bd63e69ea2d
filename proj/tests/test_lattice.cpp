#include <gtest/gtest.h>

#include "framekit/construct.hpp"
#include "framekit/corpus.hpp"
#include "framekit/lattice.hpp"

using namespace framekit;

namespace {

std::vector<CorpusEntry> distributive_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& e : default_corpus())
    if (e.expected) out.push_back(e);
  return out;
}

Element brute_heyting(const FiniteLattice& L, Element a, Element b) {
  std::optional<Element> best;
  for (Element x : L.elements())
    if (L.leq(L.meet(a, x), b) && (!best || L.leq(*best, x))) best = x;
  return *best;
}

// Jacobi-style pruning: every round removes all pairs lacking an interpolant at once.
BelowRelation simultaneous_prune(const FiniteLattice& L) {
  BelowRelation rel(BelowKind::Completely, L.size());
  for (Element a : L.elements())
    for (Element b : L.elements()) rel.set(a, b, L.join(brute_heyting(L, a, L.bottom()), b) == L.top());
  for (;;) {
    BelowRelation next = rel;
    for (auto [a, b] : rel.pairs()) {
      bool ok = false;
      for (Element c : L.elements()) ok = ok || (rel.contains(a, c) && rel.contains(c, b));
      if (!ok) next.set(a, b, false);
    }
    if (next == rel) return rel;
    rel = next;
  }
}

}  // namespace

TEST(Build, RejectsCycle) {
  try {
    build_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPoset);
  }
}

TEST(Build, RejectsMissingJoin) {
  // a, b < c, d: two minimal upper bounds
  try {
    build_lattice({"0", "a", "b", "c", "d", "1"},
                  {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotALattice);
  }
}

TEST(Build, RejectsUnknownAndDuplicateNames) {
  EXPECT_THROW(build_lattice({"a"}, {{"a", "z"}}), Error);
  EXPECT_THROW(build_lattice({"a", "a"}, {}), Error);
  EXPECT_THROW(build_lattice({}, {}), Error);
}

TEST(Build, ClosureFromGeneratingPairs) {
  auto L = build_lattice({"0", "x", "1"}, {{"0", "x"}, {"x", "1"}});
  EXPECT_TRUE(L.leq(L.at("0"), L.at("1")));
  EXPECT_EQ(L.bottom(), L.at("0"));
  EXPECT_EQ(L.top(), L.at("1"));
  EXPECT_THROW(L.at("nope"), Error);
}

TEST(Distributivity, DiamondAndPentagonAreRefused) {
  for (auto L : {detail::diamond(), detail::pentagon()}) {
    EXPECT_FALSE(L.is_distributive());
    try {
      heyting(L, L.bottom(), L.top());
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotDistributive);
    }
    EXPECT_THROW(classify(L), Error);
    EXPECT_THROW(complemented_elements(L), Error);
  }
}

TEST(Laws, HeytingMatchesBruteForceAndResiduates) {
  for (const auto& e : distributive_corpus()) {
    const auto& L = *e.frame;
    for (Element a : L.elements())
      for (Element b : L.elements()) {
        Element h = heyting(L, a, b);
        ASSERT_EQ(h, brute_heyting(L, a, b)) << e.name;
        EXPECT_EQ(L.meet(a, h), L.meet(a, b)) << e.name;
        for (Element x : L.elements()) EXPECT_EQ(L.leq(x, h), L.leq(L.meet(a, x), b)) << e.name;
      }
  }
}

TEST(Laws, Pseudocomplement) {
  for (const auto& e : distributive_corpus()) {
    const auto& L = *e.frame;
    for (Element a : L.elements()) {
      Element s = L.pseudocomplement(a);
      EXPECT_EQ(s, pseudocomplement(L, a));
      EXPECT_EQ(s, brute_heyting(L, a, L.bottom()));
      EXPECT_TRUE(L.leq(a, L.pseudocomplement(s)));
      EXPECT_EQ(s, L.pseudocomplement(L.pseudocomplement(s)));
    }
  }
}

TEST(Below, InclusionsAndBooleanCoincidence) {
  for (const auto& e : distributive_corpus()) {
    const auto& L = *e.frame;
    const auto& cb = L.completely_below();
    const auto& rb = L.rather_below();
    EXPECT_TRUE(cb.subset_of(rb)) << e.name;
    for (auto [a, b] : rb.pairs()) EXPECT_TRUE(L.leq(a, b)) << e.name;
    auto ccb = below_relation(L, BelowKind::CCompletely);
    EXPECT_TRUE(ccb.subset_of(cb)) << e.name;
    if (complemented_elements(L).size() == L.size()) {
      for (Element a : L.elements())
        for (Element b : L.elements()) {
          EXPECT_EQ(cb.contains(a, b), L.leq(a, b));
          EXPECT_EQ(rb.contains(a, b), L.leq(a, b));
        }
    }
  }
}

TEST(Below, FixpointIsOrderIndependentAndMatchesSimultaneousPruning) {
  for (const auto& e : distributive_corpus()) {
    const auto& L = *e.frame;
    auto forward = completely_below_pruned(L, false);
    auto backward = completely_below_pruned(L, true);
    EXPECT_TRUE(forward == backward) << e.name;
    EXPECT_TRUE(forward == simultaneous_prune(L)) << e.name;
    for (auto [a, b] : forward.pairs()) {
      bool interpolated = false;
      for (Element c : L.elements()) interpolated = interpolated || (forward.contains(a, c) && forward.contains(c, b));
      EXPECT_TRUE(interpolated);
    }
  }
}

TEST(Below, ChainThreeMiddleIsNotBelowItself) {
  auto L = chain_lattice(3);
  const auto& cb = L.completely_below();
  auto m = L.at("m1");
  EXPECT_FALSE(cb.contains(m, m));
  EXPECT_FALSE(L.rather_below().contains(m, L.at("m1")));
  EXPECT_TRUE(cb.contains(L.bottom(), m));
  EXPECT_TRUE(cb.contains(m, L.top()));
  EXPECT_TRUE(cb.contains(L.bottom(), L.top()));
}

TEST(BooleanPart, IsABooleanSublattice) {
  for (const auto& e : distributive_corpus()) {
    const auto& L = *e.frame;
    auto bl = complemented_elements(L);
    auto in = [&](Element x) { return std::ranges::find(bl, x) != bl.end(); };
    for (Element a : bl) {
      EXPECT_TRUE(in(L.pseudocomplement(a)));
      EXPECT_EQ(L.join(a, L.pseudocomplement(a)), L.top());
      for (Element b : bl) {
        EXPECT_TRUE(in(L.meet(a, b)));
        EXPECT_TRUE(in(L.join(a, b)));
      }
    }
  }
}

TEST(Primes, BooleanPrimesAreCoatoms) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto L = boolean_lattice(n);
    auto primes = prime_elements(L);
    std::vector<Element> coatoms;
    for (auto [a, b] : L.covers())
      if (b == L.top()) coatoms.push_back(a);
    std::ranges::sort(coatoms);
    EXPECT_EQ(primes, coatoms);
    EXPECT_EQ(primes.size(), n);
  }
}

TEST(Primes, ChainPrimesAreEverythingButTop) {
  auto L = chain_lattice(4);
  EXPECT_EQ(prime_elements(L).size(), 3u);
}

TEST(Classify, KnownExamples) {
  const FrameProfile all{true, true, true, true, true};
  const FrameProfile chainlike{false, false, false, true, true};
  EXPECT_EQ(classify(chain_lattice(2)), all);
  EXPECT_EQ(classify(boolean_lattice(2)), all);
  EXPECT_EQ(classify(chain_lattice(3)), chainlike);
  EXPECT_EQ(classify(topology_lattice({"1", "2"}, {{}, {"1"}, {"1", "2"}})), chainlike);
}

TEST(Construct, Examples) {
  auto sq = boolean_lattice(2);
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_EQ(sq.names(), (std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"}));
  auto sierp = topology_lattice({"1", "2"}, {{}, {"1"}, {"1", "2"}});
  auto c3 = chain_lattice(3);
  std::vector<Element> id{Element{0}, Element{1}, Element{2}};
  EXPECT_TRUE(is_order_isomorphism(sierp, c3, id));
  auto c4 = chain_lattice(4);
  EXPECT_EQ(complemented_elements(c4), (std::vector<Element>{c4.bottom(), c4.top()}));
  EXPECT_EQ(product_lattice(sq, c3).size(), 12u);
  EXPECT_TRUE(product_lattice(sq, c3).is_distributive());
}

TEST(Construct, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvariantViolated;
  };
  EXPECT_EQ(code([] { topology_lattice({"1", "2"}, {{"1"}, {"1", "2"}}); }), ErrorCode::NotATopology);
  EXPECT_EQ(code([] { topology_lattice({"1", "2", "3"}, {{}, {"1"}, {"2"}, {"1", "2", "3"}}); }), ErrorCode::NotATopology);
  EXPECT_EQ(code([] { topology_lattice({"1"}, {{}, {"9"}}); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { boolean_lattice(11); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { chain_lattice(0); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code([] { downset_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }), ErrorCode::NotAPoset);
}

TEST(Construct, DownsetsOfAntichainAreBoolean) {
  auto L = downset_lattice({"x", "y", "z"}, {});
  EXPECT_EQ(L.size(), 8u);
  EXPECT_EQ(complemented_elements(L).size(), 8u);
  auto V = downset_lattice({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}});
  EXPECT_EQ(V.size(), 5u);  // {}, {x}, {y}, {x,y}, {x,y,z}
}

TEST(Covers, MatchTransitiveReduction) {
  for (const auto& e : distributive_corpus()) {
    const auto& L = *e.frame;
    std::vector<std::pair<Element, Element>> brute;
    for (Element a : L.elements())
      for (Element b : L.elements()) {
        if (!L.lt(a, b)) continue;
        bool between = false;
        for (Element c : L.elements()) between = between || (L.lt(a, c) && L.lt(c, b));
        if (!between) brute.emplace_back(a, b);
      }
    EXPECT_EQ(L.covers(), brute);
  }
}

TEST(Homomorphism, IdentityAndNonExample) {
  auto L = boolean_lattice(2);
  std::vector<Element> id(L.elements().begin(), L.elements().end());
  EXPECT_TRUE(is_frame_homomorphism(L, L, id));
  EXPECT_TRUE(is_order_isomorphism(L, L, id));
  std::vector<Element> swap_top{Element{0}, Element{1}, Element{2}, Element{1}};
  EXPECT_FALSE(is_frame_homomorphism(L, L, swap_top));
}
