#include <gtest/gtest.h>

#include "framekit/construct.hpp"
#include "framekit/corpus.hpp"
#include "framekit/random.hpp"
#include "framekit/step_ring.hpp"

using namespace framekit;

namespace {

struct Square : ::testing::Test {
  FramePtr L = share(boolean_lattice(2));
  Element a = L->at("{1}");
  Element b = L->at("{2}");
  StepFunction step(std::vector<std::pair<Element, Rational>> parts) {
    std::vector<StepFunction::Part> p;
    for (auto& [cell, v] : parts) p.push_back({cell, v});
    return StepFunction::make(L, p);
  }
  StepFunction c(Rational v) { return StepFunction::constant(L, v); }
};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolated;
}

std::vector<FramePtr> ring_frames() {
  std::vector<FramePtr> out;
  for (auto& e : default_corpus())
    if (e.expected) out.push_back(e.frame);
  return out;
}

}  // namespace

TEST(RationalText, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(format_rational(Rational(6, 4)), "3/2");
  EXPECT_EQ(format_rational(Rational(-2)), "-2");
  for (const char* bad : {"", "1/0", "x", "1/-2", "1.5", "/3"}) EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::ParseError) << bad;
}

TEST_F(Square, MakeCanonicalizes) {
  EXPECT_EQ(step({{L->top(), 0}}), c(0));
  EXPECT_EQ(step({{a, 2}, {b, 2}}), c(2));
  EXPECT_EQ(step({{a, 2}, {b, 2}}).parts().size(), 1u);
  EXPECT_EQ(code_of([&] { step({{a, 1}, {L->top(), 2}}); }), ErrorCode::NotDisjoint);
  EXPECT_EQ(code_of([&] { step({{a, 1}}); }), ErrorCode::NotACover);
  auto c3 = share(chain_lattice(3));
  EXPECT_EQ(code_of([&] { StepFunction::make(c3, {{c3->at("m1"), 1}, {c3->top(), 0}}); }), ErrorCode::NotComplemented);
  auto m3 = share(detail::diamond());
  EXPECT_EQ(code_of([&] { StepFunction::constant(m3, 1); }), ErrorCode::NotDistributive);
}

TEST_F(Square, Arithmetic) {
  EXPECT_EQ(step({{a, 2}, {b, 3}}) + c(1), step({{a, 3}, {b, 4}}));
  EXPECT_EQ(step({{a, 1}, {b, 0}}) * step({{a, 0}, {b, 1}}), c(0));
  auto ea = idempotent(L, a);
  EXPECT_EQ(ea * ea, ea);
  EXPECT_EQ(arith(ArithOp::Neg, ea), step({{a, -1}, {b, 0}}));
  EXPECT_EQ(arith(ArithOp::Scalar, ea, nullptr, Rational(3)), step({{a, 3}, {b, 0}}));
  auto other = share(boolean_lattice(3));
  EXPECT_EQ(code_of([&] { (void)(ea + StepFunction::constant(other, 1)); }), ErrorCode::FrameMismatch);
  // a structurally equal frame is the same frame
  auto twin = share(boolean_lattice(2));
  EXPECT_NO_THROW((void)(ea + StepFunction::constant(twin, 1)));
}

TEST_F(Square, CozeroAndImage) {
  EXPECT_EQ(coz(c(0)), L->bottom());
  EXPECT_EQ(image(c(0)), std::vector<Rational>{0});
  EXPECT_EQ(coz(idempotent(L, a)), a);
  auto f = step({{a, 2}, {b, 0}});
  EXPECT_EQ(image(f), (std::vector<Rational>{0, 2}));
  EXPECT_EQ(coz(f - Rational(2)), b);
  EXPECT_NE(coz(f - Rational(2)), L->top());
}

TEST_F(Square, IntervalEvaluation) {
  auto ea = idempotent(L, a);
  EXPECT_EQ(eval_interval(ea, RationalInterval::open(Rational(1, 2), Rational(3, 2))), a);
  EXPECT_EQ(eval_interval(ea, RationalInterval::open(Rational(-1, 2), Rational(1, 2))), L->pseudocomplement(a));
  EXPECT_EQ(eval_interval(step({{a, 2}, {b, 5}}), RationalInterval::below(3)), a);
  EXPECT_EQ(eval_interval(ea, RationalInterval::whole()), L->top());
  // open bounds are strict
  EXPECT_EQ(eval_interval(ea, RationalInterval::open(0, 1)), L->bottom());
  EXPECT_EQ(code_of([] { RationalInterval::open(1, 1); }), ErrorCode::InvalidParams);
}

TEST_F(Square, Idempotents) {
  EXPECT_EQ(idempotent(L, L->top()), c(1));
  EXPECT_EQ(idempotent(L, L->bottom()), c(0));
  auto ea = idempotent(L, a);
  EXPECT_EQ(ea, step({{a, 1}, {b, 0}}));
  EXPECT_EQ(coz(ea - Rational(1)), b);
  auto c3 = share(chain_lattice(3));
  EXPECT_EQ(code_of([&] { idempotent(c3, c3->at("m1")); }), ErrorCode::NotComplemented);
}

TEST_F(Square, Units) {
  EXPECT_EQ(invert(c(2)), c(Rational(1, 2)));
  EXPECT_EQ(invert(step({{a, 2}, {b, -1}})), step({{a, Rational(1, 2)}, {b, -1}}));
  try {
    invert(idempotent(L, a));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAUnit);
    EXPECT_NE(std::string(e.what()).find("{2}"), std::string::npos);
  }
}

TEST_F(Square, CleanDecompositionExamples) {
  auto zero = clean_decompose(c(0));
  EXPECT_EQ(zero.idempotent, c(1));
  EXPECT_EQ(zero.unit, c(-1));
  EXPECT_EQ(zero.cut, L->top());
  auto one = clean_decompose(c(1));
  EXPECT_EQ(one.witness, Rational(1, 3));
  EXPECT_EQ(one.idempotent, c(0));
  EXPECT_EQ(one.unit, c(1));
  auto ea = clean_decompose(idempotent(L, a));
  EXPECT_EQ(ea.witness, Rational(1, 3));
  EXPECT_EQ(ea.cut, b);
  EXPECT_EQ(ea.idempotent, idempotent(L, b));
  EXPECT_EQ(ea.unit, step({{a, 1}, {b, -1}}));
  EXPECT_TRUE(ea.formula_agrees);
  // the witness skips values in the image
  auto busy = clean_decompose(step({{a, Rational(1, 3)}, {b, Rational(1, 4)}}));
  EXPECT_EQ(busy.witness, Rational(1, 5));
}

TEST_F(Square, FactorExamples) {
  auto ea = idempotent(L, a);
  EXPECT_EQ(factor_cb(c(0), ea), c(0));
  auto rho = factor_cb(scale(ea, 3), scale(ea, 2));
  EXPECT_EQ(rho, step({{a, Rational(3, 2)}, {b, 0}}));
  EXPECT_EQ(rho * scale(ea, 2), scale(ea, 3));
  EXPECT_EQ(code_of([&] { factor_cb(c(1), ea); }), ErrorCode::HypothesisFailed);
}

TEST(RingProperties, AxiomsAndCozeroLaws) {
  Sampler rng(7);
  for (const auto& L : ring_frames()) {
    const auto zero = StepFunction::constant(L, 0);
    const auto one = StepFunction::constant(L, 1);
    for (int k = 0; k < 40; ++k) {
      auto x = rng.step_function(L), y = rng.step_function(L), z = rng.step_function(L);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x + zero, x);
      EXPECT_EQ(x * one, x);
      EXPECT_EQ(x - x, zero);
      if (x * x == zero) {
        EXPECT_EQ(x, zero);
      }
      EXPECT_EQ(coz(x * y), L->meet(coz(x), coz(y)));
      EXPECT_TRUE(L->leq(coz(x + y), L->join(coz(x), coz(y))));
      EXPECT_EQ(coz(x) == L->bottom(), x == zero);
      EXPECT_TRUE(L->is_complemented(coz(x)));
    }
  }
}

TEST(RingProperties, ImageIsWhereTheShiftIsNotAUnit) {
  Sampler rng(11);
  for (const auto& L : ring_frames())
    for (int k = 0; k < 30; ++k) {
      auto f = rng.step_function(L);
      for (int num = -8; num <= 8; ++num) {
        Rational r(num, 2);
        EXPECT_EQ(in_image(f, r), coz(f - r) != L->top());
      }
    }
}

TEST(RingProperties, TranslationAndSumFormulas) {
  Sampler rng(13);
  for (const auto& L : ring_frames())
    for (int k = 0; k < 20; ++k) {
      auto f = rng.step_function(L), g = rng.step_function(L);
      auto grid = detail::breakpoint_grid(f);
      for (const auto& p : grid)
        for (const auto& r : grid) {
          EXPECT_EQ(eval_interval(f - r, RationalInterval::above(p)), eval_interval(f, RationalInterval::above(p + r)));
          EXPECT_EQ(eval_interval(f - r, RationalInterval::below(p)), eval_interval(f, RationalInterval::below(p + r)));
        }
      // (f+g)(p,-) is the join over q of f(q,-) ^ g(p-q,-); midpoints of the
      // gaps v - (p - w) suffice for q
      for (const auto& p : grid) {
        Element acc = L->bottom();
        for (const auto& fp : f.parts())
          for (const auto& gp : g.parts()) {
            Rational q = (fp.value + p - gp.value) / 2;
            acc = L->join(acc, L->meet(eval_interval(f, RationalInterval::above(q)),
                                       eval_interval(g, RationalInterval::above(p - q))));
          }
        EXPECT_EQ(eval_interval(f + g, RationalInterval::above(p)), acc);
      }
    }
}

TEST(RingProperties, CutsOutsideTheImageAreComplementary) {
  Sampler rng(17);
  for (const auto& L : ring_frames())
    for (int k = 0; k < 30; ++k) {
      auto f = rng.step_function(L);
      for (int num = -7; num <= 7; num += 2) {
        Rational r(num, 2);
        if (in_image(f, r)) continue;
        Element lo = eval_interval(f, RationalInterval::below(r));
        Element hi = eval_interval(f, RationalInterval::above(r));
        EXPECT_EQ(L->meet(lo, hi), L->bottom());
        EXPECT_EQ(L->join(lo, hi), L->top());
        EXPECT_EQ(L->pseudocomplement(lo), hi);
      }
    }
}

TEST(RingProperties, CleanAndFactorRoundTrips) {
  Sampler rng(19);
  for (const auto& L : ring_frames()) {
    const auto one = StepFunction::constant(L, 1);
    for (int k = 0; k < 40; ++k) {
      auto f = rng.step_function(L);
      auto d = clean_decompose(f);
      EXPECT_EQ(d.idempotent * d.idempotent, d.idempotent);
      EXPECT_EQ(d.unit * invert(d.unit), one);
      EXPECT_EQ(d.idempotent + d.unit, f);
      EXPECT_TRUE(d.formula_agrees);
      EXPECT_GT(d.witness, 0);
      EXPECT_LT(d.witness, Rational(1, 2));
      auto delta = rng.step_function(L);
      auto phi = f * delta;
      EXPECT_EQ(factor_cb(phi, delta) * delta, phi);
    }
  }
}

TEST(Sampler, IsDeterministic) {
  auto L = share(boolean_lattice(3));
  Sampler a(42), b(42);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(a.step_function(L), b.step_function(L));
}
