#ifndef FRAMEKIT_STEP_RING_HPP
#define FRAMEKIT_STEP_RING_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framekit/lattice.hpp"
#include "framekit/rational.hpp"

// Elements of the ring of continuous real functions with countable image on a
// finite frame L are modeled as step functions: finitely many pairwise
// disjoint complemented cells covering 1, each carrying an exact value. The
// bounded subring coincides with the whole ring at this scale, so there is no
// separate bounded type.

namespace framekit {

using FramePtr = std::shared_ptr<const FiniteLattice>;

inline FramePtr share(FiniteLattice lattice) { return std::make_shared<const FiniteLattice>(std::move(lattice)); }

/// An open interval with rational or infinite endpoints.
struct RationalInterval {
  std::optional<Rational> lower;  // nullopt = -infinity
  std::optional<Rational> upper;  // nullopt = +infinity

  static RationalInterval open(Rational p, Rational q) {
    if (!(p < q)) throw Error(ErrorCode::InvalidParams, "empty interval (" + format_rational(p) + ", " + format_rational(q) + ")");
    return {std::move(p), std::move(q)};
  }
  static RationalInterval below(Rational r) { return {std::nullopt, std::move(r)}; }
  static RationalInterval above(Rational r) { return {std::move(r), std::nullopt}; }
  static RationalInterval whole() { return {}; }

  bool contains(const Rational& v) const {
    return (!lower || *lower < v) && (!upper || v < *upper);
  }
};

class StepFunction {
 public:
  struct Part {
    Element cell;
    Rational value;

    friend bool operator==(const Part&, const Part&) = default;
  };

  /// Validates and canonicalizes: drops zero cells, merges equal values,
  /// sorts by cell.
  static StepFunction make(FramePtr frame, std::vector<Part> parts) {
    if (!frame) throw Error(ErrorCode::InvalidParams, "step function without a frame");
    const auto& lat = *frame;
    lat.require_distributive("step function");
    Element cover = lat.bottom();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Element cell = parts[i].cell;
      if (cell.index >= lat.size()) throw Error(ErrorCode::InvalidParams, "cell index out of range");
      if (!lat.is_complemented(cell)) throw Error(ErrorCode::NotComplemented, "cell '" + lat.name(cell) + "' is not complemented");
      for (std::size_t j = 0; j < i; ++j)
        if (lat.meet(cell, parts[j].cell) != lat.bottom())
          throw Error(ErrorCode::NotDisjoint, "cells '" + lat.name(cell) + "' and '" + lat.name(parts[j].cell) + "' overlap");
      cover = lat.join(cover, cell);
    }
    if (cover != lat.top()) throw Error(ErrorCode::NotACover, "cells join to '" + lat.name(cover) + "', not the top");
    return canonical(std::move(frame), std::move(parts));
  }

  static StepFunction constant(FramePtr frame, Rational value) {
    Element top = frame->top();
    return make(std::move(frame), {{top, std::move(value)}});
  }

  const FiniteLattice& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  const std::vector<Part>& parts() const { return parts_; }

  bool same_frame(const StepFunction& other) const {
    return frame_ == other.frame_ || *frame_ == *other.frame_;
  }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.same_frame(b) && a.parts_ == b.parts_;
  }

  /// Rebuilds from trusted parts (disjoint complemented cover).
  static StepFunction canonical(FramePtr frame, std::vector<Part> parts) {
    const auto& lat = *frame;
    std::map<Rational, Element> by_value;
    for (auto& part : parts) {
      if (part.cell == lat.bottom()) continue;
      auto [it, fresh] = by_value.emplace(part.value, part.cell);
      if (!fresh) it->second = lat.join(it->second, part.cell);
    }
    StepFunction out;
    out.frame_ = std::move(frame);
    for (auto& [value, cell] : by_value) out.parts_.push_back({cell, value});
    std::ranges::sort(out.parts_, [](const Part& a, const Part& b) { return a.cell < b.cell; });
    return out;
  }

 private:
  FramePtr frame_;
  std::vector<Part> parts_;
};

namespace detail {

template <class Op>
StepFunction refine(const StepFunction& a, const StepFunction& b, Op op) {
  if (!a.same_frame(b)) throw Error(ErrorCode::FrameMismatch, "step functions live on different frames");
  const auto& lat = a.frame();
  std::vector<StepFunction::Part> parts;
  for (const auto& x : a.parts())
    for (const auto& y : b.parts()) {
      Element cell = lat.meet(x.cell, y.cell);
      if (cell != lat.bottom()) parts.push_back({cell, op(x.value, y.value)});
    }
  return StepFunction::canonical(a.frame_ptr(), std::move(parts));
}

template <class Op>
StepFunction map_values(const StepFunction& a, Op op) {
  std::vector<StepFunction::Part> parts;
  for (const auto& x : a.parts()) parts.push_back({x.cell, op(x.value)});
  return StepFunction::canonical(a.frame_ptr(), std::move(parts));
}

}  // namespace detail

inline StepFunction operator+(const StepFunction& a, const StepFunction& b) {
  return detail::refine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
inline StepFunction operator*(const StepFunction& a, const StepFunction& b) {
  return detail::refine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}
inline StepFunction operator-(const StepFunction& a) {
  return detail::map_values(a, [](const Rational& x) { return Rational(-x); });
}
inline StepFunction operator-(const StepFunction& a, const StepFunction& b) {
  return detail::refine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
inline StepFunction scale(const StepFunction& a, const Rational& q) {
  return detail::map_values(a, [&](const Rational& x) { return Rational(q * x); });
}
inline StepFunction operator+(const StepFunction& a, const Rational& r) {
  return detail::map_values(a, [&](const Rational& x) { return Rational(x + r); });
}
inline StepFunction operator-(const StepFunction& a, const Rational& r) {
  return detail::map_values(a, [&](const Rational& x) { return Rational(x - r); });
}

enum class ArithOp { Add, Mul, Neg, Scalar };

/// Dispatch form used by the command line; `rhs` is required for Add and Mul,
/// `factor` for Scalar.
inline StepFunction arith(ArithOp op, const StepFunction& lhs, const StepFunction* rhs = nullptr,
                          const Rational& factor = Rational(1)) {
  switch (op) {
    case ArithOp::Add:
    case ArithOp::Mul:
      if (!rhs) throw Error(ErrorCode::InvalidParams, "binary operation needs two operands");
      return op == ArithOp::Add ? lhs + *rhs : lhs * *rhs;
    case ArithOp::Neg: return -lhs;
    case ArithOp::Scalar: return scale(lhs, factor);
  }
  throw Error(ErrorCode::InvalidParams, "unknown operation");
}

/// Join of the cells with value strictly inside the interval.
inline Element eval_interval(const StepFunction& f, const RationalInterval& interval) {
  const auto& lat = f.frame();
  Element acc = lat.bottom();
  for (const auto& p : f.parts())
    if (interval.contains(p.value)) acc = lat.join(acc, p.cell);
  return acc;
}

/// coz f = f(-,0) v f(0,-).
inline Element coz(const StepFunction& f) {
  const auto& lat = f.frame();
  return lat.join(eval_interval(f, RationalInterval::below(0)), eval_interval(f, RationalInterval::above(0)));
}

/// Values actually taken, ascending.
inline std::vector<Rational> image(const StepFunction& f) {
  std::vector<Rational> out;
  for (const auto& p : f.parts()) out.push_back(p.value);
  std::ranges::sort(out);
  return out;
}

inline bool in_image(const StepFunction& f, const Rational& r) {
  return std::ranges::any_of(f.parts(), [&](const auto& p) { return p.value == r; });
}

/// e_a: 1 on a, 0 on a*.
inline StepFunction idempotent(const FramePtr& frame, Element a) {
  if (!frame->is_complemented(a))
    throw Error(ErrorCode::NotComplemented, "'" + frame->name(a) + "' is not complemented");
  return StepFunction::make(frame, {{a, Rational(1)}, {frame->pseudocomplement(a), Rational(0)}});
}

inline bool is_unit(const StepFunction& f) {
  return std::ranges::none_of(f.parts(), [](const auto& p) { return p.value == 0; });
}

inline StepFunction invert(const StepFunction& f) {
  std::vector<StepFunction::Part> parts;
  for (const auto& p : f.parts()) {
    if (p.value == 0) throw Error(ErrorCode::NotAUnit, "value 0 on cell '" + f.frame().name(p.cell) + "'");
    parts.push_back({p.cell, Rational(1) / p.value});
  }
  return StepFunction::canonical(f.frame_ptr(), std::move(parts));
}

/// Witness r in (0, 1/2) outside the image: the first of 1/3, 1/4, ...
inline Rational clean_witness(const StepFunction& f) {
  for (long k = 3;; ++k) {
    Rational r(1, k);
    if (!in_image(f, r)) return r;
  }
}

struct CleanDecomposition {
  StepFunction idempotent;
  StepFunction unit;
  Rational witness;
  Element cut;  // c = f(-, witness)
  /// unit(p,q) equals [c v f(p,q)] ^ [c -> f(p+1,q+1)] on the breakpoint grid.
  bool formula_agrees = false;
};

namespace detail {

/// Breakpoints of a step function shifted by -1, 0, +1, plus midpoints and
/// outer guards. Two step functions whose values all lie in this grid agree
/// iff their interval evaluations agree on every pair of grid points.
inline std::vector<Rational> breakpoint_grid(const StepFunction& f) {
  std::set<Rational> points;
  for (const auto& p : f.parts())
    for (int shift = -1; shift <= 1; ++shift) points.insert(p.value + shift);
  if (points.empty()) points.insert(Rational(0));  // the one-element frame
  std::vector<Rational> sorted(points.begin(), points.end());
  std::vector<Rational> grid;
  grid.push_back(sorted.front() - 1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    grid.push_back(sorted[i]);
    if (i + 1 < sorted.size()) grid.push_back((sorted[i] + sorted[i + 1]) / 2);
  }
  grid.push_back(sorted.back() + 1);
  return grid;
}

}  // namespace detail

/// Writes f = e + u with e idempotent and u a unit, following the
/// construction from a cut c = f(-, r) at a value r in (0, 1/2) outside the image.
inline CleanDecomposition clean_decompose(const StepFunction& f) {
  const auto& frame = f.frame_ptr();
  const auto& lat = *frame;
  Rational r = clean_witness(f);
  Element c = eval_interval(f, RationalInterval::below(r));
  StepFunction e = idempotent(frame, c);
  StepFunction u = f - e;

  auto grid = detail::breakpoint_grid(f);
  std::vector<std::optional<Rational>> ends;
  ends.push_back(std::nullopt);
  for (auto& g : grid) ends.emplace_back(g);
  bool agrees = true;
  for (std::size_t i = 0; i < ends.size() && agrees; ++i)
    for (std::size_t j = 0; j < ends.size() && agrees; ++j) {
      // ends[0] doubles as -infinity for the lower end and +infinity for the upper one
      RationalInterval pq{ends[i], ends[j]};
      if (pq.lower && pq.upper && !(*pq.lower < *pq.upper)) continue;
      RationalInterval shifted{pq.lower ? std::optional<Rational>(*pq.lower + 1) : std::nullopt,
                               pq.upper ? std::optional<Rational>(*pq.upper + 1) : std::nullopt};
      Element phi = lat.meet(lat.join(c, eval_interval(f, pq)), heyting(lat, c, eval_interval(f, shifted)));
      if (eval_interval(u, pq) != phi) agrees = false;
    }
  return {std::move(e), std::move(u), std::move(r), c, agrees};
}

/// rho with phi = rho * delta, given coz(phi) completely below coz(delta).
inline StepFunction factor_cb(const StepFunction& phi, const StepFunction& delta) {
  if (!phi.same_frame(delta)) throw Error(ErrorCode::FrameMismatch, "step functions live on different frames");
  const auto& lat = phi.frame();
  if (!lat.completely_below().contains(coz(phi), coz(delta)))
    throw Error(ErrorCode::HypothesisFailed, "coz(phi)='" + lat.name(coz(phi)) + "' is not completely below coz(delta)='" +
                                                 lat.name(coz(delta)) + "'");
  return detail::refine(phi, delta, [](const Rational& p, const Rational& d) {
    return d == 0 ? Rational(0) : Rational(p / d);
  });
}

}  // namespace framekit

#endif  // FRAMEKIT_STEP_RING_HPP
