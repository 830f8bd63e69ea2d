#ifndef FRAMEKIT_RANDOM_HPP
#define FRAMEKIT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "framekit/step_ring.hpp"

namespace framekit {

/// Deterministic across platforms: only raw mt19937_64 draws are used, never
/// the implementation-defined std distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Numerator in [-3, 3], denominator in {1, 2, 3}; zero about a quarter of the time.
  Rational value() {
    if (below(4) == 0) return 0;
    auto num = static_cast<std::int64_t>(below(7)) - 3;
    auto den = static_cast<std::int64_t>(below(3)) + 1;
    return Rational(num, den);
  }

  /// Random partition of the atoms of BL into at most `max_blocks` cells.
  StepFunction step_function(const FramePtr& frame, std::size_t max_blocks = 4) {
    const auto& lat = *frame;
    auto atoms = atoms_of_boolean_part(lat);
    const std::size_t blocks = 1 + below(std::min<std::size_t>(max_blocks, atoms.size()));
    std::vector<Element> cells(blocks, lat.bottom());
    for (Element a : atoms) {
      auto& cell = cells[below(blocks)];
      cell = lat.join(cell, a);
    }
    std::vector<StepFunction::Part> parts;
    for (Element c : cells) parts.push_back({c, value()});
    return StepFunction::make(frame, std::move(parts));
  }

  /// Minimal nonzero complemented elements.
  static std::vector<Element> atoms_of_boolean_part(const FiniteLattice& lat) {
    auto bl = complemented_elements(lat);
    std::vector<Element> atoms;
    for (Element a : bl) {
      if (a == lat.bottom()) continue;
      bool minimal = std::ranges::none_of(bl, [&](Element b) { return b != lat.bottom() && lat.lt(b, a); });
      if (minimal) atoms.push_back(a);
    }
    return atoms;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace framekit

#endif  // FRAMEKIT_RANDOM_HPP
