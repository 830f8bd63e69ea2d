#ifndef FRAMEKIT_JSON_IO_HPP
#define FRAMEKIT_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "framekit/compactify.hpp"
#include "framekit/construct.hpp"
#include "framekit/rational.hpp"
#include "framekit/spectrum.hpp"
#include "framekit/step_ring.hpp"

namespace framekit {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

inline std::size_t size_field(const Json& j, const char* key) {
  auto v = field<long long>(j, key);
  if (v < 0) throw Error(ErrorCode::InvalidParams, std::string("'") + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Accepts either an explicit {"elements", "leq"} frame or a constructor object
/// {"kind": ...}. The explicit form may be non-distributive.
inline FiniteLattice frame_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "frame JSON must be an object");
  if (!j.contains("kind")) {
    auto elements = detail::field<std::vector<std::string>>(j, "elements");
    auto leq = j.contains("leq") ? detail::field<std::vector<std::pair<std::string, std::string>>>(j, "leq")
                                 : std::vector<std::pair<std::string, std::string>>{};
    return build_lattice(std::move(elements), leq);
  }
  const auto kind = detail::field<std::string>(j, "kind");
  if (kind == "boolean") return boolean_lattice(detail::size_field(j, "n"));
  if (kind == "chain") return chain_lattice(detail::size_field(j, "n"));
  if (kind == "topology")
    return topology_lattice(detail::field<std::vector<std::string>>(j, "points"),
                            detail::field<std::vector<std::vector<std::string>>>(j, "opens"));
  if (kind == "downsets")
    return downset_lattice(detail::field<std::vector<std::string>>(j, "elements"),
                           j.contains("leq") ? detail::field<std::vector<std::pair<std::string, std::string>>>(j, "leq")
                                             : std::vector<std::pair<std::string, std::string>>{});
  if (kind == "product") {
    if (!j.contains("left") || !j.contains("right")) throw Error(ErrorCode::ParseError, "product needs 'left' and 'right'");
    return product_lattice(frame_from_json(j.at("left")), frame_from_json(j.at("right")));
  }
  throw Error(ErrorCode::ParseError, "unknown frame kind '" + kind + "'");
}

/// Canonical form: element order preserved, order given by covering pairs.
inline Json frame_to_json(const FiniteLattice& lattice) {
  Json j;
  j["elements"] = lattice.names();
  Json leq = Json::array();
  for (auto [a, b] : lattice.covers()) leq.push_back({lattice.name(a), lattice.name(b)});
  j["leq"] = std::move(leq);
  return j;
}

inline Json profile_to_json(const FrameProfile& p) {
  return {{"regular", p.regular},
          {"completelyRegular", p.completely_regular},
          {"zeroDimensional", p.zero_dimensional},
          {"stronglyZeroDimensional", p.strongly_zero_dimensional},
          {"compact", p.compact}};
}

inline Json names_json(const FiniteLattice& lattice, const std::vector<Element>& elements) {
  Json out = Json::array();
  for (Element e : elements) out.push_back(lattice.name(e));
  return out;
}

inline StepFunction step_from_json(const Json& j, const FramePtr& frame) {
  if (!j.is_object() || !j.contains("parts") || !j.at("parts").is_array())
    throw Error(ErrorCode::ParseError, "step function needs a 'parts' array");
  std::vector<StepFunction::Part> parts;
  for (const auto& p : j.at("parts")) {
    auto cell = frame->at(detail::field<std::string>(p, "cell"));
    const auto& v = p.contains("value") ? p.at("value") : Json();
    std::string text = v.is_string() ? v.get<std::string>() : v.is_number_integer() ? v.dump() : std::string();
    parts.push_back({cell, parse_rational(text)});
  }
  return StepFunction::make(frame, std::move(parts));
}

inline Json step_to_json(const StepFunction& f, const std::string& frame_id) {
  Json parts = Json::array();
  for (const auto& p : f.parts()) parts.push_back({{"cell", f.frame().name(p.cell)}, {"value", format_rational(p.value)}});
  return {{"frame", frame_id}, {"parts", std::move(parts)}};
}

inline Json check_json(const CheckResult& r) {
  Json j;
  j["pass"] = r.skipped() ? Json(nullptr) : Json(r.passed());
  j["counterexample"] = r.failed() ? Json(r.detail) : Json(nullptr);
  if (r.skipped()) j["skipped"] = r.detail;
  return j;
}

inline Json lemma_c1_json(const LemmaC1Report& report) {
  Json parts = Json::array();
  for (std::size_t k = 0; k < report.parts.size(); ++k) {
    Json part = {{"part", k + 1}};
    part.update(check_json(report.parts[k]));
    parts.push_back(std::move(part));
  }
  Json aa = check_json(report.prop_aa);
  return {{"lemma", "c1"}, {"parts", std::move(parts)}, {"propAA", std::move(aa)},
          {"part1AllElements", report.part1_all_elements}};
}

inline Json compactification_json(const Compactification& c) {
  const auto& up = c.frame();
  Json j = frame_to_json(up);
  Json join = Json::object(), adjoint = Json::object();
  for (Element i : up.elements()) join[up.name(i)] = c.base().name(c.adjunction.join(i));
  for (Element a : c.base().elements()) adjoint[c.base().name(a)] = up.name(c.adjunction.adjoint(a));
  j["join"] = std::move(join);
  j["rightAdjoint"] = std::move(adjoint);
  return j;
}

/// `upper` is the beta_0 L the map psi lands in.
inline Json spectrum_json(const SpectrumFrame& s, const FiniteLattice& upper) {
  Json maximals = Json::array();
  for (const auto& m : s.maximals) maximals.push_back(m.ideal.name());
  Json psi = Json::object();
  for (Element o : s.opens.elements()) psi[s.opens.name(o)] = upper.name(s.psi[o.index]);
  return {{"maximals", std::move(maximals)},
          {"opensCount", s.opens.size()},
          {"psi", std::move(psi)},
          {"psiIso", s.psi_well_defined && s.psi_frame_homomorphism && s.psi_bijective},
          {"opensZeroDimensional", s.opens_zero_dimensional},
          {"lemmaQ", {{"1", s.lemma_q1}, {"2", s.lemma_q2}, {"3", s.lemma_q3}, {"4", s.lemma_q4}}},
          {"hullKernel", {{"meets", s.d_preserves_meets}, {"joins", s.d_preserves_joins}}},
          {"theoremB", s.theorem_b()}};
}

}  // namespace framekit

#endif  // FRAMEKIT_JSON_IO_HPP
