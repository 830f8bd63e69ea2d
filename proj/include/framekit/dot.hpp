#ifndef FRAMEKIT_DOT_HPP
#define FRAMEKIT_DOT_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "framekit/compactify.hpp"
#include "framekit/spectrum.hpp"

namespace framekit {

namespace detail {

inline std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

// Nodes are "<prefix><index>" in element order; edges follow covers() order.
inline void hasse_body(std::ostringstream& out, const FiniteLattice& lattice, std::string_view prefix,
                       const std::vector<std::string>& labels, std::string_view indent) {
  for (Element e : lattice.elements())
    out << indent << prefix << e.index << " [label=" << dot_quote(labels[e.index]) << "];\n";
  for (auto [a, b] : lattice.covers()) out << indent << prefix << a.index << " -> " << prefix << b.index << ";\n";
}

}  // namespace detail

/// Hasse diagram (covering pairs only), bottom to top.
inline std::string hasse_dot(const FiniteLattice& lattice, std::string_view graph = "L") {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(graph) << " {\n  rankdir=BT;\n";
  detail::hasse_body(out, lattice, "n", lattice.names(), "  ");
  out << "}\n";
  return out.str();
}

/// The compactification's Hasse diagram; with `annotate`, also L and the
/// join map (dashed) and right adjoint (dotted) between them.
inline std::string compactification_dot(const Compactification& c, std::string_view graph, bool annotate) {
  if (!annotate) return hasse_dot(c.frame(), graph);
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(graph) << " {\n  rankdir=BT;\n";
  out << "  subgraph cluster_upper {\n    label=" << detail::dot_quote(graph) << ";\n";
  detail::hasse_body(out, c.frame(), "u", c.frame().names(), "    ");
  out << "  }\n  subgraph cluster_lower {\n    label=\"L\";\n";
  detail::hasse_body(out, c.base(), "l", c.base().names(), "    ");
  out << "  }\n";
  for (Element i : c.frame().elements())
    out << "  u" << i.index << " -> l" << c.adjunction.join(i).index << " [style=dashed, label=\"j\"];\n";
  for (Element a : c.base().elements())
    out << "  l" << a.index << " -> u" << c.adjunction.adjoint(a).index << " [style=dotted, label=\"r\"];\n";
  out << "}\n";
  return out.str();
}

/// Opens lattice of the maximal spectrum, each node labelled with its image
/// under psi in `upper`.
inline std::string spectrum_dot(const SpectrumFrame& s, const FiniteLattice& upper, std::string_view graph = "Max") {
  std::vector<std::string> labels;
  for (Element o : s.opens.elements()) labels.push_back(s.opens.name(o) + " | " + upper.name(s.psi[o.index]));
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(graph) << " {\n  rankdir=BT;\n";
  detail::hasse_body(out, s.opens, "n", labels, "  ");
  out << "}\n";
  return out.str();
}

}  // namespace framekit

#endif  // FRAMEKIT_DOT_HPP
