#pragma once

#include <cstdint>
#include <string>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Twice the first Zagreb index of a digraph. The digraph index is a
/// half-integer, so the doubled value keeps everything exact.
struct ZValue {
  std::int64_t doubled = 0;

  /// doubled/2 rendered as "k" or "k.5".
  std::string display() const {
    std::string s = std::to_string(doubled / 2);
    if (doubled % 2 != 0) s += ".5";
    return s;
  }

  friend auto operator<=>(const ZValue&, const ZValue&) = default;
};

inline std::string format_half(std::int64_t doubled) { return ZValue{doubled}.display(); }

/// Sum over edges of d(u)+d(v), equivalently the sum of squared degrees.
inline std::int64_t m1_graph(const Graph& g) {
  const auto deg = g.degrees();
  std::int64_t total = 0;
  for (const auto& e : g.edges())
    total += deg[static_cast<std::size_t>(e.a)] + deg[static_cast<std::size_t>(e.b)];
  return total;
}

/// Arc-sum definition: sum over arcs uv of outdeg(u) + indeg(v).
inline ZValue m1_digraph_arcs(const Orientation& d) {
  const auto out = d.out_degrees();
  const auto in = d.in_degrees();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    total += out[static_cast<std::size_t>(d.tail(i))] + in[static_cast<std::size_t>(d.head(i))];
  return ZValue{total};
}

/// Vertex-sum form: sum over vertices of outdeg^2 + indeg^2.
inline ZValue m1_digraph_vertices(const Orientation& d) {
  std::int64_t total = 0;
  for (const auto& p : d.degree_pairs())
    total += std::int64_t{p.out} * p.out + std::int64_t{p.in} * p.in;
  return ZValue{total};
}

inline ZValue m1_digraph(const Orientation& d) { return m1_digraph_vertices(d); }

}  // namespace zagreb
