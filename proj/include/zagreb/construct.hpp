#pragma once

// Builders for the extremal families and the small named graphs, plus the
// structural classifier for pendant-free bicyclic graphs.
//
// Labeling convention for hub families: hub = 0, then triangle vertices,
// then (midpoint, end) pairs of the hub-anchored 2-paths, then pendants.

#include <array>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

namespace detail {

inline void require_B_range(int n, int m) {
  if (m < 3 || 2 * m > n)
    throw GraphError("B_{n,m} requires 3 <= m <= floor(n/2), got n=" + std::to_string(n) +
                     " m=" + std::to_string(m));
}

inline void require_U_range(int n, int m) {
  if (m < 2 || 2 * m > n)
    throw GraphError("U_{n,m} requires 2 <= m <= floor(n/2), got n=" + std::to_string(n) +
                     " m=" + std::to_string(m));
}

// Hub 0 with `triangles` triangles, `paths` pendant 2-paths and `pendants`
// pendant edges.
inline Graph hub_graph(int triangles, int paths, int pendants) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int t = 0; t < triangles; ++t, next += 2) {
    edges.emplace_back(0, next);
    edges.emplace_back(0, next + 1);
    edges.emplace_back(next, next + 1);
  }
  for (int p = 0; p < paths; ++p, next += 2) {
    edges.emplace_back(0, next);
    edges.emplace_back(next, next + 1);
  }
  for (int p = 0; p < pendants; ++p, ++next) edges.emplace_back(0, next);
  return make_graph(next, std::move(edges));
}

// Every hub arc points away from the hub, each triangle's outer edge runs
// from the smaller to the larger label, and each 2-path's outer edge points
// at the midpoint (so the midpoint is a sink).
inline Orientation hub_all_out(const Graph& g) {
  std::vector<bool> dirs(g.size());
  const auto deg = g.degrees();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& e = g.edge(i);
    if (e.a == 0) {
      dirs[i] = true;
    } else if (g.has_edge(0, e.b)) {
      dirs[i] = true;  // triangle edge
    } else {
      dirs[i] = false;  // end -> midpoint
    }
  }
  return Orientation(g, std::move(dirs));
}

}  // namespace detail

/// Two triangles through a hub, plus n-2m+1 pendants and m-3 pendant
/// 2-paths at the hub. 3 <= m <= floor(n/2).
inline Graph build_B(int n, int m) {
  detail::require_B_range(n, m);
  return detail::hub_graph(2, m - 3, n - 2 * m + 1);
}

/// The two maximizing orientations of B_{n,m}: hub-all-out and its reverse.
inline std::array<Orientation, 2> build_B_star(int n, int m) {
  const Orientation first = detail::hub_all_out(build_B(n, m));
  return {first, reverse(first)};
}

/// A triangle with n-2m+1 pendants and m-2 pendant 2-paths at one vertex.
inline Graph build_U(int n, int m) {
  detail::require_U_range(n, m);
  return detail::hub_graph(1, m - 2, n - 2 * m + 1);
}

inline Graph build_cycle(int k) {
  if (k < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return make_graph(k, std::move(edges));
}

/// Path on k vertices.
inline Graph build_path(int k) {
  if (k < 1) throw GraphError("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return make_graph(k, std::move(edges));
}

/// Star K_{1,k} with center 0.
inline Graph build_star(int k) {
  if (k < 1) throw GraphError("star needs at least 1 leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return make_graph(k + 1, std::move(edges));
}

/// Hub-all-out orientation of U_{n,m} and its reverse; for (4,2) also the
/// two sink-source orientations of C4.
inline std::vector<Orientation> build_U_star(int n, int m) {
  const Orientation first = detail::hub_all_out(build_U(n, m));
  std::vector<Orientation> out{first, reverse(first)};
  if (n == 4 && m == 2) {
    for (auto& d : sink_source_orientations(build_cycle(4))) out.push_back(std::move(d));
  }
  return out;
}

/// K4 minus an edge; vertices 0 and 3 are the non-adjacent degree-2 pair,
/// so the degree vector is (2,3,3,2).
inline Graph build_B4() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

/// Bowtie: two triangles sharing vertex 0.
inline Graph build_Q0() { return detail::hub_graph(2, 0, 0); }

/// B4 with a pendant on each degree-2 vertex.
inline Graph build_Q1() { return add_pendant(add_pendant(build_B4(), 0), 3); }

/// B4 with a pendant on degree-2 vertex 0 and on degree-3 vertex 1.
inline Graph build_G4() { return add_pendant(add_pendant(build_B4(), 0), 1); }

/// Looks up C<k>, P<k>, S<k> (star K_{1,k}), B4, Q0, Q1, G4, B_{n,m} and
/// U_{n,m} (braces and underscore optional, e.g. "B_{6,3}" or "B6,3").
inline Graph build_named(const std::string& name) {
  static const std::regex kSized("([CPS])(\\d{1,3})");
  static const std::regex kFamily("([BU])_?\\{?(\\d{1,3}),(\\d{1,3})\\}?");
  std::smatch match;
  if (name == "B4") return build_B4();
  if (name == "Q0") return build_Q0();
  if (name == "Q1") return build_Q1();
  if (name == "G4") return build_G4();
  if (std::regex_match(name, match, kSized)) {
    const int k = std::stoi(match[2].str());
    switch (match[1].str()[0]) {
      case 'C': return build_cycle(k);
      case 'P': return build_path(k);
      default: return build_star(k);
    }
  }
  if (std::regex_match(name, match, kFamily)) {
    const int n = std::stoi(match[2].str());
    const int m = std::stoi(match[3].str());
    return match[1].str() == "B" ? build_B(n, m) : build_U(n, m);
  }
  throw GraphError("unknown graph name: " + name);
}

enum class BetaClass { kNone, kBeta1, kBeta2, kBeta3, kBeta4, kBeta5 };

inline std::string to_string(BetaClass c) {
  switch (c) {
    case BetaClass::kBeta1: return "beta1";
    case BetaClass::kBeta2: return "beta2";
    case BetaClass::kBeta3: return "beta3";
    case BetaClass::kBeta4: return "beta4";
    case BetaClass::kBeta5: return "beta5";
    case BetaClass::kNone: break;
  }
  return "none";
}

/// Structural type of a bicyclic graph with minimum degree >= 2:
///   beta1/beta2  two disjoint cycles joined by a path of length 1 / >= 2
///   beta3        two cycles sharing exactly one vertex
///   beta4        a Hamiltonian cycle plus a chord
///   beta5        a cycle plus a path of length >= 2 between two of its
///                non-adjacent vertices, no chord
/// Throws for graphs outside that family.
inline BetaClass classify_beta(const Graph& g) {
  if (!is_bicyclic(g)) throw GraphError("classify_beta: graph is not connected bicyclic");
  const auto deg = g.degrees();
  std::vector<Vertex> branch;
  for (int v = 0; v < g.order(); ++v) {
    const int d = deg[static_cast<std::size_t>(v)];
    if (d < 2) throw GraphError("classify_beta: graph has a vertex of degree < 2");
    if (d > 2) branch.push_back(v);
  }
  // degree excess sums to 2: one vertex of degree 4 or two of degree 3
  if (branch.size() == 1) return BetaClass::kBeta3;

  const auto adj = g.adjacency_lists();
  const Vertex x = branch[0];
  // Walk each of x's three branches through degree-2 vertices.
  int loops = 0;
  int shortest_to_other = 1 << 30;
  for (Vertex start : adj[static_cast<std::size_t>(x)]) {
    Vertex prev = x;
    Vertex cur = start;
    int length = 1;
    while (deg[static_cast<std::size_t>(cur)] == 2) {
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++length;
    }
    if (cur == x) {
      ++loops;
    } else {
      shortest_to_other = std::min(shortest_to_other, length);
    }
  }
  if (loops > 0) {
    // dumbbell: the bridge walk from x reaches the other branch vertex
    return shortest_to_other == 1 ? BetaClass::kBeta1 : BetaClass::kBeta2;
  }
  return shortest_to_other == 1 ? BetaClass::kBeta4 : BetaClass::kBeta5;
}

/// A witness in the requested class on k vertices.
inline Graph build_beta(BetaClass c, int k) {
  std::vector<std::pair<int, int>> edges;
  auto cycle = [&](int first, int len) {
    for (int i = 0; i < len; ++i) edges.emplace_back(first + i, first + (i + 1) % len);
  };
  switch (c) {
    case BetaClass::kBeta1:
      if (k < 6) throw GraphError("beta1 needs k >= 6");
      cycle(0, 3);
      cycle(3, k - 3);
      edges.emplace_back(0, 3);
      break;
    case BetaClass::kBeta2:
      if (k < 7) throw GraphError("beta2 needs k >= 7");
      cycle(0, 3);
      cycle(3, 3);
      // path 0 - 6 - 7 - ... - (k-1) - 3
      edges.emplace_back(0, 6);
      for (int v = 6; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(k - 1, 3);
      break;
    case BetaClass::kBeta3:
      if (k < 5) throw GraphError("beta3 needs k >= 5");
      cycle(0, 3);
      // second cycle 0 - 3 - ... - (k-1) - 0
      edges.emplace_back(0, 3);
      for (int v = 3; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(k - 1, 0);
      break;
    case BetaClass::kBeta4:
      if (k < 4) throw GraphError("beta4 needs k >= 4");
      cycle(0, k);
      edges.emplace_back(0, 2);
      break;
    case BetaClass::kBeta5:
      if (k < 5) throw GraphError("beta5 needs k >= 5");
      cycle(0, k - 1);
      edges.emplace_back(0, k - 1);
      edges.emplace_back(k - 1, 2);
      break;
    case BetaClass::kNone:
      throw GraphError("build_beta: no witness for class none");
  }
  return make_graph(k, std::move(edges));
}

/// Attaches one pendant vertex to every vertex (to_degree2_only=false) or to
/// every vertex of degree 2.
inline Graph attach_pendants(const Graph& g, bool to_degree2_only) {
  const auto deg = g.degrees();
  Graph out = g;
  for (int v = 0; v < g.order(); ++v)
    if (!to_degree2_only || deg[static_cast<std::size_t>(v)] == 2) out = add_pendant(out, v);
  return out;
}

}  // namespace zagreb
