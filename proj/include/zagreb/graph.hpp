#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zagreb {

/// Raised for malformed graphs, orientations and out-of-range parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;

/// Unordered vertex pair, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Instances are immutable once built: every mutator below returns a new
/// graph, and the edge list is always sorted with each pair normalized.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
      ++deg[static_cast<std::size_t>(e.a)];
      ++deg[static_cast<std::size_t>(e.b)];
    }
    return deg;
  }

  int degree(Vertex v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.a == v) + (e.b == v);
    return d;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& e : edges_) {
      if (e.a == v) out.push_back(e.b);
      if (e.b == v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<Vertex>> adjacency_lists() const {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
      adj[static_cast<std::size_t>(e.a)].push_back(e.b);
      adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    return adj;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph make_graph(int n, std::vector<std::pair<int, int>> pairs);

  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Builds a normalized graph. Rejects loops, duplicate pairs and endpoints
/// outside 0..n-1.
inline Graph make_graph(int n, std::vector<std::pair<int, int>> pairs) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    g.edges_.push_back(Edge{u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw GraphError("duplicate edge (" + std::to_string(dup->a) + "," +
                     std::to_string(dup->b) + ")");
  return g;
}

inline Graph make_graph(int n, std::span<const Edge> edges) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.a, e.b);
  return make_graph(n, std::move(pairs));
}

inline std::vector<int> degree_vector(const Graph& g) { return g.degrees(); }

/// Component id per vertex (ids in order of smallest member) and the count.
inline std::pair<std::vector<int>, int> components(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const auto adj = g.adjacency_lists();
  std::vector<int> comp(n, -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    stack.assign(1, static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return {std::move(comp), count};
}

/// The graph on zero vertices counts as connected.
inline bool is_connected(const Graph& g) { return components(g).second <= 1; }

/// Proper 2-coloring if one exists. Each component's smallest vertex is
/// colored 0.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const auto adj = g.adjacency_lists();
  std::vector<int> color(n, -1);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.assign(1, static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj[static_cast<std::size_t>(v)]) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// |E| - |V| + (number of components).
inline int cyclomatic_number(const Graph& g) {
  return static_cast<int>(g.size()) - g.order() + components(g).second;
}

inline bool is_bicyclic(const Graph& g) {
  return is_connected(g) && static_cast<int>(g.size()) == g.order() + 1;
}

inline bool is_unicyclic(const Graph& g) {
  return is_connected(g) && static_cast<int>(g.size()) == g.order();
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  const auto idx = g.edge_index(u, v);
  if (!idx)
    throw GraphError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(*idx));
  return make_graph(g.order(), edges);
}

inline Graph delete_edge(const Graph& g, const Edge& e) { return delete_edge(g, e.a, e.b); }

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  if (g.has_edge(u, v))
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") already present");
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge{std::min(u, v), std::max(u, v)});
  return make_graph(g.order(), edges);
}

/// Appends a new vertex n adjacent to `anchor`.
inline Graph add_pendant(const Graph& g, Vertex anchor) {
  if (anchor < 0 || anchor >= g.order())
    throw GraphError("pendant anchor out of range: " + std::to_string(anchor));
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge{anchor, g.order()});
  return make_graph(g.order() + 1, edges);
}

/// Removes v and its incident edges; vertices above v shift down by one.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("no vertex " + std::to_string(v));
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) {
    if (e.a == v || e.b == v) continue;
    pairs.emplace_back(e.a > v ? e.a - 1 : e.a, e.b > v ? e.b - 1 : e.b);
  }
  return make_graph(g.order() - 1, std::move(pairs));
}

/// Graph with vertex v renamed to perm[v]. perm must be a permutation.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != static_cast<std::size_t>(g.order()))
    throw GraphError("relabel: permutation size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || seen[static_cast<std::size_t>(p)])
      throw GraphError("relabel: not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.size());
  for (const auto& e : g.edges())
    pairs.emplace_back(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]);
  return make_graph(g.order(), std::move(pairs));
}

struct DegreePair {
  int out = 0;
  int in = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// A graph with one direction per edge. Bit i set means edge i = (a,b)
/// with a < b is the arc a->b; clear means b->a.
class Orientation {
 public:
  Orientation() = default;
  Orientation(Graph base, std::vector<bool> dirs) : base_(std::move(base)), dirs_(std::move(dirs)) {
    if (dirs_.size() != base_.size())
      throw GraphError("orientation width " + std::to_string(dirs_.size()) +
                       " does not match edge count " + std::to_string(base_.size()));
  }

  const Graph& base() const { return base_; }
  const std::vector<bool>& dirs() const { return dirs_; }
  int order() const { return base_.order(); }
  std::size_t size() const { return base_.size(); }

  Vertex tail(std::size_t i) const { return dirs_[i] ? base_.edge(i).a : base_.edge(i).b; }
  Vertex head(std::size_t i) const { return dirs_[i] ? base_.edge(i).b : base_.edge(i).a; }

  std::vector<std::pair<Vertex, Vertex>> arcs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.emplace_back(tail(i), head(i));
    return out;
  }

  std::vector<DegreePair> degree_pairs() const {
    std::vector<DegreePair> deg(static_cast<std::size_t>(order()));
    for (std::size_t i = 0; i < size(); ++i) {
      ++deg[static_cast<std::size_t>(tail(i))].out;
      ++deg[static_cast<std::size_t>(head(i))].in;
    }
    return deg;
  }

  std::vector<int> out_degrees() const {
    std::vector<int> d(static_cast<std::size_t>(order()), 0);
    for (std::size_t i = 0; i < size(); ++i) ++d[static_cast<std::size_t>(tail(i))];
    return d;
  }

  std::vector<int> in_degrees() const {
    std::vector<int> d(static_cast<std::size_t>(order()), 0);
    for (std::size_t i = 0; i < size(); ++i) ++d[static_cast<std::size_t>(head(i))];
    return d;
  }

  /// Direction bits as a '0'/'1' string, character i for edge i.
  std::string bit_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i)
      if (dirs_[i]) s[i] = '1';
    return s;
  }

  /// Direction bits packed little-endian; only valid for at most 64 edges.
  std::uint64_t mask() const {
    if (size() > 64) throw GraphError("orientation has more than 64 edges");
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < size(); ++i)
      if (dirs_[i]) m |= std::uint64_t{1} << i;
    return m;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Graph base_;
  std::vector<bool> dirs_;
};

inline Orientation orient(const Graph& g, std::vector<bool> dirs) { return Orientation(g, std::move(dirs)); }

inline Orientation orient(const Graph& g, std::uint64_t mask) {
  if (g.size() > 64) throw GraphError("bitmask orientation needs at most 64 edges");
  if (g.size() < 64 && (mask >> g.size()) != 0)
    throw GraphError("orientation mask has bits beyond edge count " + std::to_string(g.size()));
  std::vector<bool> dirs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) dirs[i] = ((mask >> i) & 1U) != 0;
  return Orientation(g, std::move(dirs));
}

/// Parses a '0'/'1' string as produced by Orientation::bit_string().
inline Orientation orient(const Graph& g, const std::string& bits) {
  std::vector<bool> dirs;
  dirs.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw GraphError("orientation bits must be 0/1: " + bits);
    dirs.push_back(c == '1');
  }
  return Orientation(g, std::move(dirs));
}

inline Orientation reverse(const Orientation& d) {
  std::vector<bool> dirs = d.dirs();
  dirs.flip();
  return Orientation(d.base(), std::move(dirs));
}

/// Every vertex is a sink (outdeg 0) or a source (indeg 0).
inline bool is_sink_source(const Orientation& d) {
  for (const auto& p : d.degree_pairs())
    if (p.out != 0 && p.in != 0) return false;
  return true;
}

/// All sink-source orientations: one per choice of 2-coloring on each
/// component that has an edge. Empty for non-bipartite graphs.
inline std::vector<Orientation> sink_source_orientations(const Graph& g) {
  auto coloring = two_coloring(g);
  if (!coloring) return {};
  const auto [comp, ncomp] = components(g);
  std::vector<int> edge_comps;
  for (const auto& e : g.edges()) edge_comps.push_back(comp[static_cast<std::size_t>(e.a)]);
  std::sort(edge_comps.begin(), edge_comps.end());
  edge_comps.erase(std::unique(edge_comps.begin(), edge_comps.end()), edge_comps.end());
  if (edge_comps.size() > 20) throw GraphError("too many components for sink-source listing");

  std::vector<Orientation> out;
  const std::uint64_t choices = std::uint64_t{1} << edge_comps.size();
  for (std::uint64_t flip = 0; flip < choices; ++flip) {
    std::vector<bool> dirs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& e = g.edge(i);
      const auto slot = static_cast<std::size_t>(
          std::lower_bound(edge_comps.begin(), edge_comps.end(), comp[static_cast<std::size_t>(e.a)]) -
          edge_comps.begin());
      const bool flipped = ((flip >> slot) & 1U) != 0;
      // color-0 endpoint is the source unless the component is flipped
      const bool a_is_source = ((*coloring)[static_cast<std::size_t>(e.a)] == 0) != flipped;
      dirs[i] = a_is_source;
    }
    out.emplace_back(g, std::move(dirs));
  }
  return out;
}

}  // namespace zagreb
