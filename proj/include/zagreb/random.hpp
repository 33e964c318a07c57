#pragma once

// Seeded generators for the randomized property checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

using Rng = std::mt19937_64;

/// Connected graph: a random recursive tree plus `extra` distinct random
/// chords (fewer if the graph saturates).
inline Graph random_connected_graph(Rng& rng, int n, int extra) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  Graph g = make_graph(n, edges);
  const int max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<int> vertex(0, std::max(0, n - 1));
  for (int k = 0; k < extra && static_cast<int>(g.size()) < max_edges;) {
    const int u = vertex(rng);
    const int v = vertex(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g = add_edge(g, u, v);
    ++k;
  }
  return g;
}

/// G(n, p) graph, possibly disconnected.
inline Graph random_graph(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

inline Orientation random_orientation(Rng& rng, const Graph& g) {
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> dirs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) dirs[i] = coin(rng);
  return Orientation(g, std::move(dirs));
}

/// Uniformly random vertex permutation.
inline std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Every (u, v, w) with d(u)=2, N(u)={v,w}, d(v)>=2 and vw not an edge.
inline std::vector<std::tuple<Vertex, Vertex, Vertex>> transform_sites(const Graph& g) {
  std::vector<std::tuple<Vertex, Vertex, Vertex>> out;
  const auto deg = g.degrees();
  for (int u = 0; u < g.order(); ++u) {
    if (deg[static_cast<std::size_t>(u)] != 2) continue;
    const auto nb = g.neighbors(u);
    for (int k = 0; k < 2; ++k) {
      const Vertex v = nb[static_cast<std::size_t>(k)];
      const Vertex w = nb[static_cast<std::size_t>(1 - k)];
      if (deg[static_cast<std::size_t>(v)] >= 2 && !g.has_edge(v, w)) out.emplace_back(u, v, w);
    }
  }
  return out;
}

struct TransformInstance {
  Graph graph;
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
};

/// A random connected graph on 4..14 vertices with a valid shift site.
inline TransformInstance random_transform_instance(Rng& rng) {
  std::uniform_int_distribution<int> order(4, 14);
  while (true) {
    const int n = order(rng);
    std::uniform_int_distribution<int> extra(0, n);
    Graph g = random_connected_graph(rng, n, extra(rng));
    const auto sites = transform_sites(g);
    if (sites.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    const auto [u, v, w] = sites[pick(rng)];
    return TransformInstance{std::move(g), u, v, w};
  }
}

}  // namespace zagreb
