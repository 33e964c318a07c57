#pragma once

// Isomorphism-free enumeration of connected unicyclic and bicyclic graphs,
// and of the orientations of a graph.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zagreb/canon.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/matching.hpp"
#include "zagreb/parallel.hpp"

namespace zagreb {

inline constexpr int kEnumMaxOrder = 9;
inline constexpr int kEnumHeavyMaxOrder = 12;
inline constexpr int kSubsetFilterMaxOrder = 7;
inline constexpr std::size_t kOrientationMaxEdges = 20;

/// excess 0 = unicyclic (|E| = n), 1 = bicyclic (|E| = n + 1).
struct ClassQuery {
  int n = 0;
  int m = 0;
  int excess = 1;

  void validate() const {
    if (excess != 0 && excess != 1) throw GraphError("excess must be 0 (unicyclic) or 1 (bicyclic)");
    const int lo = excess == 0 ? 2 : 3;
    if (m < lo || 2 * m > n)
      throw GraphError(std::string(excess == 0 ? "unicyclic" : "bicyclic") + " class requires " +
                       std::to_string(lo) + " <= m <= floor(n/2), got n=" + std::to_string(n) +
                       " m=" + std::to_string(m));
  }

  std::string family() const { return excess == 0 ? "U" : "B"; }

  friend bool operator==(const ClassQuery&, const ClassQuery&) = default;
};

struct EnumOptions {
  int workers = 1;
  bool heavy = false;  // lift the order cap from 9 to 12
};

namespace detail {

using GraphLevel = std::map<CanonicalLabel, Graph>;

inline void insert_canonical(GraphLevel& level, const Graph& g) {
  const CanonicalForm form = canonical_form(g);
  if (level.count(form.label) == 0) level.emplace(form.label, relabel(g, canonical_relabeling(form)));
}

// One growth step: every child of every parent, deduplicated by label.
template <class Children>
GraphLevel grow(const GraphLevel& parents, int workers, Children&& children) {
  std::vector<const Graph*> items;
  items.reserve(parents.size());
  for (const auto& [label, g] : parents) items.push_back(&g);
  std::vector<GraphLevel> partial(items.size());
  parallel_for(items.size(), workers, [&](std::size_t i) {
    for (const Graph& child : children(*items[i])) insert_canonical(partial[i], child);
  });
  GraphLevel merged;
  for (auto& p : partial) merged.merge(p);
  return merged;
}

inline std::vector<Graph> add_each_leaf(const Graph& g) {
  std::vector<Graph> out;
  for (int v = 0; v < g.order(); ++v) out.push_back(add_pendant(g, v));
  return out;
}

inline std::vector<Graph> add_each_edge(const Graph& g) {
  std::vector<Graph> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.push_back(add_edge(g, u, v));
  return out;
}

inline std::vector<Graph> flatten(GraphLevel&& level) {
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [label, g] : level) out.push_back(std::move(g));
  return out;
}

inline void check_enum_order(int n, bool heavy) {
  const int cap = heavy ? kEnumHeavyMaxOrder : kEnumMaxOrder;
  if (n < 1) throw GraphError("enumeration needs n >= 1");
  if (n > cap)
    throw GraphError("enumeration supports n <= " + std::to_string(cap) +
                     (heavy ? "" : " (n <= 12 with heavy checks enabled)") + ", got " + std::to_string(n));
}

}  // namespace detail

/// Trees on n vertices, one per isomorphism class, in canonical-label order.
inline std::vector<Graph> enumerate_trees(int n, const EnumOptions& opts = {}) {
  detail::check_enum_order(n, opts.heavy);
  detail::GraphLevel level;
  detail::insert_canonical(level, make_graph(1, std::vector<std::pair<int, int>>{}));
  for (int k = 1; k < n; ++k) level = detail::grow(level, opts.workers, detail::add_each_leaf);
  return detail::flatten(std::move(level));
}

/// Connected graphs with |E| = n + excess, one canonical representative per
/// isomorphism class, in canonical-label order. Grown from the trees by
/// adding one edge at a time; every connected graph with a cycle has a
/// non-bridge edge, so each class is reached from some parent.
inline std::vector<Graph> enumerate_connected_excess(int n, int excess, const EnumOptions& opts = {}) {
  if (excess != 0 && excess != 1) throw GraphError("excess must be 0 or 1");
  detail::check_enum_order(n, opts.heavy);
  if (n < 3 || n + excess > n * (n - 1) / 2) return {};
  detail::GraphLevel level;
  detail::insert_canonical(level, make_graph(1, std::vector<std::pair<int, int>>{}));
  for (int k = 1; k < n; ++k) level = detail::grow(level, opts.workers, detail::add_each_leaf);
  for (int e = 0; e <= excess; ++e) level = detail::grow(level, opts.workers, detail::add_each_edge);
  return detail::flatten(std::move(level));
}

/// Second route for small n: filter every labeled edge subset of the right
/// size for connectivity, then dedupe by canonical label.
inline std::vector<Graph> enumerate_by_subset_filter(int n, int excess) {
  if (excess != 0 && excess != 1) throw GraphError("excess must be 0 or 1");
  if (n < 1 || n > kSubsetFilterMaxOrder)
    throw GraphError("subset filter supports 1 <= n <= " + std::to_string(kSubsetFilterMaxOrder));
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int total = static_cast<int>(pairs.size());
  const int k = n + excess;
  if (n < 3 || k > total) return {};
  detail::GraphLevel level;
  // Gosper's hack over k-subsets of the pair list
  std::uint32_t subset = (std::uint32_t{1} << k) - 1;
  const std::uint32_t limit = std::uint32_t{1} << total;
  while (subset < limit) {
    std::vector<std::pair<int, int>> chosen;
    for (int i = 0; i < total; ++i)
      if ((subset >> i) & 1U) chosen.push_back(pairs[static_cast<std::size_t>(i)]);
    Graph g = make_graph(n, std::move(chosen));
    if (is_connected(g)) detail::insert_canonical(level, g);
    const std::uint32_t c = subset & (~subset + 1);
    const std::uint32_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return detail::flatten(std::move(level));
}

/// The class B(n,m) or U(n,m): representatives filtered by matching number.
inline std::vector<Graph> enumerate_class(const ClassQuery& q, const EnumOptions& opts = {}) {
  q.validate();
  std::vector<Graph> out;
  for (auto& g : enumerate_connected_excess(q.n, q.excess, opts))
    if (matching_number(g) == q.m) out.push_back(std::move(g));
  return out;
}

inline void check_orientable(const Graph& g) {
  if (g.size() > kOrientationMaxEdges)
    throw GraphError("orientation enumeration supports at most " + std::to_string(kOrientationMaxEdges) +
                     " edges, got " + std::to_string(g.size()));
}

/// Calls f(mask) for every orientation mask 0 .. 2^|E|-1 in increasing order.
template <class F>
void for_each_orientation_mask(const Graph& g, F&& f) {
  check_orientable(g);
  const std::uint64_t count = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) f(mask);
}

inline std::vector<Orientation> orientations(const Graph& g) {
  std::vector<Orientation> out;
  out.reserve(std::size_t{1} << std::min<std::size_t>(g.size(), kOrientationMaxEdges));
  for_each_orientation_mask(g, [&](std::uint64_t mask) { out.push_back(orient(g, mask)); });
  return out;
}

/// One orientation per digraph isomorphism class (the smallest mask in
/// each), ordered by canonical digraph label.
inline std::vector<Orientation> orientations_up_to_iso(const Graph& g) {
  std::map<CanonicalLabel, Orientation> classes;
  for_each_orientation_mask(g, [&](std::uint64_t mask) {
    Orientation d = orient(g, mask);
    classes.try_emplace(canonical_digraph(d), std::move(d));
  });
  std::vector<Orientation> out;
  out.reserve(classes.size());
  for (auto& [label, d] : classes) out.push_back(std::move(d));
  return out;
}

}  // namespace zagreb
