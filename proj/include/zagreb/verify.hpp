#pragma once

// Closed-form bounds, orientation maxima, class-wide extremal search and the
// lemma checks (identity, sink-source bound, edge-shift transform).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zagreb/canon.hpp"
#include "zagreb/construct.hpp"
#include "zagreb/enumerate.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/io.hpp"
#include "zagreb/matching.hpp"
#include "zagreb/parallel.hpp"

namespace zagreb {

/// Doubled maximum over oriented bicyclic graphs with n vertices and
/// matching number m: m^2 - m(1+2n) + n^2 + 5n + 2.
inline std::int64_t bound_general(int n, int m) {
  if (m < 3 || 2 * m > n)
    throw GraphError("bound_general requires 3 <= m <= floor(n/2), got n=" + std::to_string(n) +
                     " m=" + std::to_string(m));
  const std::int64_t N = n;
  const std::int64_t M = m;
  return M * M - M * (1 + 2 * N) + N * N + 5 * N + 2;
}

/// Doubled maximum for the perfect-matching case n = 2m: m^2 + 9m + 2.
inline std::int64_t bound_perfect(int m) {
  if (m < 3) throw GraphError("bound_perfect requires m >= 3");
  const std::int64_t M = m;
  return M * M + 9 * M + 2;
}

/// Doubled maximum over oriented unicyclic graphs in U(2m, m): m^2 + 7m - 2.
inline std::int64_t bound_unicyclic(int m) {
  if (m < 2) throw GraphError("bound_unicyclic requires m >= 2");
  const std::int64_t M = m;
  return M * M + 7 * M - 2;
}

struct OrientationMaximum {
  std::int64_t doubled = 0;
  /// Maximizers up to digraph isomorphism, sorted by label.
  std::vector<CanonicalLabel> maximizers;
  /// Smallest maximizing mask of each class, parallel to `maximizers`.
  std::vector<std::uint64_t> witness_masks;
  std::uint64_t orientations_scanned = 0;
  std::uint64_t maximizing_orientations = 0;
};

/// Visits every orientation in Gray-code order, tracking the doubled index
/// incrementally. f(mask, doubled) is called once per orientation.
template <class F>
void scan_orientations(const Graph& g, F&& f) {
  check_orientable(g);
  const auto deg = g.degrees();
  std::vector<int> out(deg.size(), 0);
  const auto& edges = g.edges();
  // mask 0: every edge runs b -> a
  for (const auto& e : edges) ++out[static_cast<std::size_t>(e.b)];
  auto term = [&](std::size_t v) {
    const std::int64_t o = out[v];
    const std::int64_t i = deg[v] - o;
    return o * o + i * i;
  };
  std::int64_t sum = 0;
  for (std::size_t v = 0; v < deg.size(); ++v) sum += term(v);
  std::uint64_t mask = 0;
  f(mask, sum);
  const std::uint64_t count = std::uint64_t{1} << edges.size();
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    mask ^= std::uint64_t{1} << bit;
    const auto a = static_cast<std::size_t>(edges[bit].a);
    const auto b = static_cast<std::size_t>(edges[bit].b);
    sum -= term(a) + term(b);
    if ((mask >> bit) & 1U) {
      ++out[a];
      --out[b];
    } else {
      --out[a];
      ++out[b];
    }
    sum += term(a) + term(b);
    f(mask, sum);
  }
}

/// Maximum doubled index over all orientations of g, and its maximizers.
inline OrientationMaximum max_orientation_m1(const Graph& g) {
  OrientationMaximum result;
  std::vector<std::uint64_t> best_masks;
  std::int64_t best = -1;
  scan_orientations(g, [&](std::uint64_t mask, std::int64_t doubled) {
    ++result.orientations_scanned;
    if (doubled > best) {
      best = doubled;
      best_masks.clear();
    }
    if (doubled == best) best_masks.push_back(mask);
  });
  result.doubled = best;
  result.maximizing_orientations = best_masks.size();
  std::sort(best_masks.begin(), best_masks.end());
  std::map<CanonicalLabel, std::uint64_t> classes;
  for (std::uint64_t mask : best_masks) classes.try_emplace(canonical_digraph(orient(g, mask)), mask);
  for (const auto& [label, mask] : classes) {
    result.maximizers.push_back(label);
    result.witness_masks.push_back(mask);
  }
  return result;
}

inline constexpr int kVerifyMaxOrder = 8;

struct VerifyOptions {
  int workers = 1;
  bool heavy = false;  // allow n up to 12
};

/// One extremal digraph class: its base graph, direction bits and label.
struct ExtremalWitness {
  std::string graph6;
  std::string orientation_bits;
  CanonicalLabel label;
};

/// Per-graph row of a class scan.
struct GraphScan {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::int64_t m1 = 0;
  std::int64_t max_oriented_doubled = 0;
};

struct ExtremalReport {
  ClassQuery query;
  std::int64_t bound_doubled = 0;
  std::int64_t observed_doubled = 0;
  std::vector<CanonicalLabel> extremal_digraphs;      // sorted
  std::vector<CanonicalLabel> extremal_graph_labels;  // sorted
  std::vector<CanonicalLabel> expected_digraphs;      // sorted, from the builders
  std::vector<ExtremalWitness> extremal;              // parallel to extremal_digraphs
  /// Digraph classes beating the bound, or attaining it outside the expected set.
  std::vector<ExtremalWitness> counterexamples;
  std::vector<GraphScan> graphs;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t orientations_scanned = 0;
  bool closed_under_reversal = false;
  bool verified = false;
  std::string reason;

  std::string verdict() const { return verified ? "verified" : "counterexample"; }
};

/// Exhaustive check of the extremal theorem on one class. Bicyclic classes
/// are checked against bound_general(n,m) and the two orientations from
/// build_B_star; unicyclic classes need n = 2m and are checked against
/// bound_unicyclic(m) and build_U_star.
inline ExtremalReport verify_theorem(const ClassQuery& q, const VerifyOptions& opts = {}) {
  q.validate();
  const int cap = opts.heavy ? kEnumHeavyMaxOrder : kVerifyMaxOrder;
  if (q.n > cap)
    throw GraphError("verify: n=" + std::to_string(q.n) + " exceeds the desk-scale limit of " +
                     std::to_string(cap) + (opts.heavy ? "" : "; pass --heavy to allow n <= 12"));
  if (q.excess == 0 && q.n != 2 * q.m)
    throw GraphError("verify: the unicyclic theorem covers n = 2m only");

  ExtremalReport report;
  report.query = q;
  std::set<CanonicalLabel> expected;
  if (q.excess == 1) {
    report.bound_doubled = bound_general(q.n, q.m);
    for (const auto& d : build_B_star(q.n, q.m)) expected.insert(canonical_digraph(d));
  } else {
    report.bound_doubled = bound_unicyclic(q.m);
    for (const auto& d : build_U_star(q.n, q.m)) expected.insert(canonical_digraph(d));
  }
  report.expected_digraphs.assign(expected.begin(), expected.end());

  const auto graphs = enumerate_class(q, EnumOptions{opts.workers, opts.heavy});
  std::vector<OrientationMaximum> maxima(graphs.size());
  parallel_for(graphs.size(), opts.workers,
               [&](std::size_t i) { maxima[i] = max_orientation_m1(graphs[i]); });

  report.graphs_scanned = graphs.size();
  std::int64_t observed = -1;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.orientations_scanned += maxima[i].orientations_scanned;
    observed = std::max(observed, maxima[i].doubled);
    report.graphs.push_back(GraphScan{to_graph6(graphs[i]), q.n, q.m, m1_graph(graphs[i]), maxima[i].doubled});
  }
  report.observed_doubled = observed;

  std::map<CanonicalLabel, ExtremalWitness> extremal;
  std::set<CanonicalLabel> graph_labels;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& mx = maxima[i];
    const std::string g6 = to_graph6(graphs[i]);
    for (std::size_t k = 0; k < mx.maximizers.size(); ++k) {
      ExtremalWitness w{g6, orient(graphs[i], mx.witness_masks[k]).bit_string(), mx.maximizers[k]};
      if (mx.doubled > report.bound_doubled) report.counterexamples.push_back(w);
      if (mx.doubled == observed) {
        graph_labels.insert(canonical_graph(graphs[i]));
        extremal.try_emplace(mx.maximizers[k], std::move(w));
      }
    }
  }
  for (auto& [label, w] : extremal) {
    report.extremal_digraphs.push_back(label);
    if (observed == report.bound_doubled && expected.count(label) == 0) report.counterexamples.push_back(w);
    report.extremal.push_back(std::move(w));
  }
  report.extremal_graph_labels.assign(graph_labels.begin(), graph_labels.end());

  report.closed_under_reversal = std::all_of(report.extremal.begin(), report.extremal.end(), [&](const auto& w) {
    const Orientation d = orient(from_graph6(w.graph6), w.orientation_bits);
    return extremal.count(canonical_digraph(reverse(d))) > 0;
  });

  if (graphs.empty()) {
    report.reason = "class is empty";
  } else if (observed > report.bound_doubled) {
    report.reason = "bound exceeded";
  } else if (observed < report.bound_doubled) {
    report.reason = "bound not attained";
  } else if (report.extremal_digraphs != report.expected_digraphs) {
    report.reason = "extremal set differs from the constructed orientations";
  } else {
    report.verified = true;
    report.reason = "maximum equals the bound and is attained exactly by the constructed orientations";
  }
  return report;
}

/// Over all orientations: doubled <= m1_graph(g), with equality exactly on
/// the sink-source orientations.
inline bool check_sink_source_bound(const Graph& g) {
  if (g.size() > 16) throw GraphError("check_sink_source_bound supports at most 16 edges");
  const std::int64_t bound = m1_graph(g);
  std::set<std::uint64_t> equal;
  bool within = true;
  scan_orientations(g, [&](std::uint64_t mask, std::int64_t doubled) {
    if (doubled > bound) within = false;
    if (doubled == bound) equal.insert(mask);
  });
  std::set<std::uint64_t> sink_source;
  for (const auto& d : sink_source_orientations(g)) sink_source.insert(d.mask());
  return within && equal == sink_source;
}

/// m1_graph(G - uw + vw) - m1_graph(G) for u of degree 2 with neighbors v, w,
/// d(v) >= 2 and vw not an edge. The result is always 2(d(v) - 1).
inline std::int64_t check_transform(const Graph& g, Vertex u, Vertex v, Vertex w) {
  auto in_range = [&](Vertex x) { return x >= 0 && x < g.order(); };
  if (!in_range(u) || !in_range(v) || !in_range(w) || v == w)
    throw GraphError("check_transform: bad vertices");
  if (!is_connected(g)) throw GraphError("check_transform: graph must be connected");
  if (g.degree(u) != 2) throw GraphError("check_transform: d(u) must be 2");
  if (!g.has_edge(u, v) || !g.has_edge(u, w)) throw GraphError("check_transform: v, w must be the neighbors of u");
  if (g.degree(v) < 2) throw GraphError("check_transform: d(v) must be at least 2");
  if (g.has_edge(v, w)) throw GraphError("check_transform: vw must not be an edge");
  const Graph shifted = add_edge(delete_edge(g, u, w), v, w);
  const std::int64_t delta = m1_graph(shifted) - m1_graph(g);
  const std::int64_t expected = 2 * (std::int64_t{g.degree(v)} - 1);
  if (delta != expected)
    throw std::logic_error("check_transform: delta " + std::to_string(delta) + " != " + std::to_string(expected));
  return delta;
}

/// Arc-sum and vertex-sum forms agree.
inline bool check_identity(const Orientation& d) { return m1_digraph_arcs(d) == m1_digraph_vertices(d); }

}  // namespace zagreb
