#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// A matching given as indices into Graph::edges().
struct MatchingCertificate {
  std::vector<std::size_t> edge_indices;

  std::size_t size() const { return edge_indices.size(); }
};

/// True iff the indices are in range, distinct, and pairwise vertex-disjoint.
inline bool is_matching(const Graph& g, const MatchingCertificate& m) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::size_t> idx = m.edge_indices;
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
  for (std::size_t i : idx) {
    if (i >= g.size()) return false;
    const auto& e = g.edge(i);
    auto& ua = used[static_cast<std::size_t>(e.a)];
    auto& ub = used[static_cast<std::size_t>(e.b)];
    if (ua || ub) return false;
    ua = ub = 1;
  }
  return true;
}

inline bool is_saturated(const Graph& g, const MatchingCertificate& m, Vertex v) {
  return std::any_of(m.edge_indices.begin(), m.edge_indices.end(), [&](std::size_t i) {
    return g.edge(i).a == v || g.edge(i).b == v;
  });
}

namespace detail {

// Edmonds' augmenting-path search with blossom contraction, O(V^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : n_(static_cast<std::size_t>(g.order())),
        adj_(g.adjacency_lists()),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  std::vector<int> solve() {
    // greedy start
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : adj_[v]) {
        if (match_[static_cast<std::size_t>(w)] == -1) {
          match_[v] = w;
          match_[static_cast<std::size_t>(w)] = static_cast<int>(v);
          break;
        }
      }
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(static_cast<int>(v));
      while (end != -1) {
        const int pv = parent_[static_cast<std::size_t>(end)];
        const int ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(end)] = pv;
        match_[static_cast<std::size_t>(pv)] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (match_[static_cast<std::size_t>(a)] == -1) break;
      a = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(a)])];
    }
    while (true) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      const auto mv = static_cast<std::size_t>(match_[static_cast<std::size_t>(v)]);
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      blossom_[static_cast<std::size_t>(base_[mv])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = static_cast<int>(mv);
      v = parent_[mv];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<int>(i);
    used_[static_cast<std::size_t>(root)] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[static_cast<std::size_t>(v)]) {
        const auto t = static_cast<std::size_t>(to);
        if (base_[static_cast<std::size_t>(v)] == base_[t] || match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root || (match_[t] != -1 && parent_[static_cast<std::size_t>(match_[t])] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[static_cast<std::size_t>(base_[i])]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(static_cast<int>(i));
              }
            }
          }
        } else if (parent_[t] == -1) {
          parent_[t] = v;
          if (match_[t] == -1) return to;
          const auto mt = static_cast<std::size_t>(match_[t]);
          used_[mt] = 1;
          q.push(match_[t]);
        }
      }
    }
    return -1;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace detail

inline MatchingCertificate maximum_matching(const Graph& g) {
  const auto mate = detail::BlossomMatcher(g).solve();
  MatchingCertificate cert;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    const int w = mate[v];
    if (w > static_cast<int>(v)) cert.edge_indices.push_back(*g.edge_index(static_cast<int>(v), w));
  }
  std::sort(cert.edge_indices.begin(), cert.edge_indices.end());
  return cert;
}

inline int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

inline constexpr std::size_t kBruteForceMatchingMaxEdges = 24;

namespace detail {

inline void brute_matching(const Graph& g, std::size_t next, std::uint64_t used, int size, int& best) {
  if (size > best) best = size;
  const int remaining = static_cast<int>(g.size() - next);
  if (size + remaining <= best) return;
  if (best >= g.order() / 2) return;  // floor(n/2) cannot be beaten
  for (std::size_t i = next; i < g.size(); ++i) {
    const auto& e = g.edge(i);
    const std::uint64_t bits = (std::uint64_t{1} << e.a) | (std::uint64_t{1} << e.b);
    if (used & bits) continue;
    brute_matching(g, i + 1, used | bits, size + 1, best);
  }
}

}  // namespace detail

/// Independent oracle: largest vertex-disjoint edge subset by exhaustive
/// search. Limited to 24 edges.
inline int brute_force_matching_number(const Graph& g) {
  if (g.size() > kBruteForceMatchingMaxEdges)
    throw GraphError("brute-force matching supports at most 24 edges");
  if (g.order() > 64) throw GraphError("brute-force matching supports at most 64 vertices");
  int best = 0;
  detail::brute_matching(g, 0, 0, 0, best);
  return best;
}

/// Throws if m is not a matching of g.
inline bool is_perfect(const Graph& g, const MatchingCertificate& m) {
  if (!is_matching(g, m)) throw GraphError("invalid matching certificate");
  return 2 * m.size() == static_cast<std::size_t>(g.order());
}

}  // namespace zagreb
