#pragma once

// Canonical labeling for small graphs and digraphs.
//
// The canonical form is the lexicographically least adjacency bit-string
// over the leaves of an individualization-refinement search tree. Equitable
// refinement on (out, in) neighbor counts prunes the tree; automorphisms
// discovered by matching a leaf against an ancestor's first leaf prune it
// further (orbit pruning plus early return to that ancestor).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

inline constexpr int kCanonMaxOrder = 16;

/// Relabeling-invariant encoding: equal labels iff isomorphic.
struct CanonicalLabel {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      s.push_back(kDigits[b >> 4]);
      s.push_back(kDigits[b & 15]);
    }
    return s;
  }

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

/// order[i] is the original vertex placed at canonical position i.
struct CanonicalForm {
  CanonicalLabel label;
  std::vector<Vertex> order;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  void reset(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class CanonSearch {
 public:
  CanonSearch(int n, std::vector<std::uint32_t> out, bool directed)
      : n_(n), out_(std::move(out)), in_(static_cast<std::size_t>(n), 0), directed_(directed),
        frames_(static_cast<std::size_t>(n) + 1) {
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if ((out_[static_cast<std::size_t>(u)] >> v) & 1U) in_[static_cast<std::size_t>(v)] |= 1U << u;
  }

  CanonicalForm run() {
    std::vector<int> cells(static_cast<std::size_t>(n_), 0);
    explore(cells, 0);
    CanonicalForm form;
    form.label.bytes.reserve(best_code_.size() + 2);
    form.label.bytes.push_back(directed_ ? 'D' : 'G');
    form.label.bytes.push_back(static_cast<std::uint8_t>(n_));
    form.label.bytes.insert(form.label.bytes.end(), best_code_.begin(), best_code_.end());
    form.order = best_order_;
    return form;
  }

 private:
  struct Frame {
    bool has_first = false;
    bool first_done = false;
    std::vector<std::uint8_t> first_code;
    std::vector<int> first_order;
    UnionFind orbits;
  };

  static int compress(std::vector<int>& cells, const std::vector<std::vector<int>>& keys) {
    std::vector<std::size_t> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    int id = -1;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      if (r == 0 || keys[idx[r]] != keys[idx[r - 1]]) ++id;
      cells[idx[r]] = id;
    }
    return id + 1;
  }

  static int cell_count(const std::vector<int>& cells) {
    return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  }

  void refine(std::vector<int>& cells) const {
    int k = cell_count(cells);
    const auto n = static_cast<std::size_t>(n_);
    std::vector<std::vector<int>> keys(n);
    while (true) {
      for (std::size_t v = 0; v < n; ++v) {
        auto& key = keys[v];
        key.assign(1 + static_cast<std::size_t>(k) * (directed_ ? 2 : 1), 0);
        key[0] = cells[v];
        for (std::size_t w = 0; w < n; ++w) {
          const auto c = static_cast<std::size_t>(cells[w]);
          if ((out_[v] >> w) & 1U) ++key[1 + c];
          if (directed_ && ((in_[v] >> w) & 1U)) ++key[1 + static_cast<std::size_t>(k) + c];
        }
      }
      const int next = compress(cells, keys);
      if (next == k) return;
      k = next;
    }
  }

  std::vector<std::uint8_t> encode(const std::vector<int>& order) const {
    std::vector<std::uint8_t> code;
    int acc = 0;
    int nbits = 0;
    auto push = [&](bool bit) {
      acc = (acc << 1) | (bit ? 1 : 0);
      if (++nbits == 8) {
        code.push_back(static_cast<std::uint8_t>(acc));
        acc = 0;
        nbits = 0;
      }
    };
    for (int i = 0; i < n_; ++i) {
      const auto u = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
      for (int j = directed_ ? 0 : i + 1; j < n_; ++j) {
        if (j == i) continue;
        push(((out_[u] >> order[static_cast<std::size_t>(j)]) & 1U) != 0);
      }
    }
    if (nbits > 0) code.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return code;
  }

  // Returns the depth of the ancestor to unwind to, or -1.
  int explore(std::vector<int> cells, int depth) {
    refine(cells);
    const auto n = static_cast<std::size_t>(n_);
    if (cell_count(cells) == n_) {
      std::vector<int> order(n);
      for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(cells[v])] = static_cast<int>(v);
      auto code = encode(order);
      if (!has_best_ || code < best_code_) {
        has_best_ = true;
        best_code_ = code;
        best_order_ = order;
      }
      for (int d = 0; d < depth; ++d) {
        auto& f = frames_[static_cast<std::size_t>(d)];
        if (!f.has_first) {
          f.has_first = true;
          f.first_code = code;
          f.first_order = order;
        }
      }
      for (int d = 0; d < depth; ++d) {
        auto& f = frames_[static_cast<std::size_t>(d)];
        if (!f.first_done || f.first_code != code) continue;
        // order[i] -> first_order[i] is an automorphism fixing the prefix of d
        for (int e = 0; e <= d; ++e) {
          auto& uf = frames_[static_cast<std::size_t>(e)].orbits;
          for (std::size_t i = 0; i < n; ++i) uf.unite(order[i], f.first_order[i]);
        }
        return d;
      }
      return -1;
    }

    auto& frame = frames_[static_cast<std::size_t>(depth)];
    frame.has_first = false;
    frame.first_done = false;
    frame.orbits.reset(n);

    int target = -1;
    {
      std::vector<int> sizes(n, 0);
      for (int c : cells) ++sizes[static_cast<std::size_t>(c)];
      for (std::size_t c = 0; c < n; ++c) {
        if (sizes[c] > 1) {
          target = static_cast<int>(c);
          break;
        }
      }
    }
    std::vector<int> explored;
    for (std::size_t v = 0; v < n; ++v) {
      if (cells[v] != target) continue;
      auto& orbits = frames_[static_cast<std::size_t>(depth)].orbits;
      const int rep = orbits.find(static_cast<int>(v));
      if (std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits.find(u) == rep; }))
        continue;
      explored.push_back(static_cast<int>(v));
      std::vector<int> child(n);
      for (std::size_t u = 0; u < n; ++u) child[u] = 2 * cells[u] + (u == v ? 0 : 1);
      {
        std::vector<std::vector<int>> keys(n);
        for (std::size_t u = 0; u < n; ++u) keys[u] = {child[u]};
        compress(child, keys);
      }
      const int r = explore(std::move(child), depth + 1);
      frames_[static_cast<std::size_t>(depth)].first_done = true;
      if (r >= 0 && r < depth) return r;
    }
    return -1;
  }

  int n_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_;
  bool directed_;
  std::vector<Frame> frames_;
  bool has_best_ = false;
  std::vector<std::uint8_t> best_code_;
  std::vector<int> best_order_;
};

inline void check_canon_order(int n) {
  if (n > kCanonMaxOrder)
    throw GraphError("canonical labeling supports at most " + std::to_string(kCanonMaxOrder) +
                     " vertices, got " + std::to_string(n));
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  detail::check_canon_order(g.order());
  std::vector<std::uint32_t> out(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : g.edges()) {
    out[static_cast<std::size_t>(e.a)] |= 1U << e.b;
    out[static_cast<std::size_t>(e.b)] |= 1U << e.a;
  }
  return detail::CanonSearch(g.order(), std::move(out), false).run();
}

inline CanonicalForm canonical_form(const Orientation& d) {
  detail::check_canon_order(d.order());
  std::vector<std::uint32_t> out(static_cast<std::size_t>(d.order()), 0);
  for (const auto& [u, v] : d.arcs()) out[static_cast<std::size_t>(u)] |= 1U << v;
  return detail::CanonSearch(d.order(), std::move(out), true).run();
}

inline CanonicalLabel canonical_graph(const Graph& g) { return canonical_form(g).label; }
inline CanonicalLabel canonical_digraph(const Orientation& d) { return canonical_form(d).label; }

inline bool is_isomorphic_graph(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.size() == h.size() && canonical_graph(g) == canonical_graph(h);
}

inline bool is_isomorphic_digraph(const Orientation& a, const Orientation& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_digraph(a) == canonical_digraph(b);
}

/// Inverse of a canonical order: position of each original vertex.
inline std::vector<Vertex> canonical_relabeling(const CanonicalForm& form) {
  std::vector<Vertex> perm(form.order.size());
  for (std::size_t i = 0; i < form.order.size(); ++i)
    perm[static_cast<std::size_t>(form.order[i])] = static_cast<Vertex>(i);
  return perm;
}

/// The graph relabeled into canonical position order. Isomorphic inputs
/// produce identical outputs.
inline Graph canonical_graph_representative(const Graph& g) {
  return relabel(g, canonical_relabeling(canonical_form(g)));
}

/// The orientation carried along a vertex relabeling of its base graph.
inline Orientation relabel(const Orientation& d, const std::vector<Vertex>& perm) {
  const Graph h = relabel(d.base(), perm);
  std::vector<bool> dirs(h.size());
  for (const auto& [u, v] : d.arcs()) {
    const Vertex pu = perm[static_cast<std::size_t>(u)];
    const Vertex pv = perm[static_cast<std::size_t>(v)];
    dirs[*h.edge_index(pu, pv)] = pu < pv;
  }
  return Orientation(h, std::move(dirs));
}

}  // namespace zagreb
