#pragma once

// graph6, edge-list and DOT serialization.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kGraph6MaxOrder = 62;

/// Standard graph6 encoding: N(n) followed by the upper triangle read
/// column by column, six bits per byte offset by 63.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6 writer supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  if (text[0] == 126) throw ParseError("graph6: only graphs with at most 62 vertices are supported");
  const int n = text[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));
  std::vector<std::pair<int, int>> pairs;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return make_graph(n, std::move(pairs));
}

/// Edge-list text: first token n (optionally followed by ';'), then one
/// "a b" pair per line. '#' starts a comment.
inline Graph from_edge_list(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (comment) continue;
    cleaned.push_back(c == ';' || c == ',' ? ' ' : c);
  }
  std::istringstream in(cleaned);
  long long n = 0;
  if (!(in >> n)) throw ParseError("edge list: missing vertex count");
  if (n < 0 || n > 100000) throw ParseError("edge list: bad vertex count");
  std::vector<std::pair<int, int>> pairs;
  long long a = 0;
  while (in >> a) {
    long long b = 0;
    if (!(in >> b)) throw ParseError("edge list: dangling endpoint");
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!in.eof()) throw ParseError("edge list: non-numeric token");
  try {
    return make_graph(static_cast<int>(n), std::move(pairs));
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ";\n";
  for (const auto& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const Orientation& d, std::string_view name = "D") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zagreb
