#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests can drive it in-process.
//
// Exit codes: 0 success / verified, 1 counterexample or failed property,
// 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zagreb/zagreb.hpp"
#include "zagreb/random.hpp"

namespace zagreb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  int n = 0;
  int m = 0;
  int excess = -1;
  std::string klass;   // "B" or "U"
  std::string family;  // B, U, Bstar, Ustar
  std::string name;
  std::string graph6;
  std::string input;
  std::string orientation;
  std::string format;
  int workers = 1;
  bool heavy = false;
  bool count_only = false;
  std::uint64_t seed = 1;
  int samples = 1000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int excess_of(const RunConfig& cfg) {
  if (!cfg.klass.empty()) {
    const int from_class = cfg.klass == "U" ? 0 : 1;
    if (cfg.excess >= 0 && cfg.excess != from_class) throw UsageError("--class and --excess disagree");
    return from_class;
  }
  if (cfg.excess < 0) throw UsageError("one of --class or --excess is required");
  return cfg.excess;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// graph6 if the first line is a single printable token that is not a bare
// integer, else edge list.
inline Graph parse_graph_text(const std::string& text) {
  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first)) {
    if (first.find_first_not_of(" \t\r") != std::string::npos && first.rfind('#', 0) != 0) break;
  }
  const auto begin = first.find_first_not_of(" \t\r");
  const auto end = first.find_last_not_of(" \t\r");
  const std::string token = begin == std::string::npos ? "" : first.substr(begin, end - begin + 1);
  const bool numeric = !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ';' || c == ' ';
  });
  if (numeric) return from_edge_list(text);
  return from_graph6(token);
}

inline void print_text_report(const ExtremalReport& r, std::ostream& out) {
  out << "class " << r.query.family() << "(" << r.query.n << "," << r.query.m << ")\n";
  out << "graphs scanned: " << r.graphs_scanned << "\n";
  out << "orientations scanned: " << r.orientations_scanned << "\n";
  out << "bound M1: " << format_half(r.bound_doubled) << " (doubled " << r.bound_doubled << ")\n";
  out << "observed max M1: " << format_half(r.observed_doubled) << " (doubled " << r.observed_doubled << ")\n";
  out << "extremal digraph classes: " << r.extremal.size() << "\n";
  for (const auto& w : r.extremal) out << "  " << w.graph6 << " " << w.orientation_bits << "\n";
  out << "verdict: " << r.verdict() << " (" << r.reason << ")\n";
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = cfg.format.empty() ? "" : cfg.format;
  if (!cfg.name.empty() == !cfg.family.empty()) throw UsageError("construct needs exactly one of --name or --family");
  const bool star = cfg.family == "Bstar" || cfg.family == "Ustar";
  if (!star) {
    Graph g;
    if (!cfg.name.empty()) {
      g = build_named(cfg.name);
    } else if (cfg.family == "B") {
      g = build_B(cfg.n, cfg.m);
    } else {
      g = build_U(cfg.n, cfg.m);
    }
    const std::string f = fmt.empty() ? "graph6" : fmt;
    if (f == "graph6") {
      out << to_graph6(g) << "\n";
    } else if (f == "dot") {
      out << to_dot(g);
    } else if (f == "edgelist") {
      out << to_edge_list(g);
    } else if (f == "json") {
      nlohmann::ordered_json j;
      j["graph6"] = to_graph6(g);
      j["n"] = g.order();
      auto edges = nlohmann::ordered_json::array();
      for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
      j["edges"] = std::move(edges);
      j["m1"] = m1_graph(g);
      j["matching_number"] = matching_number(g);
      out << j.dump(2) << "\n";
    } else {
      throw UsageError("construct: unsupported format " + f);
    }
    return kExitOk;
  }

  std::vector<Orientation> ds;
  if (cfg.family == "Bstar") {
    for (auto& d : build_B_star(cfg.n, cfg.m)) ds.push_back(d);
  } else {
    ds = build_U_star(cfg.n, cfg.m);
  }
  const std::string f = fmt.empty() ? "dot" : fmt;
  if (f == "dot") {
    for (std::size_t i = 0; i < ds.size(); ++i) out << to_dot(ds[i], "D" + std::to_string(i + 1));
  } else if (f == "graph6") {
    for (const auto& d : ds) out << to_graph6(d.base()) << " " << d.bit_string() << "\n";
  } else if (f == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : ds)
      arr.push_back({{"graph6", to_graph6(d.base())},
                     {"orientation_bits", d.bit_string()},
                     {"m1_doubled", m1_digraph(d).doubled}});
    out << arr.dump(2) << "\n";
  } else {
    throw UsageError("construct: unsupported format " + f);
  }
  return kExitOk;
}

inline int cmd_index(const RunConfig& cfg, std::ostream& out) {
  const int sources = !cfg.graph6.empty() + !cfg.input.empty() + !cfg.name.empty();
  if (sources != 1) throw UsageError("index needs exactly one of --graph6, --input or --name");
  Graph g;
  if (!cfg.graph6.empty()) {
    g = from_graph6(cfg.graph6);
  } else if (!cfg.input.empty()) {
    g = parse_graph_text(read_text(cfg.input));
  } else {
    g = build_named(cfg.name);
  }
  std::optional<Orientation> d;
  if (!cfg.orientation.empty()) d = orient(g, cfg.orientation);

  const std::string f = cfg.format.empty() ? "text" : cfg.format;
  if (f == "text") {
    out << "graph6: " << to_graph6(g) << "\n";
    out << "vertices: " << g.order() << " edges: " << g.size() << "\n";
    out << "M1(G) = " << m1_graph(g) << "\n";
    if (d) {
      const ZValue arcs = m1_digraph_arcs(*d);
      const ZValue verts = m1_digraph_vertices(*d);
      out << "M1(D) = " << verts.display() << " (arc-sum doubled " << arcs.doubled << ", vertex-sum doubled "
          << verts.doubled << ")\n";
    }
  } else if (f == "json") {
    nlohmann::ordered_json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["edges"] = g.size();
    j["m1_graph"] = m1_graph(g);
    if (d) {
      j["orientation_bits"] = d->bit_string();
      j["m1_digraph_arcs_doubled"] = m1_digraph_arcs(*d).doubled;
      j["m1_digraph_vertices_doubled"] = m1_digraph_vertices(*d).doubled;
      j["m1_digraph"] = m1_digraph(*d).display();
    }
    out << j.dump(2) << "\n";
  } else {
    throw UsageError("index: unsupported format " + f);
  }
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.klass.empty()) throw UsageError("verify needs --class B or --class U");
  const ClassQuery q{cfg.n, cfg.m, excess_of(cfg)};
  const ExtremalReport r = verify_theorem(q, VerifyOptions{cfg.workers, cfg.heavy});
  const std::string f = cfg.format.empty() ? "json" : cfg.format;
  if (f == "json") {
    out << to_json(r).dump(2) << "\n";
  } else if (f == "text") {
    print_text_report(r, out);
  } else if (f == "csv") {
    out << to_csv(r);
  } else {
    throw UsageError("verify: unsupported format " + f);
  }
  return r.verified ? kExitOk : kExitCounterexample;
}

inline int cmd_enum(const RunConfig& cfg, std::ostream& out) {
  const int excess = excess_of(cfg);
  const EnumOptions opts{cfg.workers, cfg.heavy};
  std::vector<Graph> graphs;
  if (cfg.m != 0) {
    graphs = enumerate_class(ClassQuery{cfg.n, cfg.m, excess}, opts);
  } else {
    graphs = enumerate_connected_excess(cfg.n, excess, opts);
  }
  if (cfg.count_only) {
    out << graphs.size() << "\n";
    return kExitOk;
  }
  const std::string f = cfg.format.empty() ? "graph6" : cfg.format;
  if (f == "graph6") {
    for (const auto& g : graphs) out << to_graph6(g) << "\n";
  } else if (f == "csv") {
    std::vector<GraphScan> rows(graphs.size());
    parallel_for(graphs.size(), cfg.workers, [&](std::size_t i) {
      const auto& g = graphs[i];
      rows[i] = GraphScan{to_graph6(g), g.order(), matching_number(g), m1_graph(g), max_orientation_m1(g).doubled};
    });
    out << kCsvHeader << "\n";
    for (const auto& r : rows) out << csv_row(r) << "\n";
  } else {
    throw UsageError("enum: unsupported format " + f);
  }
  return kExitOk;
}

// Randomized versions of the identity, transform, matching-oracle and
// canonical-invariance properties.
inline int cmd_props(const RunConfig& cfg, std::ostream& out) {
  Rng rng(cfg.seed);
  bool all = true;
  auto report = [&](const std::string& name, int failures) {
    out << (failures == 0 ? "PASS " : "FAIL ") << name << " (" << cfg.samples << " samples, " << failures
        << " failures)\n";
    all = all && failures == 0;
  };

  int failures = 0;
  std::uniform_int_distribution<int> order(2, 14);
  for (int i = 0; i < cfg.samples; ++i) {
    const Graph g = random_connected_graph(rng, order(rng), order(rng));
    if (!check_identity(random_orientation(rng, g))) ++failures;
  }
  report("identity arc-sum == vertex-sum", failures);

  failures = 0;
  for (int i = 0; i < cfg.samples; ++i) {
    const auto inst = random_transform_instance(rng);
    const auto delta = check_transform(inst.graph, inst.u, inst.v, inst.w);
    if (delta != 2 * (inst.graph.degree(inst.v) - 1) || delta <= 0) ++failures;
  }
  report("edge shift raises M1 by 2(d(v)-1)", failures);

  failures = 0;
  std::uniform_int_distribution<int> small(2, 12);
  for (int checked = 0; checked < cfg.samples;) {
    Graph g = random_graph(rng, small(rng), 0.3);
    if (g.size() > 20) continue;
    ++checked;
    const auto cert = maximum_matching(g);
    if (!is_matching(g, cert) || static_cast<int>(cert.size()) != brute_force_matching_number(g)) ++failures;
  }
  report("blossom matching == brute force", failures);

  failures = 0;
  std::uniform_int_distribution<int> canon_order(1, 10);
  for (int i = 0; i < cfg.samples; ++i) {
    const int n = canon_order(rng);
    const Graph g = random_graph(rng, n, 0.4);
    if (canonical_graph(g) != canonical_graph(relabel(g, random_permutation(rng, n)))) ++failures;
  }
  report("canonical label invariant under relabeling", failures);

  return all ? kExitOk : kExitCounterexample;
}

}  // namespace detail

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();

  CLI::App app{"Exact first Zagreb index toolkit for oriented unicyclic and bicyclic graphs", "zagreb"};
  app.require_subcommand(1);

  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads (default: $ZAGREB_WORKERS or 1)")
        ->check(CLI::Range(1, 256));
  };

  auto* construct = app.add_subcommand("construct", "build a named graph or an extremal family");
  construct->add_option("--name", cfg.name, "C<k>, P<k>, S<k>, B4, Q0, Q1, G4, B_{n,m}, U_{n,m}");
  construct->add_option("--family", cfg.family, "B, U, Bstar or Ustar")
      ->check(CLI::IsMember({"B", "U", "Bstar", "Ustar"}));
  construct->add_option("--n", cfg.n, "vertex count");
  construct->add_option("--m", cfg.m, "matching number");
  construct->add_option("--format", cfg.format, "graph6, dot, edgelist or json");

  auto* index = app.add_subcommand("index", "compute M1(G) and, with --orientation, M1(D)");
  index->add_option("--graph6", cfg.graph6, "graph in graph6");
  index->add_option("--input", cfg.input, "file with a graph6 line or an edge list");
  index->add_option("--name", cfg.name, "named graph (see construct)");
  index->add_option("--orientation", cfg.orientation, "direction bits, one 0/1 per edge");
  index->add_option("--format", cfg.format, "text or json");

  auto* verify = app.add_subcommand("verify", "exhaustively check the extremal theorem on a class");
  verify->add_option("--class", cfg.klass, "B (bicyclic) or U (unicyclic)")
      ->required()
      ->check(CLI::IsMember({"B", "U"}));
  verify->add_option("--n", cfg.n, "vertex count")->required();
  verify->add_option("--m", cfg.m, "matching number")->required();
  verify->add_flag("--heavy", cfg.heavy, "allow classes with n up to 12");
  verify->add_option("--format", cfg.format, "json, text or csv");
  add_workers(verify);

  auto* enumerate = app.add_subcommand("enum", "list connected unicyclic/bicyclic graphs as graph6");
  enumerate->add_option("--class", cfg.klass, "B or U")->check(CLI::IsMember({"B", "U"}));
  enumerate->add_option("--excess", cfg.excess, "0 unicyclic, 1 bicyclic")->check(CLI::Range(0, 1));
  enumerate->add_option("--n", cfg.n, "vertex count")->required();
  enumerate->add_option("--m", cfg.m, "matching number filter");
  enumerate->add_flag("--count-only", cfg.count_only, "print only the number of graphs");
  enumerate->add_flag("--heavy", cfg.heavy, "allow n up to 12");
  enumerate->add_option("--format", cfg.format, "graph6 or csv");
  add_workers(enumerate);

  auto* props = app.add_subcommand("props", "randomized property checks");
  props->add_option("--seed", cfg.seed, "RNG seed");
  props->add_option("--samples", cfg.samples, "samples per property")->check(CLI::Range(1, 10000000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "zagreb: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (*construct) return detail::cmd_construct(cfg, out);
    if (*index) return detail::cmd_index(cfg, out);
    if (*verify) return detail::cmd_verify(cfg, out);
    if (*enumerate) return detail::cmd_enum(cfg, out);
    if (*props) return detail::cmd_props(cfg, out);
  } catch (const UsageError& e) {
    err << "zagreb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "zagreb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "zagreb: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zagreb::cli
