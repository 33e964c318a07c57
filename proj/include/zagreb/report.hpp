#pragma once

// JSON and CSV renderings of class scans.

#include <sstream>
#include <string>

#include "json.hpp"
#include "zagreb/verify.hpp"

namespace zagreb {

inline nlohmann::ordered_json witness_json(const ExtremalWitness& w) {
  return {{"graph6", w.graph6}, {"orientation_bits", w.orientation_bits}, {"label", w.label.hex()}};
}

/// Stable report document. Key order is fixed; doubled values are the
/// machine fields, the halves are informational.
inline nlohmann::ordered_json to_json(const ExtremalReport& r) {
  nlohmann::ordered_json j;
  j["query"] = {{"class", r.query.family()}, {"n", r.query.n}, {"m", r.query.m}, {"excess", r.query.excess}};
  j["bound_doubled"] = r.bound_doubled;
  j["observed_doubled"] = r.observed_doubled;
  j["bound"] = format_half(r.bound_doubled);
  j["observed"] = format_half(r.observed_doubled);
  auto extremal = nlohmann::ordered_json::array();
  for (const auto& w : r.extremal) extremal.push_back(witness_json(w));
  j["extremal"] = std::move(extremal);
  auto graph_labels = nlohmann::ordered_json::array();
  for (const auto& l : r.extremal_graph_labels) graph_labels.push_back(l.hex());
  j["extremal_graph_labels"] = std::move(graph_labels);
  auto expected = nlohmann::ordered_json::array();
  for (const auto& l : r.expected_digraphs) expected.push_back(l.hex());
  j["expected_labels"] = std::move(expected);
  j["closed_under_reversal"] = r.closed_under_reversal;
  j["scanned"] = {{"graphs", r.graphs_scanned}, {"orientations", r.orientations_scanned}};
  auto counter = nlohmann::ordered_json::array();
  for (const auto& w : r.counterexamples) counter.push_back(witness_json(w));
  j["counterexamples"] = std::move(counter);
  j["verdict"] = r.verdict();
  j["reason"] = r.reason;
  return j;
}

inline constexpr const char* kCsvHeader = "graph6,n,m,m1,max_oriented_m1_doubled";

inline std::string csv_row(const GraphScan& s) {
  std::ostringstream out;
  out << s.graph6 << ',' << s.n << ',' << s.m << ',' << s.m1 << ',' << s.max_oriented_doubled;
  return out.str();
}

inline std::string to_csv(const ExtremalReport& r) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& s : r.graphs) out << csv_row(s) << '\n';
  return out.str();
}

}  // namespace zagreb
