#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace zagreb {
namespace {

std::int64_t square_sum(const Graph& g) {
  std::int64_t s = 0;
  for (int d : g.degrees()) s += std::int64_t{d} * d;
  return s;
}

TEST(Bounds, Values) {
  EXPECT_EQ(bound_general(6, 3), 38);
  EXPECT_EQ(bound_general(7, 3), 50);
  EXPECT_EQ(bound_general(8, 3), 64);
  EXPECT_EQ(bound_general(8, 4), 54);
  EXPECT_EQ(bound_perfect(3), 38);
  EXPECT_EQ(bound_perfect(4), 54);
  EXPECT_EQ(bound_perfect(5), 72);
  EXPECT_EQ(bound_unicyclic(2), 16);
  EXPECT_EQ(bound_unicyclic(3), 28);
  EXPECT_EQ(bound_unicyclic(4), 42);
  for (int m = 3; m <= 10; ++m) EXPECT_EQ(bound_general(2 * m, m), bound_perfect(m));
}

TEST(Bounds, RangeErrors) {
  EXPECT_THROW(bound_general(6, 2), GraphError);
  EXPECT_THROW(bound_general(7, 4), GraphError);
  EXPECT_THROW(bound_perfect(2), GraphError);
  EXPECT_THROW(bound_unicyclic(1), GraphError);
}

TEST(Bounds, GeneralBoundIsBruteMaximumOfConstructedGraph) {
  for (int n = 6; n <= 10; ++n)
    for (int m = 3; 2 * m <= n; ++m) EXPECT_EQ(bound_general(n, m), testing::brute_max_doubled(build_B(n, m)));
}

TEST(OrientationMax, ExtremalGraph) {
  const auto mx = max_orientation_m1(build_B(6, 3));
  EXPECT_EQ(mx.doubled, 38);
  ASSERT_EQ(mx.maximizers.size(), 2u);
  std::set<CanonicalLabel> want;
  for (const auto& d : build_B_star(6, 3)) want.insert(canonical_digraph(d));
  EXPECT_EQ(std::set<CanonicalLabel>(mx.maximizers.begin(), mx.maximizers.end()), want);
  EXPECT_EQ(mx.orientations_scanned, 128u);
}

TEST(OrientationMax, SmallCaseGraphs) {
  EXPECT_LT(max_orientation_m1(build_G4()).doubled, 38);
  EXPECT_EQ(max_orientation_m1(build_G4()).doubled, testing::brute_max_doubled(build_G4()));
  EXPECT_EQ(max_orientation_m1(build_B4()).doubled, 22);
  EXPECT_EQ(max_orientation_m1(build_Q0()).doubled, 28);
  EXPECT_LT(max_orientation_m1(build_Q1()).doubled, 38);

  const auto c4 = max_orientation_m1(build_cycle(4));
  EXPECT_EQ(c4.doubled, 16);
  EXPECT_EQ(c4.maximizing_orientations, 2u);
  ASSERT_EQ(c4.maximizers.size(), 1u);
  EXPECT_TRUE(is_sink_source(orient(build_cycle(4), c4.witness_masks[0])));
}

TEST(OrientationMax, GrayScanMatchesPerMaskRecomputation) {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(rng, 2 + i % 8, i % 5);
    if (g.size() > 12) continue;
    std::uint64_t visits = 0;
    bool agree = true;
    scan_orientations(g, [&](std::uint64_t mask, std::int64_t doubled) {
      ++visits;
      agree = agree && doubled == testing::doubled_from_arcs(orient(g, mask));
    });
    EXPECT_TRUE(agree);
    EXPECT_EQ(visits, std::uint64_t{1} << g.size());
    const auto mx = max_orientation_m1(g);
    EXPECT_EQ(mx.doubled, testing::brute_max_doubled(g));
    EXPECT_LE(mx.doubled, m1_graph(g));
    if (!is_bipartite(g)) {
      EXPECT_LT(mx.doubled, m1_graph(g));
    }
  }
}

TEST(VerifyTheorem, BicyclicSixThree) {
  const auto r = verify_theorem({6, 3, 1});
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.verdict(), "verified");
  EXPECT_EQ(r.bound_doubled, 38);
  EXPECT_EQ(r.observed_doubled, 38);
  EXPECT_EQ(r.extremal_digraphs.size(), 2u);
  EXPECT_EQ(r.extremal_digraphs, r.expected_digraphs);
  EXPECT_EQ(r.extremal_graph_labels.size(), 1u);
  EXPECT_EQ(r.extremal_graph_labels[0], canonical_graph(build_B(6, 3)));
  EXPECT_TRUE(r.closed_under_reversal);
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.graphs_scanned, 15u);
  EXPECT_EQ(r.orientations_scanned, 15u * 128u);
}

TEST(VerifyTheorem, EveryOtherGraphStaysBelowBound) {
  const Graph extremal = build_B(6, 3);
  for (const auto& g : enumerate_class({6, 3, 1})) {
    if (testing::brute_isomorphic(g, extremal)) continue;
    EXPECT_LT(testing::brute_max_doubled(g), 38) << to_graph6(g);
  }
}

TEST(VerifyTheorem, DeskScaleBicyclicClasses) {
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {8, 4}}) {
    const auto r = verify_theorem({n, m, 1});
    EXPECT_TRUE(r.verified) << n << "," << m << " " << r.reason;
    EXPECT_EQ(r.observed_doubled, bound_general(n, m));
    EXPECT_EQ(r.extremal_digraphs.size(), 2u);
    EXPECT_TRUE(r.closed_under_reversal);
  }
}

TEST(VerifyTheorem, UnicyclicFourTwo) {
  const auto r = verify_theorem({4, 2, 0});
  EXPECT_TRUE(r.verified) << r.reason;
  EXPECT_EQ(r.observed_doubled, 16);
  // four constructed orientations, the two on C4 are isomorphic to each other
  EXPECT_EQ(build_U_star(4, 2).size(), 4u);
  EXPECT_EQ(r.extremal_digraphs.size(), 3u);
  EXPECT_EQ(r.extremal_graph_labels.size(), 2u);
}

TEST(VerifyTheorem, UnicyclicEightFour) {
  const auto r = verify_theorem({8, 4, 0});
  EXPECT_TRUE(r.verified) << r.reason;
  EXPECT_EQ(r.observed_doubled, 42);
}

TEST(VerifyTheorem, UnicyclicSixThreeHasASecondExtremalGraph) {
  // C4 with pendants on two adjacent vertices: bipartite, so its sink-source
  // orientation reaches m1_graph = 9+9+4+4+1+1 = 28
  const Graph other = make_graph(6, {{2, 3}, {3, 4}, {4, 5}, {2, 5}, {0, 5}, {1, 4}});
  EXPECT_EQ(square_sum(other), 28);
  EXPECT_EQ(matching_number(other), 3);
  EXPECT_EQ(testing::brute_max_doubled(other), 28);

  const auto r = verify_theorem({6, 3, 0});
  EXPECT_EQ(r.observed_doubled, 28);
  EXPECT_EQ(r.bound_doubled, 28);
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.verdict(), "counterexample");
  ASSERT_FALSE(r.counterexamples.empty());
  for (const auto& w : r.counterexamples) EXPECT_TRUE(testing::brute_isomorphic(from_graph6(w.graph6), other));
  EXPECT_TRUE(std::includes(r.extremal_digraphs.begin(), r.extremal_digraphs.end(), r.expected_digraphs.begin(),
                            r.expected_digraphs.end()));
}

TEST(VerifyTheorem, Guards) {
  EXPECT_THROW(verify_theorem({9, 3, 1}), GraphError);
  EXPECT_THROW(verify_theorem({12, 6, 1}), GraphError);
  EXPECT_THROW(verify_theorem({7, 3, 0}), GraphError);
  EXPECT_THROW(verify_theorem({6, 2, 1}), GraphError);
  EXPECT_THROW(verify_theorem({13, 6, 1}, {1, true}), GraphError);
}

TEST(VerifyTheorem, DeterministicAcrossWorkers) {
  const auto a = to_json(verify_theorem({8, 3, 1}, {1, false})).dump();
  for (int w : {2, 4}) EXPECT_EQ(to_json(verify_theorem({8, 3, 1}, {w, false})).dump(), a);
}

TEST(Report, JsonShape) {
  const auto j = to_json(verify_theorem({6, 3, 1}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"query", "bound_doubled", "observed_doubled", "bound", "observed",
                                            "extremal", "extremal_graph_labels", "expected_labels",
                                            "closed_under_reversal", "scanned", "counterexamples", "verdict",
                                            "reason"}));
  EXPECT_EQ(j["query"]["class"], "B");
  EXPECT_EQ(j["bound"], "19");
  EXPECT_EQ(j["verdict"], "verified");
  EXPECT_EQ(j["scanned"]["graphs"], 15);
  ASSERT_EQ(j["extremal"].size(), 2u);
  for (const auto& w : j["extremal"]) {
    const Orientation d = orient(from_graph6(w["graph6"].get<std::string>()), w["orientation_bits"].get<std::string>());
    EXPECT_EQ(m1_digraph(d).doubled, 38);
  }
}

TEST(Report, Csv) {
  const auto csv = to_csv(verify_theorem({6, 3, 1}));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "graph6,n,m,m1,max_oriented_m1_doubled");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto g6 = line.substr(0, line.find(','));
    const Graph g = from_graph6(g6);
    EXPECT_EQ(line, g6 + ",6,3," + std::to_string(square_sum(g)) + "," + std::to_string(testing::brute_max_doubled(g)));
  }
  EXPECT_EQ(rows, 15);
}

TEST(SinkSourceBound, Examples) {
  EXPECT_TRUE(check_sink_source_bound(build_cycle(4)));
  EXPECT_TRUE(check_sink_source_bound(build_cycle(3)));
  EXPECT_TRUE(check_sink_source_bound(build_Q1()));
  EXPECT_TRUE(sink_source_orientations(build_Q1()).empty());
  EXPECT_THROW(check_sink_source_bound(build_path(18)), GraphError);
}

TEST(SinkSourceBound, ExhaustiveSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testing::labeled_connected_graphs(n)) ASSERT_TRUE(check_sink_source_bound(g)) << to_graph6(g);
}

TEST(Transform, Examples) {
  // path 0-1-2-3 with a pendant 4 on 2; shift edge 1-0 over to 2-0
  const Graph g = add_pendant(build_path(4), 2);
  const Graph shifted = add_edge(delete_edge(g, 1, 0), 2, 0);
  EXPECT_EQ(check_transform(g, 1, 2, 0), square_sum(shifted) - square_sum(g));
  EXPECT_EQ(check_transform(g, 1, 2, 0), 4);
  EXPECT_EQ(check_transform(build_path(4), 1, 2, 0), 2);
}

TEST(Transform, Preconditions) {
  const Graph p4 = build_path(4);
  EXPECT_THROW(check_transform(p4, 0, 1, 2), GraphError);  // d(u) = 1
  EXPECT_THROW(check_transform(p4, 1, 0, 2), GraphError);  // d(v) = 1
  EXPECT_THROW(check_transform(p4, 1, 2, 3), GraphError);  // w not a neighbor
  EXPECT_THROW(check_transform(build_cycle(3), 0, 1, 2), GraphError);  // vw is an edge
  EXPECT_THROW(check_transform(p4, 1, 2, 9), GraphError);
}

TEST(Transform, RandomInstances) {
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const auto inst = random_transform_instance(rng);
    const Graph shifted = add_edge(delete_edge(inst.graph, inst.u, inst.w), inst.v, inst.w);
    const std::int64_t want = square_sum(shifted) - square_sum(inst.graph);
    ASSERT_EQ(check_transform(inst.graph, inst.u, inst.v, inst.w), want);
    ASSERT_EQ(want, 2 * (inst.graph.degree(inst.v) - 1));
    ASSERT_GT(want, 0);
  }
}

TEST(Identity, Examples) {
  EXPECT_TRUE(check_identity(orient(build_path(2), std::uint64_t{1})));
  Rng rng(12);
  const Graph g = random_connected_graph(rng, 9, 4);
  ASSERT_EQ(g.size(), 12u);
  EXPECT_TRUE(check_identity(random_orientation(rng, g)));
}

}  // namespace
}  // namespace zagreb
