#include <gtest/gtest.h>

#include <random>

#include "instances.hpp"
#include "trigraph/trigraph.hpp"

using namespace trigraph;

namespace {

int tcycle_length(const Graph& g) {
  const Graph t = build_triangle_graph(g).derived;
  return is_cycle_graph(t) ? t.order() : -1;
}

Graph two_disjoint_triangles() {
  Graph g(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) g.add_edge(a, b);
  return g;
}

DesignatedCycle full_cycle(const Graph& g) { return *whole_cycle(build_triangle_graph(g)); }

}  // namespace

TEST(EdgeSplit, WeakSplitOfK4GivesW4) {
  const Graph k4 = complete_graph(4);
  const TriangleGraph tg = build_triangle_graph(k4);
  const auto dc = find_designated_cycle(tg, 3);
  ASSERT_TRUE(dc);
  const auto options = weak_splits(k4, *dc);
  ASSERT_FALSE(options.empty());
  for (const auto& s : options) {
    const auto r = edge_split(k4, s.edge, s.apex, SplitMode::kWeak, *dc);
    EXPECT_TRUE(is_isomorphic(r.graph, wheel_graph(4)));
    ASSERT_TRUE(r.cycle);
    EXPECT_EQ(r.cycle->triangle_indices.size(), 4U);
  }
}

TEST(EdgeSplit, StrongSplitRejectsSharedEdges) {
  EXPECT_THROW(edge_split(complete_graph(4), Edge(0, 1), 2, SplitMode::kStrong), PreconditionError);
  EXPECT_THROW(edge_split(complete_graph(4), Edge(0, 1), 0, SplitMode::kStrong), PreconditionError);
}

TEST(EdgeSplit, StrongSplitOfSquaredCycleLengthensT) {
  const auto r = edge_split(cycle_power(7, 2), Edge(0, 2), 1, SplitMode::kStrong);
  EXPECT_EQ(r.graph.order(), 8);
  EXPECT_EQ(r.graph.size(), 16);
  EXPECT_EQ(tcycle_length(r.graph), 8);
  // The new vertex is appended and sits between 0 and 2, facing 1.
  EXPECT_EQ(r.graph.neighbors(7).members(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(r.graph.adjacent(0, 2));
}

TEST(VertexStick, WeakStickOfAntipodalVertices) {
  const Graph g = cycle_power(10, 2);
  const auto r = vertex_stick(g, 0, 5, StickMode::kWeak, full_cycle(g));
  EXPECT_EQ(r.graph.order(), 9);
  EXPECT_EQ(r.graph.size(), g.size());
  EXPECT_EQ(build_triangle_graph(r.graph).triangle_count(), 10 + 6);
  ASSERT_TRUE(r.cycle);
  EXPECT_EQ(r.cycle->triangle_indices.size(), 10U);
  EXPECT_THROW(vertex_stick(g, 0, 5, StickMode::kStrong), PreconditionError);
}

TEST(VertexStick, StrongStickOfDisjointTrianglesKeepsT) {
  const Graph g = two_disjoint_triangles();
  const auto r = vertex_stick(g, 0, 3, StickMode::kStrong);
  EXPECT_EQ(r.graph.order(), 5);
  EXPECT_TRUE(is_isomorphic(build_triangle_graph(r.graph).derived, build_triangle_graph(g).derived));
  EXPECT_THROW(vertex_stick(g, 0, 1, StickMode::kWeak), PreconditionError);
}

TEST(InverseSplit, WheelRimVertex) {
  const Graph w4 = wheel_graph(4);
  for (Vertex rim = 1; rim <= 4; ++rim) {
    EXPECT_TRUE(is_isomorphic(inverse_edge_split(w4, rim, UnsplitMode::kWeak).graph, complete_graph(4)));
    // Opposite rim vertices share the hub and both rim neighbours.
    EXPECT_THROW(inverse_edge_split(w4, rim, UnsplitMode::kStrict), PreconditionError);
    EXPECT_THROW(inverse_edge_split(w4, rim, UnsplitMode::kStrong), PreconditionError);
  }
}

TEST(InverseSplit, NoDegreeThreeVertexInSquaredCycle) {
  for (Vertex v = 0; v < 7; ++v) {
    EXPECT_THROW(inverse_edge_split(cycle_power(7, 2), v, UnsplitMode::kWeak), PreconditionError);
  }
}

TEST(InverseSplit, SupplementaryBCollapsesToK5InAnyOrder) {
  const Graph sb = supplementary_graph('B');
  std::vector<Vertex> deg3;
  for (Vertex v = 0; v < sb.order(); ++v)
    if (sb.degree(v) == 3) deg3.push_back(v);
  ASSERT_EQ(deg3.size(), 3U);
  std::sort(deg3.begin(), deg3.end());
  do {
    Graph cur = sb;
    std::vector<Vertex> label(sb.order());
    std::iota(label.begin(), label.end(), 0);
    for (Vertex original : deg3) {
      const auto r = inverse_edge_split(cur, label[original], UnsplitMode::kWeak);
      for (Vertex& l : label) l = l < 0 ? -1 : r.old_to_new[l];
      cur = r.graph;
    }
    EXPECT_TRUE(is_isomorphic(cur, complete_graph(5)));
  } while (std::next_permutation(deg3.begin(), deg3.end()));
}

TEST(InverseSplit, SupplementaryAReachesK6MinusP4) {
  Graph cur = supplementary_graph('A');
  for (int i = 0; i < 2; ++i) {
    const auto cands = unsplit_candidates(cur, UnsplitMode::kWeak);
    ASSERT_FALSE(cands.empty());
    cur = inverse_edge_split(cur, cands.front(), UnsplitMode::kWeak).graph;
  }
  EXPECT_TRUE(is_isomorphic(cur, complete_minus(6, RemovedPattern::kP4)));
}

TEST(InverseStick, UndoesAStrongStick) {
  const Graph g = two_disjoint_triangles();
  const auto stuck = vertex_stick(g, 1, 4, StickMode::kStrong);
  const Vertex w = stuck.graph.order() - 1;
  EXPECT_TRUE(is_isomorphic(inverse_vertex_stick(stuck.graph, w, StickMode::kStrong).graph, g));
  EXPECT_THROW(inverse_vertex_stick(wheel_graph(4), 0, StickMode::kStrong), PreconditionError);
}

TEST(InverseStick, WeakModeSeesThroughAdditionalTriangles) {
  const Graph g = cycle_power(10, 2);
  const auto stuck = vertex_stick(g, 0, 5, StickMode::kWeak, full_cycle(g));
  const Vertex w = stuck.graph.order() - 1;
  EXPECT_THROW(inverse_vertex_stick(stuck.graph, w, StickMode::kStrong), PreconditionError);
  const auto back = inverse_vertex_stick(stuck.graph, w, StickMode::kWeak, std::nullopt, stuck.cycle);
  EXPECT_TRUE(is_isomorphic(back.graph, g));
}

TEST(Reduce, IrreducibleBasesHaveEmptyLogs) {
  for (const auto& b : instances::bases()) {
    const Reduction r = reduce_to_irreducible(b.graph);
    EXPECT_TRUE(r.log.steps.empty()) << b.name;
    EXPECT_EQ(r.base, b.graph);
  }
  EXPECT_THROW(reduce_to_irreducible(complete_graph(4)), PreconditionError);
}

TEST(Reduce, RecoversSupplementaryAAfterSplitsAndAStick) {
  std::mt19937 rng(2);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 5; ++trial) {
    // Strong sticks need two vertices at distance >= 4, so keep splitting
    // (at least twice) until such a pair appears.
    Graph g = supplementary_graph('A');
    int splits = 0;
    for (; splits < 12 && (splits < 2 || stick_pairs(g, StickMode::kStrong).empty()); ++splits) {
      const auto s = strong_splits(g);
      g = apply_step(g, s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)]).graph;
    }
    const auto pairs = stick_pairs(g, StickMode::kStrong);
    if (pairs.empty()) continue;
    g = apply_step(g, pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)]).graph;
    const Reduction r = reduce_to_irreducible(g);
    EXPECT_TRUE(is_isomorphic(r.base, supplementary_graph('A')));
    EXPECT_EQ(count_splits(r.log.steps), splits);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Reduce, RandomOrdersAgreeExceptBetweenSupplementaryCAndD) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = instances::random_instance(rng, 4);
    const Reduction greedy = reduce_to_irreducible(inst.graph);
    EXPECT_TRUE(instances::same_base_class(describe(characterize_cycle(greedy.base)), inst.base.name))
        << inst.base.name;
    for (int k = 0; k < 5; ++k) {
      const Reduction r = reduce_randomly(inst.graph, rng);
      EXPECT_EQ(count_splits(r.log.steps), count_splits(greedy.log.steps));
      if (inst.base.name == "S_C" || inst.base.name == "S_D") {
        EXPECT_TRUE(is_isomorphic(r.base, supplementary_graph('C')) ||
                    is_isomorphic(r.base, supplementary_graph('D')));
      } else {
        EXPECT_TRUE(is_isomorphic(r.base, greedy.base)) << inst.base.name;
      }
    }
  }
}

TEST(Reduce, SupplementaryCAndDAreOneSplitApart) {
  for (auto [from, to] : {std::pair{'C', 'D'}, std::pair{'D', 'C'}}) {
    const Graph s = supplementary_graph(from);
    bool crossed = false;
    for (const auto& sp : strong_splits(s)) {
      const Graph g = apply_step(s, sp).graph;
      for (Vertex w : unsplit_candidates(g, UnsplitMode::kStrict)) {
        const Graph back = inverse_edge_split(g, w, UnsplitMode::kStrict).graph;
        EXPECT_TRUE(is_isomorphic(back, s) || is_isomorphic(back, supplementary_graph(to)));
        crossed = crossed || is_isomorphic(back, supplementary_graph(to));
      }
    }
    EXPECT_TRUE(crossed) << from;
  }
}

TEST(Properties, StrongSplitAddsOneToTheCycleAndStickKeepsT) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = instances::random_instance(rng, 10);
    Graph cur = inst.base.graph;
    for (const auto& step : inst.steps) {
      const Graph next = apply_step(cur, step).graph;
      if (std::holds_alternative<EdgeSplitStep>(step)) {
        EXPECT_EQ(tcycle_length(next), tcycle_length(cur) + 1);
        EXPECT_EQ(next.size(), cur.size() + 2);
        EXPECT_EQ(next.order(), cur.order() + 1);
      } else {
        EXPECT_TRUE(is_isomorphic(build_triangle_graph(next).derived, build_triangle_graph(cur).derived));
        EXPECT_EQ(next.size(), cur.size());
        EXPECT_EQ(next.order(), cur.order() - 1);
      }
      cur = next;
    }
  }
}

TEST(Properties, ForwardThenInverseIsIdentityUpToIsomorphism) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = instances::random_instance(rng, 3);
    for (const auto& s : strong_splits(inst.graph)) {
      const auto fwd = edge_split(inst.graph, s.edge, s.apex, SplitMode::kStrong);
      const auto back = inverse_edge_split(fwd.graph, fwd.graph.order() - 1, UnsplitMode::kStrict);
      EXPECT_TRUE(is_isomorphic(back.graph, inst.graph));
    }
    for (const auto& p : stick_pairs(inst.graph, StickMode::kStrong)) {
      const auto fwd = vertex_stick(inst.graph, p.u, p.v, StickMode::kStrong);
      const auto back = inverse_vertex_stick(fwd.graph, fwd.graph.order() - 1, StickMode::kStrong);
      EXPECT_TRUE(is_isomorphic(back.graph, inst.graph));
    }
  }
}

TEST(Properties, WeakOperationsPreserveMinimalForbiddenStatus) {
  // W_5 is minimal forbidden for C_5: 10 edges and an induced C_5 in T.
  const Graph w5 = wheel_graph(5);
  const TriangleGraph tg = build_triangle_graph(w5);
  const auto dc = find_designated_cycle(tg, 5);
  ASSERT_TRUE(dc);
  for (const auto& s : weak_splits(w5, *dc)) {
    const auto r = edge_split(w5, s.edge, s.apex, SplitMode::kWeak, *dc);
    EXPECT_EQ(r.graph.size(), 12);
    EXPECT_TRUE(find_induced_cycle(build_triangle_graph(r.graph).derived, 6));
  }
  for (const auto& p : stick_pairs(cycle_power(10, 2), StickMode::kWeak)) {
    const auto r = vertex_stick(cycle_power(10, 2), p.u, p.v, StickMode::kWeak);
    EXPECT_EQ(r.graph.size(), 20);
    EXPECT_TRUE(find_induced_cycle(build_triangle_graph(r.graph).derived, 10));
  }
}

TEST(Reorder, EmptyLogStaysEmpty) {
  const TransformLog log{wheel_graph(4), std::nullopt, {}, wheel_graph(4)};
  EXPECT_TRUE(reorder_log(log).steps.empty());
}

TEST(Reorder, SplitsComeFirstAndTheResultMatches) {
  std::mt19937 rng(77);
  int with_stick = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = instances::random_instance(rng, 10);
    if (inst.steps.empty()) continue;
    const TransformLog log = replay(inst.base.graph, std::nullopt, inst.steps);
    const TransformLog re = reorder_log(log);
    EXPECT_TRUE(is_isomorphic(re.final, log.final));
    EXPECT_EQ(count_splits(re.steps), count_splits(log.steps));
    bool seen_stick = false;
    for (const auto& s : re.steps) {
      if (std::holds_alternative<VertexStickStep>(s)) {
        seen_stick = true;
      } else {
        EXPECT_FALSE(seen_stick) << "split after a stick";
      }
    }
    with_stick += inst.sticks > 0 && inst.splits > 0;
  }
  EXPECT_GT(with_stick, 0);
}

TEST(Log, FormatParseRoundTrip) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = instances::random_instance(rng, 6);
    const TransformLog log = replay(inst.base.graph, std::nullopt, inst.steps);
    const std::string text = format_log(log);
    const ParsedSteps parsed = parse_log(text);
    EXPECT_EQ(format_log(TransformLog{log.initial, parsed.cycle, parsed.steps, log.final}), text);
    EXPECT_EQ(replay(inst.base.graph, parsed.cycle, parsed.steps).final, log.final);
  }
}

TEST(Log, ParsesEveryStepKindAndRejectsJunk) {
  const auto p = parse_log(
      "# comment\n"
      "CYCLE 0,1,2 0,1,3 0,2,3\n"
      "SPLIT weak 1 2 0\n"
      "STICK strong 0 5\n"
      "UNSPLIT strict 4\n"
      "UNSTICK weak 3 1,2\n");
  ASSERT_TRUE(p.cycle);
  EXPECT_EQ(p.cycle->size(), 3U);
  ASSERT_EQ(p.steps.size(), 4U);
  EXPECT_EQ(std::get<EdgeSplitStep>(p.steps[0]).apex, 0);
  EXPECT_EQ(std::get<InverseVertexStickStep>(p.steps[3]).side_u, (std::vector<Vertex>{1, 2}));
  EXPECT_THROW(parse_log("SPLIT sideways 1 2 0\n"), PreconditionError);
  EXPECT_THROW(parse_log("STICK strong 1\n"), PreconditionError);
  EXPECT_THROW(parse_log("HOP 1 2\n"), PreconditionError);
  EXPECT_THROW(parse_log("SPLIT strong 1 x 0\n"), PreconditionError);
}

TEST(Log, ReplayReportsTheFailingStep) {
  try {
    replay(complete_graph(4), std::nullopt, parse_log("SPLIT strong 0 1 2\n").steps);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos) << e.what();
  }
}
