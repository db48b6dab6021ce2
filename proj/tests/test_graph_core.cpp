#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "trigraph/trigraph.hpp"

using namespace trigraph;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

std::vector<Vertex> random_perm(int n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Graph, RejectsLoopsAndParallelEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), PreconditionError);
  EXPECT_THROW(g.add_edge(2, 2), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
  EXPECT_EQ(g.size(), 1);
}

TEST(Graph, DeleteVerticesRelabelsDensely) {
  const Graph g = cycle_graph(5);
  const Relabeled r = delete_vertices(g, {1});
  EXPECT_EQ(r.graph.order(), 4);
  EXPECT_EQ(r.old_to_new[1], -1);
  EXPECT_EQ(r.old_to_new[2], 1);
  EXPECT_TRUE(is_path_graph(r.graph));
}

TEST(Triangles, NamedExamples) {
  EXPECT_EQ(enumerate_triangles(complete_graph(4)).size(), 4U);
  EXPECT_TRUE(enumerate_triangles(cycle_graph(6)).empty());
  const auto k5k3 = enumerate_triangles(make_named("K5-K3"));
  // The removed triangle sits on {2,3,4}.
  EXPECT_EQ(k5k3, (std::vector<Triangle>{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}));
  const auto c72 = enumerate_triangles(cycle_power(7, 2));
  ASSERT_EQ(c72.size(), 7U);
  for (int i = 0; i < 7; ++i) {
    const Triangle t(i, (i + 1) % 7, (i + 2) % 7);
    EXPECT_NE(std::find(c72.begin(), c72.end(), t), c72.end()) << to_string(t);
  }
}

TEST(Triangles, MatchNaiveCountOnRandomGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(3 + trial % 9, 0.5, rng);
    const auto ours = enumerate_triangles(g);
    const auto naive = oracle::triangles(g);
    ASSERT_EQ(ours.size(), naive.size());
    for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_EQ(ours[i].v, naive[i]);
  }
}

TEST(Isomorphism, NamedExamples) {
  EXPECT_TRUE(is_isomorphic(build_triangle_graph(wheel_graph(4)).derived, cycle_graph(4)));
  EXPECT_TRUE(is_isomorphic(cycle_power(4, 2), complete_graph(4)));
  EXPECT_FALSE(is_isomorphic(supplementary_graph('C'), supplementary_graph('D')));
}

TEST(Isomorphism, CertificateIsAValidBijection) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + trial % 9, 0.4, rng);
    const auto p = random_perm(g.order(), rng);
    const Graph h = permute(g, p);
    const auto cert = is_isomorphic(g, h);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(verify_isomorphism(g, h, *cert.mapping));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 4;
    const Graph a = random_graph(n, 0.5, rng);
    const Graph b = random_graph(n, 0.5, rng);
    EXPECT_EQ(static_cast<bool>(is_isomorphic(a, b)), oracle::isomorphic(a, b));
  }
}

TEST(Isomorphism, RegularGraphsThatRefinementCannotSplit) {
  // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
  Graph prism(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                                      {0, 3}, {1, 4}, {2, 5}}) {
    prism.add_edge(a, b);
  }
  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  EXPECT_FALSE(is_isomorphic(prism, k33));
  EXPECT_TRUE(is_isomorphic(complement(petersen_graph()), build_triangle_graph(complete_graph(5)).derived));
}

TEST(Subgraph, NamedExamples) {
  EXPECT_TRUE(contains_subgraph(complete_graph(5), complete_graph(4)));
  const Graph c62 = cycle_power(6, 2);
  const auto emb = contains_subgraph(c62, wheel_graph(4));
  ASSERT_TRUE(emb);
  EXPECT_TRUE(verify_embedding(c62, wheel_graph(4), *emb, Containment::kSubgraph));
  // The hub must see the whole rim, so its image has degree 4 and its
  // neighbourhood is the 4-cycle it lies on.
  const Vertex hub = (*emb)[0];
  for (int r = 1; r <= 4; ++r) EXPECT_TRUE(c62.adjacent(hub, (*emb)[r]));
  EXPECT_FALSE(contains_subgraph(cycle_power(7, 2), complete_graph(4)));
}

TEST(Subgraph, AgreesWithInjectiveMapOracle) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph host = random_graph(5 + trial % 4, 0.55, rng);
    const Graph pat = random_graph(3 + trial % 3, 0.5, rng);
    for (auto mode : {Containment::kSubgraph, Containment::kInduced}) {
      const auto emb = contains_subgraph(host, pat, mode);
      EXPECT_EQ(emb.has_value(), oracle::contains(host, pat, mode == Containment::kInduced));
      if (emb) {
        EXPECT_TRUE(verify_embedding(host, pat, *emb, mode));
      }
    }
  }
}

TEST(InducedCycles, NamedExamples) {
  EXPECT_FALSE(find_induced_cycle(complete_graph(4), 4));
  const Graph t_c62 = build_triangle_graph(cycle_power(6, 2)).derived;
  const auto c6 = find_induced_cycle(t_c62, 6);
  ASSERT_TRUE(c6);
  EXPECT_TRUE(verify_induced_cycle(t_c62, *c6));
  const Graph t_k5 = build_triangle_graph(complete_graph(5)).derived;
  const auto c5 = find_induced_cycle(t_k5, 5);
  ASSERT_TRUE(c5);
  EXPECT_TRUE(verify_induced_cycle(t_k5, *c5));
  EXPECT_FALSE(find_odd_hole(build_triangle_graph(complete_graph(4)).derived));
}

TEST(InducedCycles, AgreeWithSubsetOracle) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(5 + trial % 5, 0.35, rng);
    for (int len = 4; len <= g.order(); ++len) {
      const auto c = find_induced_cycle(g, len);
      ASSERT_EQ(c.has_value(), oracle::has_induced_cycle(g, len)) << "len " << len;
      if (c) {
        EXPECT_TRUE(verify_induced_cycle(g, *c));
      }
    }
  }
}

TEST(InducedCycles, EnumerationVisitsEachCycleOnce) {
  // C_7^2: T is a 7-cycle, and the only induced 7-cycle is T itself.
  const Graph t = build_triangle_graph(cycle_power(7, 2)).derived;
  EXPECT_EQ(all_induced_cycles(t, 7).size(), 1U);
  // Every triple of K_4 is an induced triangle.
  EXPECT_EQ(all_induced_cycles(complete_graph(4), 3).size(), 4U);
  EXPECT_EQ(all_induced_cycles(cycle_graph(5), 5).size(), 1U);
}

TEST(EdgeList, ParsesAndNamesVertices) {
  const auto k3 = parse_edge_list("0 1\n1 2\n0 2");
  EXPECT_TRUE(is_isomorphic(k3.graph, complete_graph(3)));
  const auto named = parse_edge_list("# comment\nb a\n\na c  # trailing\nlonely\n");
  EXPECT_EQ(named.graph.order(), 4);
  EXPECT_EQ(named.names, (std::vector<std::string>{"b", "a", "c", "lonely"}));
  EXPECT_TRUE(named.graph.adjacent(0, 1));
  EXPECT_EQ(named.graph.degree(3), 0);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("0 1\n1 2\n1 0\n");
    FAIL() << "repeated edge accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_edge_list("0 1 2\n"), PreconditionError);
  EXPECT_THROW(parse_edge_list("x x\n"), PreconditionError);
}

TEST(EdgeList, EmitThenParseIsExact) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = permute(random_graph(1 + trial % 10, 0.3, rng), random_perm(1 + trial % 10, rng));
    EXPECT_EQ(parse_edge_list(format_edge_list(g)).graph, g) << format_edge_list(g);
  }
  EXPECT_EQ(parse_edge_list(format_edge_list(empty_graph(3))).graph, empty_graph(3));
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete_graph(4));
  // The Petersen graph's standard encoding.
  EXPECT_TRUE(is_isomorphic(parse_graph6("IheA@GUAo"), petersen_graph()));
}

TEST(Graph6, ErrorsNameBytePositions) {
  try {
    parse_graph6("C~ ");
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("expected 1 data bytes"), std::string::npos) << e.what();
  }
  try {
    parse_graph6("D\x01{");
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 1"), std::string::npos) << e.what();
  }
  // Order 2 uses one bit; the rest of the data byte must be zero.
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_THROW(parse_graph6("A`"), PreconditionError);
}

TEST(Graph6, RoundTripAndStreamErrors) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(trial % 15, 0.5, rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
  const auto entries = parse_graph6_stream("C~\n\nbad!\nBw\n");
  ASSERT_EQ(entries.size(), 3U);
  EXPECT_TRUE(entries[0].graph);
  EXPECT_FALSE(entries[1].graph);
  EXPECT_EQ(entries[1].line, 3);
  EXPECT_TRUE(entries[2].graph);
  EXPECT_EQ(entries[2].graph->size(), 3);
}

TEST(Dot, LabelsTrianglesByTheirVertices) {
  const std::string dot = tgraph_to_dot(build_triangle_graph(make_named("K5-K3")));
  EXPECT_NE(dot.find("label=\"0,1,2\""), std::string::npos);
  EXPECT_NE(dot.find("t0 -- t1"), std::string::npos);
}
