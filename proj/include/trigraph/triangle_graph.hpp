#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigraph/cycles.hpp"
#include "trigraph/graph.hpp"

namespace trigraph {

/// T(G): one vertex per triangle of `base` (in enumerate_triangles order),
/// adjacent when the triangles share an edge.
struct TriangleGraph {
  Graph base;
  std::vector<Triangle> triangles;
  Graph derived;
  /// Every base edge mapped to the sorted indices of triangles containing it.
  std::map<Edge, std::vector<int>> edge_incidence;

  int triangle_count() const { return static_cast<int>(triangles.size()); }

  /// Index of t, or -1.
  int index_of(const Triangle& t) const {
    auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
    if (it == triangles.end() || *it != t) return -1;
    return static_cast<int>(it - triangles.begin());
  }

  const std::vector<int>& incidence(const Edge& e) const {
    static const std::vector<int> kNone;
    auto it = edge_incidence.find(e);
    return it == edge_incidence.end() ? kNone : it->second;
  }
};

inline TriangleGraph build_triangle_graph(const Graph& g) {
  TriangleGraph tg;
  tg.base = g;
  tg.triangles = enumerate_triangles(g);
  for (const Edge& e : g.edges()) tg.edge_incidence[e];
  for (int i = 0; i < tg.triangle_count(); ++i) {
    for (const Edge& e : tg.triangles[i].edges()) tg.edge_incidence[e].push_back(i);
  }
  tg.derived = Graph(tg.triangle_count());
  for (const auto& [edge, tris] : tg.edge_incidence) {
    for (std::size_t a = 0; a < tris.size(); ++a) {
      for (std::size_t b = a + 1; b < tris.size(); ++b) {
        // Two distinct triangles share at most one edge, so no pair repeats.
        tg.derived.add_edge(tris[a], tris[b]);
      }
    }
  }
  return tg;
}

/// Ordered triangle indices t_1..t_n forming an induced cycle in T(G).
struct DesignatedCycle {
  std::vector<int> triangle_indices;

  int length() const { return static_cast<int>(triangle_indices.size()); }
  bool contains(int t) const {
    return std::find(triangle_indices.begin(), triangle_indices.end(), t) !=
           triangle_indices.end();
  }
  friend bool operator==(const DesignatedCycle&, const DesignatedCycle&) = default;
};

/// Throws PreconditionError unless dc is an induced cycle of length >= 3 in
/// tg.derived.
inline void validate(const TriangleGraph& tg, const DesignatedCycle& dc) {
  const auto& idx = dc.triangle_indices;
  if (idx.size() < 3) throw PreconditionError("designated cycle needs at least 3 triangles");
  for (int t : idx) {
    if (t < 0 || t >= tg.triangle_count()) {
      throw PreconditionError("designated cycle names unknown triangle " + std::to_string(t));
    }
  }
  if (!verify_induced_cycle(tg.derived, idx)) {
    throw PreconditionError("designated triangles do not form an induced cycle in T(G)");
  }
}

inline std::vector<Triangle> cycle_triangles(const TriangleGraph& tg, const DesignatedCycle& dc) {
  std::vector<Triangle> out;
  for (int t : dc.triangle_indices) out.push_back(tg.triangles.at(t));
  return out;
}

/// Looks up each triangle in tg; throws if one is missing from the base graph.
inline DesignatedCycle designated_cycle_from(const TriangleGraph& tg,
                                             const std::vector<Triangle>& tris) {
  DesignatedCycle dc;
  for (const Triangle& t : tris) {
    const int i = tg.index_of(t);
    if (i < 0) throw PreconditionError("triangle " + to_string(t) + " is not in the graph");
    dc.triangle_indices.push_back(i);
  }
  return dc;
}

/// Some induced cycle of exactly `length` triangles, if one exists.
inline std::optional<DesignatedCycle> find_designated_cycle(const TriangleGraph& tg, int length) {
  if (length < 3) throw PreconditionError("designated cycle length must be at least 3");
  std::optional<DesignatedCycle> out;
  for_each_induced_cycle(tg.derived, length, [&](const std::vector<Vertex>& c) {
    out = DesignatedCycle{c};
    return false;
  });
  return out;
}

/// The whole of T(G) as a designated cycle, when T(G) is a cycle.
inline std::optional<DesignatedCycle> whole_cycle(const TriangleGraph& tg) {
  if (!is_cycle_graph(tg.derived)) return std::nullopt;
  return DesignatedCycle{cycle_traversal(tg.derived)};
}

struct TriangleConnectivity {
  bool connected = false;
  /// When disconnected: A holds the edges of the triangles in the component
  /// containing triangle 0, B every other edge.
  std::vector<Edge> part_a;
  std::vector<Edge> part_b;
};

inline TriangleConnectivity is_triangle_connected(const Graph& g) {
  const TriangleGraph tg = build_triangle_graph(g);
  if (tg.triangle_count() == 0) {
    throw PreconditionError("graph has no triangle; triangle-connectivity is undefined");
  }
  const auto comps = components(tg.derived);
  TriangleConnectivity out;
  out.connected = comps.size() == 1;
  if (out.connected) return out;
  std::map<Edge, bool> mark;
  for (int t : comps.front()) {
    for (const Edge& e : tg.triangles[t].edges()) mark[e] = true;
  }
  for (const Edge& e : g.edges()) (mark.count(e) ? out.part_a : out.part_b).push_back(e);
  return out;
}

/// Partition of the base edges by how many designated triangles contain
/// them: one (private), two (doubly covered), three or more, or none.
struct EdgeCoverage {
  int order = 0;
  std::vector<Edge> private_edges;
  std::vector<Edge> doubly_covered;
  std::vector<Edge> over_covered;
  std::vector<Edge> uncovered;
  std::map<Edge, int> count;

  bool is_private(const Edge& e) const {
    auto it = count.find(e);
    return it != count.end() && it->second == 1;
  }
};

inline EdgeCoverage classify_edge_coverage(const TriangleGraph& tg, const DesignatedCycle& dc) {
  validate(tg, dc);
  EdgeCoverage cov;
  cov.order = tg.base.order();
  for (const Edge& e : tg.base.edges()) cov.count[e] = 0;
  for (int t : dc.triangle_indices) {
    for (const Edge& e : tg.triangles[t].edges()) ++cov.count[e];
  }
  for (const auto& [e, c] : cov.count) {
    if (c == 0) cov.uncovered.push_back(e);
    else if (c == 1) cov.private_edges.push_back(e);
    else if (c == 2) cov.doubly_covered.push_back(e);
    else cov.over_covered.push_back(e);
  }
  return cov;
}

/// N*(v): the cycle-triangles through v with v removed. `graph` lives on the
/// base labels; `vertices` says which labels belong to it.
struct NeighborhoodGraph {
  VertexSet vertices;
  Graph graph;

  bool empty() const { return vertices.empty(); }
  std::vector<std::vector<Vertex>> parts() const { return trigraph::components(graph, vertices); }
  bool connected() const { return parts().size() <= 1; }
};

inline NeighborhoodGraph cycle_triangle_neighborhood(const TriangleGraph& tg,
                                                     const DesignatedCycle& dc, Vertex v) {
  if (v < 0 || v >= tg.base.order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
  }
  NeighborhoodGraph out{VertexSet(tg.base.order()), Graph(tg.base.order())};
  for (int t : dc.triangle_indices) {
    const Triangle& tri = tg.triangles.at(t);
    if (!tri.contains(v)) continue;
    const Edge far = tri.opposite_edge(v);
    out.vertices.set(far.u);
    out.vertices.set(far.v);
    if (!out.graph.adjacent(far.u, far.v)) out.graph.add_edge(far.u, far.v);
  }
  return out;
}

/// The open neighbourhood N(v) with its induced edges, in the same shape.
inline NeighborhoodGraph open_neighborhood(const Graph& g, Vertex v) {
  NeighborhoodGraph out{g.neighbors(v), Graph(g.order())};
  g.neighbors(v).for_each([&](Vertex a) {
    (g.neighbors(a) & g.neighbors(v)).for_each([&](Vertex b) {
      if (a < b) out.graph.add_edge(a, b);
    });
  });
  return out;
}

/// Shape of an induced neighbourhood.
enum class NeighborhoodShape { kPath, kCycle, kOther };

inline NeighborhoodShape neighborhood_shape(const Graph& g, Vertex v) {
  const auto members = g.neighbors(v).members();
  const Graph h = induced_subgraph(g, members);
  if (is_path_graph(h)) return NeighborhoodShape::kPath;
  if (is_cycle_graph(h)) return NeighborhoodShape::kCycle;
  return NeighborhoodShape::kOther;
}

/// A cycle with pendant vertices hanging off its vertices.
struct HairyCycle {
  /// Core vertices in cyclic order.
  std::vector<Vertex> core;
  /// Core vertex -> its pendant neighbours (only core vertices with pendants).
  std::map<Vertex, std::vector<Vertex>> pendants;
};

/// Splits the doubly-covered subgraph G_F = (V, F) into its core cycle and
/// pendant edges. Absent when G_F is not a hairy cycle; this doubles as the
/// predicate.
inline std::optional<HairyCycle> hairy_cycle_structure(const EdgeCoverage& cov) {
  Graph gf(cov.order);
  for (const Edge& e : cov.doubly_covered) gf.add_edge(e.u, e.v);
  std::vector<Vertex> leaves;
  std::vector<Vertex> core_vertices;
  for (Vertex v = 0; v < gf.order(); ++v) {
    const int d = gf.degree(v);
    if (d == 0) return std::nullopt;
    (d == 1 ? leaves : core_vertices).push_back(v);
  }
  const Graph core = induced_subgraph(gf, core_vertices);
  if (!is_cycle_graph(core)) return std::nullopt;
  HairyCycle out;
  for (Vertex local : cycle_traversal(core)) out.core.push_back(core_vertices[local]);
  for (Vertex leaf : leaves) {
    const Vertex anchor = gf.neighbors(leaf).first();
    if (gf.degree(anchor) < 3) return std::nullopt;
    out.pendants[anchor].push_back(leaf);
  }
  return out;
}

}  // namespace trigraph
