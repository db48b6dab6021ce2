#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "trigraph/graph.hpp"
#include "trigraph/isomorphism.hpp"
#include "trigraph/triangle_graph.hpp"

namespace trigraph {

/// Preconditions for edge splitting.
enum class SplitMode {
  /// e lies in exactly one triangle; the two other triangle edges lie in
  /// more than one.
  kStrong,
  /// e is private with respect to the designated cycle.
  kWeak,
  /// kWeak, and no additional triangle contains e either.
  kWeakStrong,
};

/// Preconditions for undoing an edge split at a degree-3 vertex w with
/// neighbours x, y, z where x, y are non-adjacent and z sees both.
enum class UnsplitMode {
  /// Only the degree and non-adjacency conditions.
  kWeak,
  /// Additionally, w and z are the only common neighbours of x and y.
  kStrong,
  /// kStrong, and xz, yz each lie in a triangle other than xwz, ywz, so the
  /// result admits the matching strong split.
  kStrict,
};

/// Distance requirement for sticking: >= 4 (strong) or >= 3 (weak). For
/// the inverse: N(w) disconnected (strong) or N*(w) disconnected (weak).
enum class StickMode { kStrong, kWeak };

struct EdgeSplitStep {
  Edge edge;
  Vertex apex = 0;
  SplitMode mode = SplitMode::kStrong;
};

struct VertexStickStep {
  Vertex u = 0;
  Vertex v = 0;
  StickMode mode = StickMode::kStrong;
};

struct InverseEdgeSplitStep {
  Vertex w = 0;
  UnsplitMode mode = UnsplitMode::kStrict;
};

struct InverseVertexStickStep {
  Vertex w = 0;
  StickMode mode = StickMode::kStrong;
  /// Neighbours of w (pre-state labels) that go to the first new vertex.
  std::vector<Vertex> side_u;
};

/// One transformation, parameterised by labels of the graph it applies to.
/// New vertices are appended; deletions relabel the survivors densely.
using TransformStep =
    std::variant<EdgeSplitStep, VertexStickStep, InverseEdgeSplitStep, InverseVertexStickStep>;

struct TransformResult {
  Graph graph;
  TransformStep step;
  /// Old label -> new label; -1 for vertices that no longer exist.
  std::vector<Vertex> old_to_new;
  /// The designated cycle carried through the step, when one was supplied.
  std::optional<DesignatedCycle> cycle;
};

struct TransformLog {
  Graph initial;
  /// Designated cycle of `initial`, as vertex triples; needed by weak steps.
  std::optional<std::vector<Triangle>> cycle;
  std::vector<TransformStep> steps;
  Graph final;
};

namespace detail {

inline std::vector<Triangle> relabel(const std::vector<Triangle>& tris,
                                     const std::vector<Vertex>& old_to_new) {
  std::vector<Triangle> out;
  for (const Triangle& t : tris) {
    out.emplace_back(old_to_new.at(t.v[0]), old_to_new.at(t.v[1]), old_to_new.at(t.v[2]));
  }
  return out;
}

inline std::optional<DesignatedCycle> carry_cycle(const Graph& g,
                                                  const std::optional<std::vector<Triangle>>& tris) {
  if (!tris) return std::nullopt;
  const TriangleGraph tg = build_triangle_graph(g);
  DesignatedCycle dc = designated_cycle_from(tg, *tris);
  validate(tg, dc);
  return dc;
}

inline std::vector<Vertex> identity_map(int n) {
  std::vector<Vertex> m(n);
  for (Vertex v = 0; v < n; ++v) m[v] = v;
  return m;
}

inline VertexSet common_neighbors(const Graph& g, Vertex a, Vertex b) {
  return g.neighbors(a) & g.neighbors(b);
}

inline void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
  }
}

// A designated cycle of three triangles around one edge cannot carry weak
// operations.
inline void require_weak_capable(const TriangleGraph& tg, const DesignatedCycle& dc) {
  const EdgeCoverage cov = classify_edge_coverage(tg, dc);
  if (!cov.over_covered.empty()) {
    throw PreconditionError("designated cycle consists of triangles around the common edge " +
                            to_string(cov.over_covered.front()) +
                            "; weak operations do not apply");
  }
}

}  // namespace detail

// --- Edge splitting ---------------------------------------------------------

inline TransformResult edge_split(const Graph& g, Edge e, Vertex apex, SplitMode mode,
                                  const std::optional<DesignatedCycle>& dc = std::nullopt) {
  detail::require_vertex(g, e.u);
  detail::require_vertex(g, e.v);
  detail::require_vertex(g, apex);
  if (!g.adjacent(e.u, e.v)) throw PreconditionError("edge " + to_string(e) + " is not in the graph");
  if (!g.adjacent(apex, e.u) || !g.adjacent(apex, e.v)) {
    throw PreconditionError("edge " + to_string(e) + " and apex " + std::to_string(apex) +
                            " do not form a triangle");
  }
  const TriangleGraph tg = build_triangle_graph(g);
  const Triangle split_tri(e.u, e.v, apex);
  const int split_index = tg.index_of(split_tri);

  if (mode == SplitMode::kStrong) {
    if (tg.incidence(e).size() != 1) {
      throw PreconditionError("edge " + to_string(e) + " lies in " +
                              std::to_string(tg.incidence(e).size()) +
                              " triangles, not exactly one");
    }
    for (Vertex end : {e.u, e.v}) {
      const Edge side(end, apex);
      if (tg.incidence(side).size() < 2) {
        throw PreconditionError("side edge " + to_string(side) +
                                " lies in only one triangle; it must lie in more than one");
      }
    }
  } else {
    if (!dc) throw PreconditionError("weak edge splitting needs a designated cycle");
    detail::require_weak_capable(tg, *dc);
    const EdgeCoverage cov = classify_edge_coverage(tg, *dc);
    if (!cov.is_private(e)) {
      throw PreconditionError("edge " + to_string(e) + " is not private to the designated cycle");
    }
    if (!dc->contains(split_index)) {
      throw PreconditionError("triangle " + to_string(split_tri) +
                              " is not the cycle-triangle containing " + to_string(e));
    }
    if (mode == SplitMode::kWeakStrong && tg.incidence(e).size() != 1) {
      throw PreconditionError("edge " + to_string(e) +
                              " also lies in an additional triangle; strong splitting needs none");
    }
  }

  Graph out(g.order() + 1);
  for (const Edge& f : g.edges()) {
    if (f != e) out.add_edge(f.u, f.v);
  }
  const Vertex w = g.order();
  out.add_edge(e.u, w);
  out.add_edge(w, e.v);
  out.add_edge(w, apex);

  TransformResult result{std::move(out), EdgeSplitStep{e, apex, mode},
                         detail::identity_map(g.order()), std::nullopt};
  if (dc) {
    auto tris = cycle_triangles(tg, *dc);
    auto pos = std::find(tris.begin(), tris.end(), split_tri);
    for (const Triangle& t : tris) {
      if (t != split_tri && t.contains(e)) {
        throw PreconditionError("splitting " + to_string(e) + " would destroy cycle-triangle " +
                                to_string(t));
      }
    }
    if (pos != tris.end()) {
      const Triangle near_u(e.u, w, apex);
      const Triangle near_v(w, e.v, apex);
      const std::size_t i = static_cast<std::size_t>(pos - tris.begin());
      const Triangle& prev = tris[(i + tris.size() - 1) % tris.size()];
      const bool u_first = prev.contains(Edge(e.u, apex));
      *pos = u_first ? near_u : near_v;
      tris.insert(pos + 1, u_first ? near_v : near_u);
    }
    result.cycle = detail::carry_cycle(result.graph, tris);
  }
  return result;
}

// --- Vertex sticking --------------------------------------------------------

inline TransformResult vertex_stick(const Graph& g, Vertex u, Vertex v, StickMode mode,
                                    const std::optional<DesignatedCycle>& dc = std::nullopt) {
  detail::require_vertex(g, u);
  detail::require_vertex(g, v);
  if (u == v) throw PreconditionError("cannot stick a vertex to itself");
  const int d = distance(g, u, v);
  const int need = mode == StickMode::kStrong ? 4 : 3;
  if (d < need) {
    throw PreconditionError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " are at distance " + std::to_string(d) + " < " +
                            std::to_string(need));
  }
  auto [rest, map] = delete_vertices(g, {u, v});
  Graph out(rest.order() + 1);
  for (const Edge& f : rest.edges()) out.add_edge(f.u, f.v);
  const Vertex w = rest.order();
  (g.neighbors(u) | g.neighbors(v)).for_each([&](Vertex x) { out.add_edge(map[x], w); });
  map[u] = w;
  map[v] = w;

  TransformResult result{std::move(out), VertexStickStep{std::min(u, v), std::max(u, v), mode},
                         map, std::nullopt};
  if (dc) {
    const TriangleGraph tg = build_triangle_graph(g);
    result.cycle =
        detail::carry_cycle(result.graph, detail::relabel(cycle_triangles(tg, *dc), result.old_to_new));
  }
  return result;
}

// --- Inverse edge splitting -------------------------------------------------

/// The (x, y, z) roles around a degree-3 vertex, or the failing clause.
struct UnsplitShape {
  Vertex x = -1;
  Vertex y = -1;
  Vertex z = -1;
};

inline std::variant<UnsplitShape, std::string> unsplit_shape(const Graph& g, Vertex w,
                                                             UnsplitMode mode) {
  detail::require_vertex(g, w);
  if (g.degree(w) != 3) {
    return "vertex " + std::to_string(w) + " has degree " + std::to_string(g.degree(w)) +
           ", not 3";
  }
  const auto nb = g.neighbors(w).members();
  const std::array<std::array<int, 3>, 3> roles{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  std::string failure = "no two neighbours of " + std::to_string(w) +
                        " are non-adjacent with the third adjacent to both";
  for (const auto& r : roles) {
    const Vertex x = nb[r[0]];
    const Vertex y = nb[r[1]];
    const Vertex z = nb[r[2]];
    if (g.adjacent(x, y) || !g.adjacent(z, x) || !g.adjacent(z, y)) continue;
    if (mode != UnsplitMode::kWeak) {
      VertexSet common = detail::common_neighbors(g, x, y);
      common.reset(w);
      common.reset(z);
      if (common.any()) {
        failure = "neighbours " + std::to_string(x) + " and " + std::to_string(y) + " have " +
                  std::to_string(common.count() + 2) +
                  " common neighbours; only the eliminated vertex and the apex are allowed";
        continue;
      }
    }
    if (mode == UnsplitMode::kStrict) {
      bool ok = true;
      for (Vertex end : {x, y}) {
        VertexSet others = detail::common_neighbors(g, end, z);
        others.reset(w);
        if (others.empty()) {
          failure = "edge " + to_string(Edge(end, z)) +
                    " lies in no triangle besides the one through " + std::to_string(w);
          ok = false;
        }
      }
      if (!ok) continue;
    }
    return UnsplitShape{x, y, z};
  }
  return failure;
}

inline TransformResult inverse_edge_split(const Graph& g, Vertex w, UnsplitMode mode,
                                          const std::optional<DesignatedCycle>& dc = std::nullopt) {
  auto shape_or = unsplit_shape(g, w, mode);
  if (auto* why = std::get_if<std::string>(&shape_or)) throw PreconditionError(*why);
  const auto shape = std::get<UnsplitShape>(shape_or);

  auto [rest, map] = delete_vertices(g, {w});
  rest.add_edge(map[shape.x], map[shape.y]);
  TransformResult result{std::move(rest), InverseEdgeSplitStep{w, mode}, map, std::nullopt};
  if (dc) {
    const TriangleGraph tg = build_triangle_graph(g);
    auto tris = cycle_triangles(tg, *dc);
    const Triangle a(shape.x, w, shape.z);
    const Triangle b(shape.y, w, shape.z);
    auto ia = std::find(tris.begin(), tris.end(), a);
    auto ib = std::find(tris.begin(), tris.end(), b);
    if (ia == tris.end() || ib == tris.end()) {
      throw PreconditionError("triangles through " + std::to_string(w) +
                              " are not both cycle-triangles");
    }
    *ia = Triangle(shape.x, shape.y, shape.z);
    tris.erase(ib);
    for (const Triangle& t : tris) {
      if (t.contains(w) && t != Triangle(shape.x, shape.y, shape.z)) {
        throw PreconditionError("vertex " + std::to_string(w) + " lies in a third cycle-triangle");
      }
    }
    std::vector<Triangle> mapped;
    for (const Triangle& t : tris) {
      if (t == Triangle(shape.x, shape.y, shape.z)) {
        mapped.emplace_back(map[shape.x], map[shape.y], map[shape.z]);
      } else {
        mapped.emplace_back(map[t.v[0]], map[t.v[1]], map[t.v[2]]);
      }
    }
    result.cycle = detail::carry_cycle(result.graph, mapped);
  }
  return result;
}

// --- Inverse vertex sticking ------------------------------------------------

/// Components of the neighbourhood that inverse sticking at w may separate:
/// N(w) in strong mode, N*(w) in weak mode.
inline std::vector<std::vector<Vertex>> unstick_components(
    const Graph& g, Vertex w, StickMode mode, const std::optional<DesignatedCycle>& dc) {
  detail::require_vertex(g, w);
  if (mode == StickMode::kStrong) return open_neighborhood(g, w).parts();
  if (!dc) throw PreconditionError("weak inverse vertex sticking needs a designated cycle");
  const TriangleGraph tg = build_triangle_graph(g);
  validate(tg, *dc);
  const NeighborhoodGraph star = cycle_triangle_neighborhood(tg, *dc, w);
  if (!(star.vertices == g.neighbors(w))) {
    throw PreconditionError("some edge at " + std::to_string(w) + " lies in no cycle-triangle");
  }
  return star.parts();
}

inline TransformResult inverse_vertex_stick(const Graph& g, Vertex w, StickMode mode,
                                            std::optional<std::vector<Vertex>> side_u = std::nullopt,
                                            const std::optional<DesignatedCycle>& dc = std::nullopt) {
  const auto parts = unstick_components(g, w, mode, dc);
  if (parts.size() < 2) {
    throw PreconditionError(std::string(mode == StickMode::kStrong ? "N(" : "N*(") +
                            std::to_string(w) + ") is connected");
  }
  if (!side_u) side_u = parts.front();
  std::sort(side_u->begin(), side_u->end());
  VertexSet on_u(g.order());
  for (Vertex x : *side_u) {
    if (x < 0 || x >= g.order() || !g.adjacent(w, x)) {
      throw PreconditionError("side assignment names non-neighbour " + std::to_string(x));
    }
    on_u.set(x);
  }
  for (const auto& part : parts) {
    const auto inside = std::count_if(part.begin(), part.end(), [&](Vertex x) { return on_u.test(x); });
    if (inside != 0 && inside != static_cast<long>(part.size())) {
      throw PreconditionError("side assignment splits a neighbourhood component");
    }
  }
  if (on_u.empty() || on_u == g.neighbors(w)) {
    throw PreconditionError("side assignment leaves one new vertex without neighbours");
  }

  auto [rest, map] = delete_vertices(g, {w});
  Graph out(rest.order() + 2);
  for (const Edge& f : rest.edges()) out.add_edge(f.u, f.v);
  const Vertex u = rest.order();
  const Vertex v = rest.order() + 1;
  g.neighbors(w).for_each([&](Vertex x) { out.add_edge(map[x], on_u.test(x) ? u : v); });
  const int d = distance(out, u, v);
  if (d < (mode == StickMode::kStrong ? 4 : 3)) {
    throw InternalError("inverse sticking produced vertices at distance " + std::to_string(d));
  }

  TransformResult result{std::move(out), InverseVertexStickStep{w, mode, *side_u}, map,
                         std::nullopt};
  if (dc) {
    const TriangleGraph tg = build_triangle_graph(g);
    std::vector<Triangle> mapped;
    for (const Triangle& t : cycle_triangles(tg, *dc)) {
      std::array<Vertex, 3> vs{};
      for (int i = 0; i < 3; ++i) {
        const Vertex x = t.v[i];
        if (x != w) {
          vs[i] = map[x];
          continue;
        }
        const Edge far = t.opposite_edge(w);
        vs[i] = on_u.test(far.u) ? u : v;
      }
      mapped.emplace_back(vs[0], vs[1], vs[2]);
    }
    result.cycle = detail::carry_cycle(result.graph, mapped);
  }
  return result;
}

// --- Replay -----------------------------------------------------------------

inline TransformResult apply_step(const Graph& g, const TransformStep& step,
                                  const std::optional<DesignatedCycle>& dc = std::nullopt) {
  return std::visit(
      [&](const auto& s) -> TransformResult {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, EdgeSplitStep>) {
          return edge_split(g, s.edge, s.apex, s.mode, dc);
        } else if constexpr (std::is_same_v<S, VertexStickStep>) {
          return vertex_stick(g, s.u, s.v, s.mode, dc);
        } else if constexpr (std::is_same_v<S, InverseEdgeSplitStep>) {
          return inverse_edge_split(g, s.w, s.mode, dc);
        } else {
          return inverse_vertex_stick(g, s.w, s.mode, s.side_u, dc);
        }
      },
      step);
}

/// Replays `steps` from `initial`, tracking the designated cycle if given.
inline TransformLog replay(const Graph& initial, const std::optional<std::vector<Triangle>>& cycle,
                           const std::vector<TransformStep>& steps) {
  TransformLog log{initial, cycle, steps, initial};
  std::optional<DesignatedCycle> dc = detail::carry_cycle(initial, cycle);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      TransformResult r = apply_step(log.final, steps[i], dc);
      log.final = std::move(r.graph);
      dc = std::move(r.cycle);
    } catch (const PreconditionError& err) {
      throw PreconditionError("step " + std::to_string(i + 1) + ": " + err.what());
    }
  }
  return log;
}

inline int count_splits(const std::vector<TransformStep>& steps) {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const TransformStep& s) {
    return std::holds_alternative<EdgeSplitStep>(s) ||
           std::holds_alternative<InverseEdgeSplitStep>(s);
  }));
}

// --- Enumerating applicable operations -------------------------------------

/// Every (edge, apex) pair admitting a strong split.
inline std::vector<EdgeSplitStep> strong_splits(const Graph& g) {
  const TriangleGraph tg = build_triangle_graph(g);
  std::vector<EdgeSplitStep> out;
  for (const auto& [e, tris] : tg.edge_incidence) {
    if (tris.size() != 1) continue;
    const Vertex apex = tg.triangles[tris[0]].opposite(e);
    if (tg.incidence(Edge(e.u, apex)).size() > 1 && tg.incidence(Edge(e.v, apex)).size() > 1) {
      out.push_back({e, apex, SplitMode::kStrong});
    }
  }
  return out;
}

/// Every weak split relative to dc.
inline std::vector<EdgeSplitStep> weak_splits(const Graph& g, const DesignatedCycle& dc) {
  const TriangleGraph tg = build_triangle_graph(g);
  const EdgeCoverage cov = classify_edge_coverage(tg, dc);
  std::vector<EdgeSplitStep> out;
  if (!cov.over_covered.empty()) return out;
  for (const Edge& e : cov.private_edges) {
    for (int t : dc.triangle_indices) {
      if (tg.triangles[t].contains(e)) {
        out.push_back({e, tg.triangles[t].opposite(e), SplitMode::kWeak});
      }
    }
  }
  return out;
}

/// Vertex pairs at distance at least `min_distance` (unreachable counts).
inline std::vector<VertexStickStep> stick_pairs(const Graph& g, StickMode mode) {
  const int need = mode == StickMode::kStrong ? 4 : 3;
  std::vector<VertexStickStep> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    const auto dist = distances_from(g, a);
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (dist[b] >= need) out.push_back({a, b, mode});
    }
  }
  return out;
}

/// Vertices whose neighbourhood is disconnected.
inline std::vector<Vertex> strong_unstick_candidates(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (open_neighborhood(g, w).parts().size() >= 2) out.push_back(w);
  }
  return out;
}

inline std::vector<Vertex> unsplit_candidates(const Graph& g, UnsplitMode mode) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) == 3 && std::holds_alternative<UnsplitShape>(unsplit_shape(g, w, mode))) {
      out.push_back(w);
    }
  }
  return out;
}

// --- Reduction --------------------------------------------------------------

struct Reduction {
  Graph base;
  TransformLog log;
};

namespace detail {

inline void require_cycle_tgraph(const Graph& g) {
  if (!is_cycle_graph(build_triangle_graph(g).derived)) {
    throw PreconditionError("triangle graph is not a cycle");
  }
}

}  // namespace detail

namespace detail {

// The reduction loop itself, without the cycle precondition. Both inverse
// operations preserve whether T is a cycle, so running it on other graphs
// is meaningful: the base then lies outside the irreducible list.
inline Reduction reduce_greedily(const Graph& g) {
  Graph cur = g;
  std::vector<TransformStep> steps;
  while (true) {
    const auto sticks = strong_unstick_candidates(cur);
    if (!sticks.empty()) {
      TransformResult r = inverse_vertex_stick(cur, sticks.front(), StickMode::kStrong);
      steps.push_back(r.step);
      cur = std::move(r.graph);
      continue;
    }
    const auto splits = unsplit_candidates(cur, UnsplitMode::kStrict);
    if (!splits.empty()) {
      TransformResult r = inverse_edge_split(cur, splits.front(), UnsplitMode::kStrict);
      steps.push_back(r.step);
      cur = std::move(r.graph);
      continue;
    }
    break;
  }
  return {cur, TransformLog{g, std::nullopt, std::move(steps), cur}};
}

}  // namespace detail

/// Applies strict inverse splits and strong inverse sticks until neither
/// applies. Rule: lowest eligible vertex first, inverse sticks before
/// inverse splits. Terminates: an inverse split removes two edges, an
/// inverse stick keeps the edges and adds a non-isolated vertex, and the
/// non-isolated vertices never exceed twice the edge count.
inline Reduction reduce_to_irreducible(const Graph& g) {
  detail::require_cycle_tgraph(g);
  return detail::reduce_greedily(g);
}

/// As reduce_to_irreducible, but each step picks uniformly among all
/// eligible inverse operations and component assignments.
template <class Rng>
Reduction reduce_randomly(const Graph& g, Rng& rng) {
  detail::require_cycle_tgraph(g);
  Graph cur = g;
  std::vector<TransformStep> steps;
  while (true) {
    std::vector<TransformStep> options;
    for (Vertex w : strong_unstick_candidates(cur)) {
      const auto parts = open_neighborhood(cur, w).parts();
      // Every non-trivial subset of components, encoded by bitmask; the
      // mask and its complement give mirror-image results, keep one.
      const std::uint32_t full = (std::uint32_t{1} << parts.size()) - 1;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        if ((mask & 1U) == 0) continue;
        std::vector<Vertex> side;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (mask & (std::uint32_t{1} << i)) side.insert(side.end(), parts[i].begin(), parts[i].end());
        }
        options.push_back(InverseVertexStickStep{w, StickMode::kStrong, side});
      }
    }
    for (Vertex w : unsplit_candidates(cur, UnsplitMode::kStrict)) {
      options.push_back(InverseEdgeSplitStep{w, UnsplitMode::kStrict});
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    TransformResult r = apply_step(cur, options[pick(rng)]);
    steps.push_back(r.step);
    cur = std::move(r.graph);
  }
  return {cur, TransformLog{g, std::nullopt, std::move(steps), cur}};
}

// --- Reordering -------------------------------------------------------------

namespace detail {

// Tracks where vertices and edges of a forward log came from. Atoms are the
// initial vertices plus one per split; a current vertex is a set of atoms
// (several after sticking). Each initial edge keeps its chain of
// subdivision atoms from one end to the other.
struct Provenance {
  std::vector<std::vector<int>> atoms_of;    // current label -> atoms
  std::map<Edge, int> origin;                // current edge -> initial edge or -1
  std::vector<std::vector<int>> chain;       // initial edge -> atom path
  int next_atom = 0;

  explicit Provenance(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) atoms_of.push_back({v});
    next_atom = g.order();
    int idx = 0;
    for (const Edge& e : g.edges()) {
      origin[e] = idx++;
      chain.push_back({e.u, e.v});
    }
  }

  bool has_atom(Vertex label, int atom) const {
    const auto& a = atoms_of[label];
    return std::find(a.begin(), a.end(), atom) != a.end();
  }

  int on_split(Edge e, Vertex apex, Vertex w) {
    const auto it = origin.find(e);
    if (it == origin.end() || it->second < 0) {
      throw PreconditionError("split edge " + to_string(e) +
                              " does not descend from an edge of the initial graph");
    }
    const int o = it->second;
    origin.erase(it);
    auto& path = chain[o];
    const int atom = next_atom++;
    bool placed = false;
    for (std::size_t i = 0; i + 1 < path.size() && !placed; ++i) {
      const bool fwd = has_atom(e.u, path[i]) && has_atom(e.v, path[i + 1]);
      const bool back = has_atom(e.v, path[i]) && has_atom(e.u, path[i + 1]);
      if (fwd || back) {
        path.insert(path.begin() + static_cast<long>(i) + 1, atom);
        placed = true;
      }
    }
    if (!placed) throw InternalError("lost track of subdivision chain");
    atoms_of.push_back({atom});
    origin[Edge(e.u, w)] = o;
    origin[Edge(w, e.v)] = o;
    origin[Edge(w, apex)] = -1;
    return o;
  }

  void on_relabel(const std::vector<Vertex>& old_to_new, int new_order) {
    std::vector<std::vector<int>> atoms(new_order);
    for (std::size_t old = 0; old < old_to_new.size(); ++old) {
      const Vertex n = old_to_new[old];
      if (n < 0) continue;
      atoms[n].insert(atoms[n].end(), atoms_of[old].begin(), atoms_of[old].end());
    }
    for (auto& a : atoms) std::sort(a.begin(), a.end());
    atoms_of = std::move(atoms);
    std::map<Edge, int> moved;
    for (const auto& [e, o] : origin) moved[Edge(old_to_new[e.u], old_to_new[e.v])] = o;
    origin = std::move(moved);
  }

  Vertex label_of(int atom) const {
    for (std::size_t l = 0; l < atoms_of.size(); ++l) {
      if (has_atom(static_cast<Vertex>(l), atom)) return static_cast<Vertex>(l);
    }
    throw InternalError("atom " + std::to_string(atom) + " vanished");
  }
};

}  // namespace detail

/// Rewrites a log of forward splits and sticks so that weak-but-not-strong
/// splits come first, then strong splits, then all sticks. Splits are
/// regrouped per initial edge by their subdivision count s(e); the result is
/// checked to end in a graph isomorphic to the original final graph.
inline TransformLog reorder_log(const TransformLog& log) {
  for (const auto& s : log.steps) {
    if (std::holds_alternative<InverseEdgeSplitStep>(s) ||
        std::holds_alternative<InverseVertexStickStep>(s)) {
      throw PreconditionError("reordering applies to forward steps only");
    }
  }
  if (log.steps.empty()) return log;

  std::optional<std::vector<Triangle>> cycle = log.cycle;
  if (!cycle) {
    const TriangleGraph tg = build_triangle_graph(log.initial);
    auto whole = whole_cycle(tg);
    if (!whole) throw PreconditionError("log has no designated cycle and T(initial) is not a cycle");
    cycle = cycle_triangles(tg, *whole);
  }

  // Pass 1: replay the original, recording the subdivision chains and the
  // sticks as atom pairs.
  detail::Provenance prov(log.initial);
  Graph cur = log.initial;
  std::optional<DesignatedCycle> dc = detail::carry_cycle(cur, cycle);
  std::vector<int> splits_on(prov.chain.size(), 0);
  struct AtomStick {
    int a;
    int b;
    StickMode mode;
  };
  std::vector<AtomStick> sticks;
  for (const auto& step : log.steps) {
    TransformResult r = apply_step(cur, step, dc);
    if (const auto* sp = std::get_if<EdgeSplitStep>(&step)) {
      ++splits_on[prov.on_split(sp->edge, sp->apex, cur.order())];
    } else {
      const auto& st = std::get<VertexStickStep>(step);
      sticks.push_back({prov.atoms_of[st.u].front(), prov.atoms_of[st.v].front(), st.mode});
      prov.on_relabel(r.old_to_new, r.graph.order());
    }
    cur = std::move(r.graph);
    dc = std::move(r.cycle);
  }
  const Graph original_final = cur;

  // Pass 2: rebuild. Splits on one initial edge always subdivide the
  // segment next to its second endpoint, so the k-th new vertex on a chain
  // sits at position k, matching pass 1's chain order.
  const std::vector<Edge> initial_edges = log.initial.edges();
  std::vector<TransformStep> out_steps;
  cur = log.initial;
  dc = detail::carry_cycle(cur, cycle);
  std::map<int, Vertex> label_of_atom;  // pass-1 atom -> label before sticks
  for (Vertex v = 0; v < cur.order(); ++v) label_of_atom[v] = v;
  std::vector<int> done(initial_edges.size(), 0);
  std::vector<Vertex> tail(initial_edges.size());  // current last chain vertex before end v
  for (std::size_t i = 0; i < initial_edges.size(); ++i) tail[i] = initial_edges[i].u;

  auto split_once = [&](std::size_t i, SplitMode mode) {
    const Edge seg(tail[i], initial_edges[i].v);
    const TriangleGraph tg = build_triangle_graph(cur);
    Vertex apex = -1;
    for (int t : dc->triangle_indices) {
      if (tg.triangles[t].contains(seg)) apex = tg.triangles[t].opposite(seg);
    }
    if (apex < 0) throw InternalError("segment " + to_string(seg) + " is in no cycle-triangle");
    TransformResult r = edge_split(cur, seg, apex, mode, dc);
    const Vertex w = cur.order();
    ++done[i];
    label_of_atom[prov.chain[i][static_cast<std::size_t>(done[i])]] = w;
    tail[i] = w;
    out_steps.push_back(r.step);
    cur = std::move(r.graph);
    dc = std::move(r.cycle);
  };
  auto in_additional = [&](std::size_t i) {
    const Edge seg(tail[i], initial_edges[i].v);
    const TriangleGraph tg = build_triangle_graph(cur);
    for (int t : tg.incidence(seg)) {
      if (!dc->contains(t)) return true;
    }
    return false;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < initial_edges.size(); ++i) {
      if (done[i] < splits_on[i] && in_additional(i)) {
        split_once(i, SplitMode::kWeak);
        progress = true;
      }
    }
  }
  for (std::size_t i = 0; i < initial_edges.size(); ++i) {
    while (done[i] < splits_on[i]) {
      split_once(i, in_additional(i) ? SplitMode::kWeak : SplitMode::kWeakStrong);
    }
  }

  // Sticks, mapped through the current labels of their atoms.
  std::vector<Vertex> current(cur.order());
  std::map<int, int> slot;  // atom -> index into `current`
  for (const auto& [atom, label] : label_of_atom) slot[atom] = label;
  for (Vertex v = 0; v < cur.order(); ++v) current[v] = v;
  for (const auto& st : sticks) {
    const Vertex a = current[slot.at(st.a)];
    const Vertex b = current[slot.at(st.b)];
    TransformResult r = vertex_stick(cur, a, b, st.mode, dc);
    for (auto& c : current) c = r.old_to_new[c];
    out_steps.push_back(r.step);
    cur = std::move(r.graph);
    dc = std::move(r.cycle);
  }
  if (!is_isomorphic(cur, original_final)) {
    throw InternalError("reordered log does not reproduce the original graph");
  }
  return TransformLog{log.initial, cycle, std::move(out_steps), cur};
}

// --- Text form --------------------------------------------------------------

inline std::string to_token(SplitMode m) {
  switch (m) {
    case SplitMode::kStrong: return "strong";
    case SplitMode::kWeak: return "weak";
    case SplitMode::kWeakStrong: return "weak-strong";
  }
  return "?";
}
inline std::string to_token(UnsplitMode m) {
  switch (m) {
    case UnsplitMode::kWeak: return "weak";
    case UnsplitMode::kStrong: return "strong";
    case UnsplitMode::kStrict: return "strict";
  }
  return "?";
}
inline std::string to_token(StickMode m) { return m == StickMode::kStrong ? "strong" : "weak"; }

inline std::string to_string(const TransformStep& step) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, EdgeSplitStep>) {
          os << "SPLIT " << to_token(s.mode) << ' ' << s.edge.u << ' ' << s.edge.v << ' ' << s.apex;
        } else if constexpr (std::is_same_v<S, VertexStickStep>) {
          os << "STICK " << to_token(s.mode) << ' ' << s.u << ' ' << s.v;
        } else if constexpr (std::is_same_v<S, InverseEdgeSplitStep>) {
          os << "UNSPLIT " << to_token(s.mode) << ' ' << s.w;
        } else {
          os << "UNSTICK " << to_token(s.mode) << ' ' << s.w << ' ';
          for (std::size_t i = 0; i < s.side_u.size(); ++i) os << (i ? "," : "") << s.side_u[i];
        }
      },
      step);
  return os.str();
}

/// One step per line, optionally preceded by `CYCLE a,b,c d,e,f ...`.
inline std::string format_log(const TransformLog& log) {
  std::string out;
  if (log.cycle) {
    out += "CYCLE";
    for (const Triangle& t : *log.cycle) {
      out += ' ' + std::to_string(t.v[0]) + ',' + std::to_string(t.v[1]) + ',' +
             std::to_string(t.v[2]);
    }
    out += '\n';
  }
  for (const auto& s : log.steps) out += to_string(s) + '\n';
  return out;
}

struct ParsedSteps {
  std::optional<std::vector<Triangle>> cycle;
  std::vector<TransformStep> steps;
};

inline ParsedSteps parse_log(const std::string& text) {
  ParsedSteps out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw PreconditionError("log line " + std::to_string(lineno) + ": " + why);
  };
  auto parse_int = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) fail("bad vertex '" + tok + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad vertex '" + tok + "'");
    }
    return 0;
  };
  auto parse_list = [&](const std::string& tok) {
    std::vector<Vertex> vs;
    std::string part;
    std::istringstream ps(tok);
    while (std::getline(ps, part, ',')) vs.push_back(parse_int(part));
    return vs;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& verb = tok[0];
    if (verb == "CYCLE") {
      if (out.cycle || !out.steps.empty()) fail("CYCLE must be the first entry");
      out.cycle.emplace();
      for (std::size_t i = 1; i < tok.size(); ++i) {
        auto vs = parse_list(tok[i]);
        if (vs.size() != 3) fail("cycle triangle needs three vertices");
        out.cycle->emplace_back(vs[0], vs[1], vs[2]);
      }
      continue;
    }
    if (tok.size() < 2) fail("missing strength");
    const std::string& mode = tok[1];
    if (verb == "SPLIT") {
      if (tok.size() != 5) fail("SPLIT takes strength x y apex");
      SplitMode m{};
      if (mode == "strong") m = SplitMode::kStrong;
      else if (mode == "weak") m = SplitMode::kWeak;
      else if (mode == "weak-strong") m = SplitMode::kWeakStrong;
      else fail("unknown split strength '" + mode + "'");
      out.steps.push_back(EdgeSplitStep{Edge(parse_int(tok[2]), parse_int(tok[3])), parse_int(tok[4]), m});
    } else if (verb == "STICK" || verb == "UNSTICK") {
      StickMode m{};
      if (mode == "strong") m = StickMode::kStrong;
      else if (mode == "weak") m = StickMode::kWeak;
      else fail("unknown stick strength '" + mode + "'");
      if (verb == "STICK") {
        if (tok.size() != 4) fail("STICK takes strength u v");
        out.steps.push_back(VertexStickStep{parse_int(tok[2]), parse_int(tok[3]), m});
      } else {
        if (tok.size() != 4) fail("UNSTICK takes strength w side-assignment");
        out.steps.push_back(InverseVertexStickStep{parse_int(tok[2]), m, parse_list(tok[3])});
      }
    } else if (verb == "UNSPLIT") {
      if (tok.size() != 3) fail("UNSPLIT takes strength w");
      UnsplitMode m{};
      if (mode == "weak") m = UnsplitMode::kWeak;
      else if (mode == "strong") m = UnsplitMode::kStrong;
      else if (mode == "strict") m = UnsplitMode::kStrict;
      else fail("unknown unsplit strength '" + mode + "'");
      out.steps.push_back(InverseEdgeSplitStep{parse_int(tok[2]), m});
    } else {
      fail("unknown step '" + verb + "'");
    }
  }
  return out;
}

}  // namespace trigraph
