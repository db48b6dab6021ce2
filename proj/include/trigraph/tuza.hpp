#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trigraph/cycles.hpp"
#include "trigraph/graph.hpp"
#include "trigraph/triangle_graph.hpp"

namespace trigraph {

// --- Packing: maximum independent set of T(G) -------------------------------

namespace detail {

// Branch and bound over a bitset of candidates. The bound partitions the
// candidates greedily into cliques; an independent set takes at most one
// vertex per clique.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  std::vector<Vertex> run() {
    std::vector<Vertex> chosen;
    expand(g_.full_set(), chosen);
    return best_;
  }

 private:
  int clique_bound(VertexSet cand) const {
    int cliques = 0;
    while (cand.any()) {
      VertexSet clique_pool = cand;
      while (clique_pool.any()) {
        const Vertex v = clique_pool.first();
        cand.reset(v);
        clique_pool.reset(v);
        clique_pool &= g_.neighbors(v);
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(VertexSet cand, std::vector<Vertex>& chosen) {
    // Vertices with no candidate neighbour are always safe to take.
    std::vector<Vertex> forced;
    cand.for_each([&](Vertex v) {
      if (!(g_.neighbors(v) & cand).any()) forced.push_back(v);
    });
    for (Vertex v : forced) {
      cand.reset(v);
      chosen.push_back(v);
    }
    if (cand.empty()) {
      if (chosen.size() > best_.size()) best_ = chosen;
    } else if (static_cast<int>(chosen.size()) + clique_bound(cand) > static_cast<int>(best_.size())) {
      Vertex pick = -1;
      int pick_deg = -1;
      cand.for_each([&](Vertex v) {
        const int d = (g_.neighbors(v) & cand).count();
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      VertexSet with = cand;
      with.reset(pick);
      with.subtract(g_.neighbors(pick));
      chosen.push_back(pick);
      expand(with, chosen);
      chosen.pop_back();
      cand.reset(pick);
      expand(cand, chosen);
    }
    chosen.resize(chosen.size() - forced.size());
  }

  const Graph& g_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// Maximum independent set of any graph, sorted.
inline std::vector<Vertex> maximum_independent_set(const Graph& g) {
  auto s = detail::IndependentSetSearch(g).run();
  std::sort(s.begin(), s.end());
  return s;
}

struct Packing {
  int value = 0;
  /// Triangle indices in enumerate_triangles order.
  std::vector<int> triangles;
};

/// Pairwise edge-disjoint triangles are exactly independent sets of T(G).
inline Packing nu_delta(const Graph& g) {
  const TriangleGraph tg = build_triangle_graph(g);
  Packing p;
  p.triangles = maximum_independent_set(tg.derived);
  p.value = static_cast<int>(p.triangles.size());
  return p;
}

// --- Covering: minimum T-transversal ----------------------------------------

namespace detail {

class TransversalSearch {
 public:
  explicit TransversalSearch(const TriangleGraph& tg) {
    for (const auto& [e, tris] : tg.edge_incidence) {
      edges_.push_back(e);
      index_[e] = static_cast<int>(edges_.size()) - 1;
    }
    for (const Triangle& t : tg.triangles) {
      const auto es = t.edges();
      tri_edges_.push_back({index_[es[0]], index_[es[1]], index_[es[2]]});
    }
    for (const auto& [e, tris] : tg.edge_incidence) hits_.push_back(tris);
  }

  std::vector<Edge> run() {
    const int m = static_cast<int>(edges_.size());
    taken_.assign(m, false);
    banned_.assign(m, false);
    cover_count_.assign(tri_edges_.size(), 0);
    // Any maximal packing gives a cover of three edges per packed triangle.
    best_size_ = static_cast<int>(tri_edges_.size()) * 3 + 1;
    search(0);
    std::vector<Edge> out;
    for (int i : best_) out.push_back(edges_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void take(int e, int delta) {
    for (int t : hits_[e]) cover_count_[t] += delta;
  }

  // Greedy edge-disjoint packing of uncovered triangles, counting only
  // edges still allowed; each packed triangle needs its own new edge.
  int lower_bound() const {
    std::vector<bool> used(edges_.size(), false);
    int packed = 0;
    for (std::size_t t = 0; t < tri_edges_.size(); ++t) {
      if (cover_count_[t] > 0) continue;
      bool free = true;
      for (int e : tri_edges_[t]) {
        if (!banned_[e] && used[e]) free = false;
      }
      if (!free) continue;
      for (int e : tri_edges_[t]) {
        if (!banned_[e]) used[e] = true;
      }
      ++packed;
    }
    return packed;
  }

  void search(int size) {
    if (size + lower_bound() >= best_size_) return;
    int pick = -1;
    int pick_options = 4;
    for (std::size_t t = 0; t < tri_edges_.size(); ++t) {
      if (cover_count_[t] > 0) continue;
      int options = 0;
      for (int e : tri_edges_[t]) options += banned_[e] ? 0 : 1;
      if (options < pick_options) {
        pick = static_cast<int>(t);
        pick_options = options;
      }
    }
    if (pick < 0) {
      best_size_ = size;
      best_.clear();
      for (std::size_t e = 0; e < taken_.size(); ++e) {
        if (taken_[e]) best_.push_back(static_cast<int>(e));
      }
      return;
    }
    if (pick_options == 0) return;
    std::vector<int> newly_banned;
    for (int e : tri_edges_[pick]) {
      if (banned_[e]) continue;
      taken_[e] = true;
      take(e, +1);
      search(size + 1);
      take(e, -1);
      taken_[e] = false;
      // Later branches exclude e: covers using it were already explored.
      banned_[e] = true;
      newly_banned.push_back(e);
    }
    for (int e : newly_banned) banned_[e] = false;
  }

  std::vector<Edge> edges_;
  std::map<Edge, int> index_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<std::vector<int>> hits_;
  std::vector<bool> taken_;
  std::vector<bool> banned_;
  std::vector<int> cover_count_;
  int best_size_ = 0;
  std::vector<int> best_;
};

}  // namespace detail

struct Transversal {
  int value = 0;
  std::vector<Edge> edges;
};

inline Transversal tau_delta(const Graph& g) {
  const TriangleGraph tg = build_triangle_graph(g);
  Transversal t;
  t.edges = detail::TransversalSearch(tg).run();
  t.value = static_cast<int>(t.edges.size());
  return t;
}

/// True when every triangle of g contains an edge of `edges`.
inline bool is_transversal(const Graph& g, const std::vector<Edge>& edges) {
  Graph rest = g;
  for (const Edge& e : edges) {
    if (!rest.adjacent(e.u, e.v)) return false;
    rest.remove_edge(e.u, e.v);
  }
  return enumerate_triangles(rest).empty();
}

// --- Clique covers of T(G) --------------------------------------------------

struct TypedClique {
  enum class Kind { kA, kB };
  Kind kind = Kind::kA;
  /// Kind A: the edge every member contains.
  Edge fixed_edge;
  /// Kind B: the K_4, sorted.
  std::array<Vertex, 4> k4{};
  /// Sorted triangle indices.
  std::vector<int> members;
};

/// One A-clique per edge in two or more triangles, a singleton A-clique per
/// triangle sharing no edge (fixed edge: its smallest), and one B-clique
/// per K_4 subgraph.
inline std::vector<TypedClique> typed_cliques(const TriangleGraph& tg) {
  std::vector<TypedClique> out;
  for (const auto& [e, tris] : tg.edge_incidence) {
    if (tris.size() >= 2) out.push_back({TypedClique::Kind::kA, e, {}, tris});
  }
  for (int t = 0; t < tg.triangle_count(); ++t) {
    if (tg.derived.degree(t) == 0) {
      out.push_back({TypedClique::Kind::kA, tg.triangles[t].edges()[0], {}, {t}});
    }
  }
  const Graph& g = tg.base;
  for (const Triangle& t : tg.triangles) {
    VertexSet ext = g.neighbors(t.v[0]) & g.neighbors(t.v[1]) & g.neighbors(t.v[2]);
    ext.for_each([&](Vertex d) {
      if (d <= t.v[2]) return;
      TypedClique c{TypedClique::Kind::kB, Edge(0, 1), {t.v[0], t.v[1], t.v[2], d}, {}};
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          for (int x = b + 1; x < 4; ++x) {
            c.members.push_back(tg.index_of(Triangle(c.k4[a], c.k4[b], c.k4[x])));
          }
        }
      }
      std::sort(c.members.begin(), c.members.end());
      out.push_back(std::move(c));
    });
  }
  return out;
}

/// Every maximal clique (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order.
inline std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> r;
  auto bk = [&](auto&& self, VertexSet p, VertexSet x) -> void {
    if (p.empty() && x.empty()) {
      if (r.empty()) return;
      out.push_back(r);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    (p | x).for_each([&](Vertex u) {
      const int c = (p & g.neighbors(u)).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    minus(p, g.neighbors(pivot)).for_each([&](Vertex v) {
      r.push_back(v);
      self(self, p & g.neighbors(v), x & g.neighbors(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  };
  bk(bk, g.full_set(), g.empty_set());
  std::sort(out.begin(), out.end());
  return out;
}

/// Maximal cliques of T(G) that are neither an A- nor a B-clique.
inline std::vector<std::vector<Vertex>> untyped_maximal_cliques(const TriangleGraph& tg) {
  std::set<std::vector<int>> typed;
  for (const auto& c : typed_cliques(tg)) typed.insert(c.members);
  std::vector<std::vector<Vertex>> out;
  for (auto& c : maximal_cliques(tg.derived)) {
    if (!typed.count(c)) out.push_back(std::move(c));
  }
  return out;
}

namespace detail {

// Exact minimum set cover of {0..universe-1} by `sets`; returns indices.
inline std::vector<int> minimum_cover(int universe, const std::vector<std::vector<int>>& sets,
                                      const Graph& conflict) {
  std::vector<std::vector<int>> covering(universe);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int x : sets[s]) covering[x].push_back(static_cast<int>(s));
  }
  std::vector<int> count(universe, 0);
  std::vector<int> chosen;
  std::vector<int> best;
  int best_size = universe + 1;
  // Pairwise non-adjacent uncovered elements need distinct sets.
  auto bound = [&]() {
    VertexSet picked(universe);
    int n = 0;
    for (int x = 0; x < universe; ++x) {
      if (count[x] > 0 || conflict.neighbors(x).intersects(picked)) continue;
      picked.set(x);
      ++n;
    }
    return n;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) + bound() >= best_size) return;
    int pick = -1;
    for (int x = 0; x < universe; ++x) {
      if (count[x] == 0 && (pick < 0 || covering[x].size() < covering[pick].size())) pick = x;
    }
    if (pick < 0) {
      best = chosen;
      best_size = static_cast<int>(chosen.size());
      return;
    }
    for (int s : covering[pick]) {
      chosen.push_back(s);
      for (int x : sets[s]) ++count[x];
      self(self);
      for (int x : sets[s]) --count[x];
      chosen.pop_back();
    }
  };
  rec(rec);
  return best;
}

}  // namespace detail

struct CliqueCover {
  int value = 0;
  std::vector<TypedClique> cliques;
  /// Set when some maximal clique of T(G) was untyped, so the search ran
  /// over all maximal cliques; then `untyped` holds those instead.
  bool used_fallback = false;
  std::vector<std::vector<Vertex>> untyped;
};

/// Minimum number of cliques covering T(G). Searches over typed cliques
/// unless T(G) has an untyped maximal clique.
inline CliqueCover theta_tgraph(const TriangleGraph& tg) {
  CliqueCover out;
  const int n = tg.triangle_count();
  auto untyped = untyped_maximal_cliques(tg);
  if (untyped.empty()) {
    const auto typed = typed_cliques(tg);
    std::vector<std::vector<int>> sets;
    for (const auto& c : typed) sets.push_back(c.members);
    for (int i : detail::minimum_cover(n, sets, tg.derived)) out.cliques.push_back(typed[i]);
  } else {
    out.used_fallback = true;
    const auto all = maximal_cliques(tg.derived);
    for (int i : detail::minimum_cover(n, all, tg.derived)) out.untyped.push_back(all[i]);
  }
  out.value = static_cast<int>(out.used_fallback ? out.untyped.size() : out.cliques.size());
  return out;
}

/// One fixed edge per A-clique and the matching {ab, cd} of each B-clique
/// on a < b < c < d. Throws if the cover misses a triangle.
inline std::vector<Edge> transversal_from_cover(const Graph& g, const std::vector<TypedClique>& cover) {
  const TriangleGraph tg = build_triangle_graph(g);
  std::vector<bool> covered(tg.triangle_count(), false);
  std::set<Edge> edges;
  for (const auto& c : cover) {
    for (int t : c.members) {
      if (t < 0 || t >= tg.triangle_count()) throw PreconditionError("cover names unknown triangle");
      covered[t] = true;
    }
    if (c.kind == TypedClique::Kind::kA) {
      edges.insert(c.fixed_edge);
    } else {
      edges.insert(Edge(c.k4[0], c.k4[1]));
      edges.insert(Edge(c.k4[2], c.k4[3]));
    }
  }
  for (int t = 0; t < tg.triangle_count(); ++t) {
    if (!covered[t]) throw PreconditionError("cover misses triangle " + to_string(tg.triangles[t]));
  }
  std::vector<Edge> out(edges.begin(), edges.end());
  if (!is_transversal(g, out)) throw InternalError("constructed edge set misses a triangle");
  return out;
}

// --- Report -----------------------------------------------------------------

struct TuzaReport {
  int nu = 0;
  int tau = 0;
  int theta = 0;
  std::vector<int> packing_witness;
  std::vector<Edge> transversal_witness;
  std::vector<TypedClique> cover_witness;
  /// From transversal_from_cover; empty when the fallback cover was used.
  std::vector<Edge> constructed_transversal;
  bool tgraph_perfect = false;
  bool bound_2x = false;
  bool equality = false;
  bool used_fallback = false;
  bool k4_free = false;
  /// For perfect T: nu = theta and tau <= |constructed| <= 2 theta.
  bool chain_holds = true;
};

inline TuzaReport tuza_report(const Graph& g) {
  const TriangleGraph tg = build_triangle_graph(g);
  TuzaReport r;
  const Packing p = nu_delta(g);
  r.nu = p.value;
  r.packing_witness = p.triangles;
  const Transversal t = tau_delta(g);
  r.tau = t.value;
  r.transversal_witness = t.edges;
  const CliqueCover cc = theta_tgraph(tg);
  r.theta = cc.value;
  r.used_fallback = cc.used_fallback;
  r.cover_witness = cc.cliques;
  if (!cc.used_fallback) r.constructed_transversal = transversal_from_cover(g, cc.cliques);
  r.tgraph_perfect = !find_odd_hole(tg.derived).has_value();
  r.bound_2x = r.tau <= 2 * r.nu;
  r.equality = r.tau == r.nu;
  r.k4_free = !std::any_of(tg.triangles.begin(), tg.triangles.end(), [&](const Triangle& tri) {
                return (g.neighbors(tri.v[0]) & g.neighbors(tri.v[1]) & g.neighbors(tri.v[2])).any();
              });
  if (r.tgraph_perfect) {
    const int built = static_cast<int>(r.constructed_transversal.size());
    r.chain_holds = !r.used_fallback && r.nu == r.theta && r.tau <= built && built <= 2 * r.theta;
  }
  return r;
}

}  // namespace trigraph
