#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trigraph {

/// Raised when an operation's precondition does not hold. The message names
/// the failing clause.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two routes that must agree do not. Never expected in practice.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Vertex = int;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Dynamic bitset over vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return universe_; }

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  bool any() const { return !empty(); }

  /// Lowest member, or -1.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
      }
    }
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes every member of o.
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet minus(VertexSet a, const VertexSet& b) {
    return a.subtract(b);
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) return true;
    }
    return false;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..order-1.
///
/// Adjacency is kept as one bitset row per vertex, so adjacency tests and
/// neighborhood intersections are cheap at the sizes this library targets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order) : order_(order), rows_(order, VertexSet(order)) {
    if (order < 0) throw PreconditionError("graph order must be nonnegative");
  }
  Graph(int order, std::span<const Edge> edges) : Graph(order) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }
  Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(order) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  int order() const { return order_; }
  int size() const { return size_; }

  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return rows_[v].count(); }

  /// Throws on self-loops, parallel edges and out-of-range endpoints.
  void add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw PreconditionError("self-loop on vertex " + std::to_string(a));
    if (rows_[a].test(b)) {
      throw PreconditionError("parallel edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "}");
    }
    rows_[a].set(b);
    rows_[b].set(a);
    ++size_;
  }

  void remove_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (!rows_[a].test(b)) {
      throw PreconditionError("no edge {" + std::to_string(a) + "," +
                              std::to_string(b) + "}");
    }
    rows_[a].reset(b);
    rows_[b].reset(a);
    --size_;
  }

  /// Appends an isolated vertex and returns its label.
  Vertex add_vertex() {
    Graph bigger(order_ + 1);
    for (const Edge& e : edges()) bigger.add_edge(e.u, e.v);
    *this = std::move(bigger);
    return order_ - 1;
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex u = 0; u < order_; ++u) {
      rows_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  VertexSet empty_set() const { return VertexSet(order_); }
  VertexSet full_set() const {
    VertexSet s(order_);
    for (Vertex v = 0; v < order_; ++v) s.set(v);
    return s;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order_) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " out of range for order " + std::to_string(order_));
    }
  }

  int order_ = 0;
  int size_ = 0;
  std::vector<VertexSet> rows_;
};

/// Sorted vertex triple of a complete 3-vertex subgraph.
struct Triangle {
  std::array<Vertex, 3> v{};

  Triangle() = default;
  Triangle(Vertex a, Vertex b, Vertex c) : v{a, b, c} { std::sort(v.begin(), v.end()); }

  std::array<Edge, 3> edges() const {
    return {Edge(v[0], v[1]), Edge(v[0], v[2]), Edge(v[1], v[2])};
  }
  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  bool contains(const Edge& e) const { return contains(e.u) && contains(e.v); }
  /// The vertex not on e; e must be an edge of this triangle.
  Vertex opposite(const Edge& e) const {
    for (Vertex x : v) {
      if (!e.contains(x)) return x;
    }
    throw PreconditionError("edge is not on triangle");
  }
  /// The edge not incident to x; x must be a vertex of this triangle.
  Edge opposite_edge(Vertex x) const {
    if (x == v[0]) return Edge(v[1], v[2]);
    if (x == v[1]) return Edge(v[0], v[2]);
    if (x == v[2]) return Edge(v[0], v[1]);
    throw PreconditionError("vertex is not on triangle");
  }
  int shared_vertices(const Triangle& o) const {
    int c = 0;
    for (Vertex x : v) c += o.contains(x) ? 1 : 0;
    return c;
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Every triangle exactly once, in lexicographic order of sorted triples.
inline std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    g.neighbors(a).for_each([&](Vertex b) {
      if (b <= a) return;
      VertexSet common = g.neighbors(a) & g.neighbors(b);
      common.for_each([&](Vertex c) {
        if (c > b) out.emplace_back(a, b, c);
      });
    });
  }
  return out;
}

/// Result of deleting vertices: the smaller graph plus old->new labels
/// (-1 for deleted vertices).
struct Relabeled {
  Graph graph;
  std::vector<Vertex> old_to_new;
};

/// Deletes the given vertices and relabels the rest densely, preserving order.
inline Relabeled delete_vertices(const Graph& g, const std::vector<Vertex>& doomed) {
  std::vector<Vertex> map(g.order(), 0);
  for (Vertex d : doomed) map.at(d) = -1;
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (map[v] != -1) map[v] = next++;
  }
  Graph out(next);
  for (const Edge& e : g.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) out.add_edge(map[e.u], map[e.v]);
  }
  return {std::move(out), std::move(map)};
}

/// Subgraph induced by `keep`, relabeled densely in ascending order.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  Graph out(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) out.add_edge(a, b);
    }
  }
  return out;
}

/// Applies a permutation: vertex v of g becomes perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// BFS distances from `source`; kUnreachable for other components.
inline std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    g.neighbors(x).for_each([&](Vertex y) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return dist;
}

inline int distance(const Graph& g, Vertex a, Vertex b) {
  return distances_from(g, a)[b];
}

/// Connected components of the subgraph induced by `within`, each sorted,
/// ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& within) {
  std::vector<std::vector<Vertex>> out;
  VertexSet left = within;
  while (left.any()) {
    Vertex s = left.first();
    std::vector<Vertex> comp{s};
    left.reset(s);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      (g.neighbors(comp[head]) & left).for_each([&](Vertex y) {
        left.reset(y);
        comp.push_back(y);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  return components(g, g.full_set());
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Disjoint union; b's labels are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

/// Join: disjoint union plus every edge between the two parts.
inline Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (Vertex x = 0; x < a.order(); ++x) {
    for (Vertex y = 0; y < b.order(); ++y) out.add_edge(x, a.order() + y);
  }
  return out;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

/// Connected, 2-regular, at least 3 vertices.
inline bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

/// Connected, at least 2 vertices, two vertices of degree 1 and the rest 2.
inline bool is_path_graph(const Graph& g) {
  if (g.order() < 2 || g.size() != g.order() - 1) return false;
  int ends = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 1) ++ends;
    else if (d != 2) return false;
  }
  return ends == 2 && is_connected(g);
}

/// Vertices of a cycle graph in cyclic order, starting at 0 and continuing
/// to its smaller neighbour.
inline std::vector<Vertex> cycle_traversal(const Graph& g) {
  if (!is_cycle_graph(g)) throw PreconditionError("graph is not a cycle");
  std::vector<Vertex> out{0};
  Vertex prev = -1;
  Vertex cur = 0;
  while (true) {
    Vertex next = -1;
    g.neighbors(cur).for_each([&](Vertex y) {
      if (y != prev && next < 0) next = y;
    });
    if (next == 0) break;
    out.push_back(next);
    prev = cur;
    cur = next;
    if (static_cast<int>(out.size()) > g.order()) break;
  }
  return out;
}

inline std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

inline std::string to_string(const Triangle& t) {
  return "{" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]) + "}";
}

}  // namespace trigraph
