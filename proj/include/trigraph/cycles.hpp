#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

namespace detail {

// Depth-first extension of chordless paths. Each cycle is reported once:
// it starts at its smallest vertex and its second vertex is smaller than
// its last. A vertex adjacent to the start can only close the cycle.
class InducedCycleSearch {
 public:
  using Accept = std::function<bool(int)>;
  using Visit = std::function<bool(const std::vector<Vertex>&)>;

  InducedCycleSearch(const Graph& g, int min_len, int max_len, Accept accept, Visit visit)
      : g_(g), min_len_(min_len), max_len_(max_len), accept_(std::move(accept)),
        visit_(std::move(visit)) {}

  /// Returns false if the visitor asked to stop.
  bool run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      VertexSet start(g_.order());
      start.set(s);
      blocked_.assign(1, std::move(start));
      if (!extend()) return false;
    }
    return true;
  }

 private:
  VertexSet closed(Vertex v) const {
    VertexSet c = g_.neighbors(v);
    c.set(v);
    return c;
  }

  bool extend() {
    const Vertex s = path_.front();
    const Vertex last = path_.back();
    const int k = static_cast<int>(path_.size());
    // Path vertices plus the neighbourhoods of every interior vertex.
    VertexSet forbidden = blocked_.back();
    VertexSet candidates = minus(g_.neighbors(last), forbidden);
    bool keep_going = true;
    candidates.for_each([&](Vertex y) {
      if (!keep_going || y <= s) return;
      if (k >= 2 && g_.adjacent(y, s)) {
        const int len = k + 1;
        if (len >= min_len_ && len <= max_len_ && accept_(len) && path_[1] < y) {
          path_.push_back(y);
          keep_going = visit_(path_);
          path_.pop_back();
        }
        return;
      }
      if (k + 1 >= max_len_) return;
      VertexSet next = forbidden;
      next.set(y);
      if (k >= 2) next |= closed(last);
      path_.push_back(y);
      blocked_.push_back(std::move(next));
      keep_going = extend();
      blocked_.pop_back();
      path_.pop_back();
    });
    return keep_going;
  }

  const Graph& g_;
  int min_len_;
  int max_len_;
  Accept accept_;
  Visit visit_;
  std::vector<Vertex> path_;
  std::vector<VertexSet> blocked_;
};

inline std::optional<std::vector<Vertex>> first_induced_cycle(
    const Graph& g, int min_len, int max_len, const std::function<bool(int)>& accept) {
  std::optional<std::vector<Vertex>> found;
  InducedCycleSearch(g, min_len, max_len, accept,
                     [&](const std::vector<Vertex>& c) {
                       found = c;
                       return false;
                     })
      .run();
  return found;
}

}  // namespace detail

/// An induced cycle of exactly `length` vertices (length >= 4), listed in
/// cyclic order.
inline std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, int length) {
  if (length < 4) {
    throw PreconditionError("induced cycle length must be at least 4; length-3 "
                            "cycles are triangles");
  }
  return detail::first_induced_cycle(g, length, length, [](int) { return true; });
}

/// An induced cycle of any odd length >= 5.
inline std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) {
  return detail::first_induced_cycle(g, 5, g.order(), [](int len) { return len % 2 == 1; });
}

/// An induced cycle of any length >= 4.
inline std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
  return detail::first_induced_cycle(g, 4, g.order(), [](int) { return true; });
}

/// Calls visit(cycle) once per induced cycle of the given length (>= 3);
/// stops early when visit returns false.
inline void for_each_induced_cycle(const Graph& g, int length,
                                   const std::function<bool(const std::vector<Vertex>&)>& visit) {
  detail::InducedCycleSearch(g, length, length, [](int) { return true; }, visit).run();
}

inline std::vector<std::vector<Vertex>> all_induced_cycles(const Graph& g, int length) {
  std::vector<std::vector<Vertex>> out;
  for_each_induced_cycle(g, length, [&](const std::vector<Vertex>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

/// Consecutive vertices adjacent (cyclically), all other pairs not.
inline bool verify_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) return false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace trigraph
