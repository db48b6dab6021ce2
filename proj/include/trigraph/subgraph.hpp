#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

enum class Containment {
  /// Injective map carrying pattern edges to host edges.
  kSubgraph,
  /// As kSubgraph, and pattern non-edges go to host non-edges.
  kInduced,
};

namespace detail {

// Pattern vertices in matching order: start at a maximum-degree vertex, then
// repeatedly take the vertex with the most already-ordered neighbours.
inline std::vector<Vertex> matching_order(const Graph& p) {
  const int n = p.order();
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  std::vector<int> links(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || links[v] > links[best] ||
          (links[v] == links[best] && p.degree(v) > p.degree(best))) {
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
    p.neighbors(best).for_each([&](Vertex u) { ++links[u]; });
  }
  return order;
}

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern, Containment mode)
      : host_(host), pattern_(pattern), mode_(mode),
        order_(matching_order(pattern)), image_(pattern.order(), -1),
        used_(host.order()) {}

  std::optional<std::vector<Vertex>> run() {
    if (pattern_.order() > host_.order() || pattern_.size() > host_.size()) {
      return std::nullopt;
    }
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex pv = order_[depth];
    VertexSet candidates = minus(host_.full_set(), used_);
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex q = order_[i];
      if (pattern_.adjacent(pv, q)) {
        candidates &= host_.neighbors(image_[q]);
      } else if (mode_ == Containment::kInduced) {
        candidates.subtract(host_.neighbors(image_[q]));
      }
    }
    const int need = pattern_.degree(pv);
    bool found = false;
    candidates.for_each([&](Vertex hv) {
      if (found || host_.degree(hv) < need) return;
      image_[pv] = hv;
      used_.set(hv);
      if (extend(depth + 1)) {
        found = true;
        return;
      }
      used_.reset(hv);
      image_[pv] = -1;
    });
    return found;
  }

  const Graph& host_;
  const Graph& pattern_;
  Containment mode_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  VertexSet used_;
};

}  // namespace detail

/// Finds an embedding of `pattern` into `host`; result[p] is the host vertex
/// for pattern vertex p. Search order is fixed, so the answer is deterministic.
inline std::optional<std::vector<Vertex>> contains_subgraph(
    const Graph& host, const Graph& pattern, Containment mode = Containment::kSubgraph) {
  return detail::Embedder(host, pattern, mode).run();
}

inline bool verify_embedding(const Graph& host, const Graph& pattern,
                             const std::vector<Vertex>& image, Containment mode) {
  if (static_cast<int>(image.size()) != pattern.order()) return false;
  std::vector<bool> hit(host.order(), false);
  for (Vertex h : image) {
    if (h < 0 || h >= host.order() || hit[h]) return false;
    hit[h] = true;
  }
  for (Vertex a = 0; a < pattern.order(); ++a) {
    for (Vertex b = a + 1; b < pattern.order(); ++b) {
      const bool pe = pattern.adjacent(a, b);
      const bool he = host.adjacent(image[a], image[b]);
      if (pe && !he) return false;
      if (mode == Containment::kInduced && !pe && he) return false;
    }
  }
  return true;
}

}  // namespace trigraph
