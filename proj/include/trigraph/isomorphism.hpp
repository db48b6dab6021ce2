#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "trigraph/graph.hpp"

namespace trigraph {

/// Isomorphism-invariant key: the order plus the upper-triangle adjacency
/// bits of the canonically relabeled graph.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint64_t> bits;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// position[v] is the canonical label of vertex v.
  std::vector<Vertex> position;
};

/// Bijection a -> b that carries edges to edges and non-edges to non-edges,
/// or empty when the graphs are not isomorphic.
struct IsoCertificate {
  std::optional<std::vector<Vertex>> mapping;

  explicit operator bool() const { return mapping.has_value(); }
};

namespace detail {

// One round of colour refinement until the partition is equitable. Colours
// are ranks of (own colour, neighbour colour counts), so the result depends
// only on the structure, never on labels.
inline void refine(const Graph& g, std::vector<int>& colors) {
  const int n = g.order();
  int cells = n == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<std::vector<int>> keys(n);
  std::vector<int> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.assign(cells + 1, 0);
      key[0] = colors[v];
      g.neighbors(v).for_each([&](Vertex u) { ++key[1 + colors[u]]; });
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keys[a] < keys[b]; });
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next;
      colors[order[i]] = next;
    }
    const int new_cells = n == 0 ? 0 : next + 1;
    if (new_cells == cells) return;
    cells = new_cells;
  }
}

inline std::vector<std::uint64_t> encode(const Graph& g, const std::vector<int>& position) {
  const int n = g.order();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[position[v]] = v;
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint64_t> bits((nbits + 63) / 64, 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (g.adjacent(at[i], at[j])) bits[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
  }
  return bits;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  CanonicalLabeling run() {
    std::vector<int> colors(g_.order(), 0);
    std::vector<Vertex> prefix;
    search(colors, prefix);
    if (g_.order() == 0) best_perm_.clear();
    return {CanonicalForm{g_.order(), best_code_}, best_perm_};
  }

 private:
  void search(std::vector<int> colors, std::vector<Vertex>& prefix) {
    refine(g_, colors);
    const int n = g_.order();
    std::vector<int> cell_size(n, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) {
        target = c;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex child = 0; child < n; ++child) {
      if (colors[child] != target) continue;
      if (!explored.empty() && same_orbit_as_any(child, explored, prefix)) continue;
      std::vector<int> next(colors);
      for (int& c : next) {
        if (c > target) ++c;
      }
      for (Vertex v = 0; v < n; ++v) {
        if (colors[v] == target && v != child) next[v] = target + 1;
      }
      prefix.push_back(child);
      search(std::move(next), prefix);
      prefix.pop_back();
      explored.push_back(child);
    }
  }

  void leaf(const std::vector<int>& position) {
    auto code = encode(g_, position);
    if (!have_best_ || code < best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_perm_ = position;
    } else if (code == best_code_) {
      // Equal codes give an automorphism: best(gamma(v)) = leaf(v).
      const int n = g_.order();
      std::vector<Vertex> best_inv(n);
      for (Vertex v = 0; v < n; ++v) best_inv[best_perm_[v]] = v;
      std::vector<Vertex> gamma(n);
      bool identity = true;
      for (Vertex v = 0; v < n; ++v) {
        gamma[v] = best_inv[position[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbits of the group generated by known automorphisms fixing `prefix`.
  bool same_orbit_as_any(Vertex child, const std::vector<Vertex>& explored,
                         const std::vector<Vertex>& prefix) const {
    const int n = g_.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n; ++v) parent[find(v)] = find(gamma[v]);
    }
    const int root = find(child);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return find(e) == root; });
  }

  const Graph& g_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_code_;
  std::vector<Vertex> best_perm_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

/// The canonical representative of g's isomorphism class.
inline Graph canonical_graph(const Graph& g) {
  auto lab = canonical_labeling(g);
  return permute(g, lab.position);
}

inline IsoCertificate is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return {};
  if (degree_sequence(a) != degree_sequence(b)) return {};
  auto la = canonical_labeling(a);
  auto lb = canonical_labeling(b);
  if (la.form != lb.form) return {};
  std::vector<Vertex> b_at(b.order());
  for (Vertex v = 0; v < b.order(); ++v) b_at[lb.position[v]] = v;
  std::vector<Vertex> mapping(a.order());
  for (Vertex v = 0; v < a.order(); ++v) mapping[v] = b_at[la.position[v]];
  return IsoCertificate{std::move(mapping)};
}

/// Checks that `mapping` is an isomorphism a -> b.
inline bool verify_isomorphism(const Graph& a, const Graph& b,
                               const std::vector<Vertex>& mapping) {
  if (a.order() != b.order() || static_cast<int>(mapping.size()) != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (Vertex m : mapping) {
    if (m < 0 || m >= b.order() || hit[m]) return false;
    hit[m] = true;
  }
  for (Vertex x = 0; x < a.order(); ++x) {
    for (Vertex y = x + 1; y < a.order(); ++y) {
      if (a.adjacent(x, y) != b.adjacent(mapping[x], mapping[y])) return false;
    }
  }
  return true;
}

/// Compact printable key, handy for logs and maps.
inline std::string to_string(const CanonicalForm& f) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(f.order) + ":";
  for (auto w : f.bits) {
    for (int s = 60; s >= 0; s -= 4) out.push_back(kHex[(w >> s) & 0xF]);
  }
  return out;
}

}  // namespace trigraph
