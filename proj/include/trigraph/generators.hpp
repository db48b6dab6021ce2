#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trigraph/graph.hpp"
#include "trigraph/isomorphism.hpp"
#include "trigraph/transforms.hpp"
#include "trigraph/triangle_graph.hpp"

namespace trigraph {

// --- Named graphs -----------------------------------------------------------

inline Graph complete_graph(int n) {
  if (n < 0) throw PreconditionError("complete graph needs n >= 0");
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

inline Graph empty_graph(int n) {
  if (n < 0) throw PreconditionError("empty graph needs n >= 0");
  return Graph(n);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  if (n < 1) throw PreconditionError("path needs n >= 1");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// K_1 joined with C_n; the hub is vertex 0, the rim 1..n in cyclic order.
inline Graph wheel_graph(int n) {
  if (n < 3) throw PreconditionError("wheel needs n >= 3");
  return join(Graph(1), cycle_graph(n));
}

/// K_1 joined with P_n; the apex is vertex 0.
inline Graph fan_graph(int n) {
  if (n < 1) throw PreconditionError("fan needs n >= 1");
  return join(Graph(1), path_graph(n));
}

/// C_n^k: i ~ j when their cyclic distance is between 1 and k.
inline Graph cycle_power(int n, int k) {
  if (n < 3 || k < 1) throw PreconditionError("cycle power needs n >= 3 and k >= 1");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const int d = std::min(j - i, n - (j - i));
      if (d <= k) g.add_edge(i, j);
    }
  }
  return g;
}

enum class RemovedPattern { kK3, kP4 };

/// K_n minus the edges of a K_3 on {n-3, n-2, n-1} or a P_4 along n-4..n-1.
inline Graph complete_minus(int n, RemovedPattern pattern) {
  const int need = pattern == RemovedPattern::kK3 ? 3 : 4;
  if (n < need) throw PreconditionError("K_n minus a pattern needs n >= pattern order");
  Graph g = complete_graph(n);
  if (pattern == RemovedPattern::kK3) {
    g.remove_edge(n - 3, n - 2);
    g.remove_edge(n - 2, n - 1);
    g.remove_edge(n - 3, n - 1);
  } else {
    g.remove_edge(n - 4, n - 3);
    g.remove_edge(n - 3, n - 2);
    g.remove_edge(n - 2, n - 1);
  }
  return g;
}

/// The four supplementary 8-vertex graphs. Labels: the cycle vertices
/// v_1..v_k become 0..k-1, then the attached u_i follow in index order.
inline Graph supplementary_graph(char type) {
  struct Layout {
    int k;
    std::vector<std::pair<int, int>> chords;  // 1-based v indices
    std::vector<int> attached;                // 1-based u indices
  };
  Layout layout;
  switch (type) {
    case 'A': layout = {4, {}, {1, 2, 3, 4}}; break;
    case 'B': layout = {5, {{3, 5}, {4, 1}}, {1, 2, 3}}; break;
    case 'C': layout = {6, {{2, 4}, {3, 5}, {4, 6}, {5, 1}}, {1, 2}}; break;
    case 'D': layout = {6, {{1, 3}, {2, 4}, {4, 6}, {5, 1}}, {1, 4}}; break;
    default: throw PreconditionError(std::string("unknown supplementary type '") + type + "'");
  }
  const int k = layout.k;
  auto v = [k](int i) { return ((i - 1) % k + k) % k; };
  Graph g(k + static_cast<int>(layout.attached.size()));
  for (int i = 1; i <= k; ++i) g.add_edge(v(i), v(i + 1));
  for (auto [a, b] : layout.chords) g.add_edge(v(a), v(b));
  for (std::size_t j = 0; j < layout.attached.size(); ++j) {
    const int i = layout.attached[j];
    const Vertex u = k + static_cast<Vertex>(j);
    for (int d : {-1, 0, 1}) g.add_edge(u, v(i + d));
  }
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// Textual names, e.g. "K5", "C6^2", "W4", "K6-P4", "S_A", "fan:4".
struct NamedGraphDesc {
  enum class Family { kComplete, kEmpty, kCycle, kPath, kWheel, kFan, kCyclePower,
                      kCompleteMinus, kSupplementary, kPetersen };
  Family family = Family::kComplete;
  int n = 0;
  int k = 0;
  RemovedPattern pattern = RemovedPattern::kK3;
  char type = 'A';
};

inline Graph make_named(const NamedGraphDesc& s) {
  using F = NamedGraphDesc::Family;
  switch (s.family) {
    case F::kComplete: return complete_graph(s.n);
    case F::kEmpty: return empty_graph(s.n);
    case F::kCycle: return cycle_graph(s.n);
    case F::kPath: return path_graph(s.n);
    case F::kWheel: return wheel_graph(s.n);
    case F::kFan: return fan_graph(s.n);
    case F::kCyclePower: return cycle_power(s.n, s.k);
    case F::kCompleteMinus: return complete_minus(s.n, s.pattern);
    case F::kSupplementary: return supplementary_graph(s.type);
    case F::kPetersen: return petersen_graph();
  }
  throw InternalError("unhandled family");
}

namespace detail {

inline int parse_count(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw PreconditionError("bad number in graph name '" + whole + "'");
  }
  if (text.size() > 4) throw PreconditionError("parameter too large in '" + whole + "'");
  return std::stoi(text);
}

}  // namespace detail

/// Accepted names: Kn, En (edgeless), Cn, Pn, Wn, Cn^k, Kn-K3, Kn-P4,
/// S_A..S_D, petersen, and the long forms complete:n, empty:n, cycle:n,
/// path:n, wheel:n, fan:n, power:n:k, minus:n:K3|P4, supplementary:X.
inline NamedGraphDesc parse_named(const std::string& name) {
  using F = NamedGraphDesc::Family;
  NamedGraphDesc s;
  auto fail = [&]() -> NamedGraphDesc { throw PreconditionError("unknown graph name '" + name + "'"); };
  if (name == "petersen") return {F::kPetersen};
  if (name.size() == 3 && name.rfind("S_", 0) == 0) {
    s.family = F::kSupplementary;
    s.type = name[2];
    return s;
  }
  if (auto colon = name.find(':'); colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    std::vector<std::string> args;
    std::string rest = name.substr(colon + 1);
    for (std::size_t pos; (pos = rest.find(':')) != std::string::npos; rest.erase(0, pos + 1)) {
      args.push_back(rest.substr(0, pos));
    }
    args.push_back(rest);
    const std::map<std::string, F> simple{{"complete", F::kComplete}, {"empty", F::kEmpty},
                                          {"cycle", F::kCycle},       {"path", F::kPath},
                                          {"wheel", F::kWheel},       {"fan", F::kFan}};
    if (auto it = simple.find(head); it != simple.end() && args.size() == 1) {
      s.family = it->second;
      s.n = detail::parse_count(args[0], name);
      return s;
    }
    if (head == "power" && args.size() == 2) {
      s.family = F::kCyclePower;
      s.n = detail::parse_count(args[0], name);
      s.k = detail::parse_count(args[1], name);
      return s;
    }
    if (head == "minus" && args.size() == 2 && (args[1] == "K3" || args[1] == "P4")) {
      s.family = F::kCompleteMinus;
      s.n = detail::parse_count(args[0], name);
      s.pattern = args[1] == "K3" ? RemovedPattern::kK3 : RemovedPattern::kP4;
      return s;
    }
    if (head == "supplementary" && args.size() == 1 && args[0].size() == 1) {
      s.family = F::kSupplementary;
      s.type = args[0][0];
      return s;
    }
    return fail();
  }
  if (name.size() < 2) return fail();
  const char lead = name[0];
  std::string body = name.substr(1);
  if (lead == 'K') {
    if (auto dash = body.find('-'); dash != std::string::npos) {
      const std::string pat = body.substr(dash + 1);
      if (pat != "K3" && pat != "P4") return fail();
      s.family = F::kCompleteMinus;
      s.n = detail::parse_count(body.substr(0, dash), name);
      s.pattern = pat == "K3" ? RemovedPattern::kK3 : RemovedPattern::kP4;
      return s;
    }
    s.family = F::kComplete;
  } else if (lead == 'C') {
    if (auto hat = body.find('^'); hat != std::string::npos) {
      s.family = F::kCyclePower;
      s.n = detail::parse_count(body.substr(0, hat), name);
      s.k = detail::parse_count(body.substr(hat + 1), name);
      return s;
    }
    s.family = F::kCycle;
  } else if (lead == 'P') {
    s.family = F::kPath;
  } else if (lead == 'W') {
    s.family = F::kWheel;
  } else if (lead == 'E') {
    s.family = F::kEmpty;
  } else {
    return fail();
  }
  s.n = detail::parse_count(body, name);
  return s;
}

inline Graph make_named(const std::string& name) { return make_named(parse_named(name)); }

// --- Forbidden families -----------------------------------------------------

/// One minimal forbidden graph, stored under its canonical labeling.
struct FamilyMember {
  Graph graph;
  CanonicalForm form;
  /// Name of the seed graph the member descends from.
  std::string base;
  int splits = 0;
  int sticks = 0;
  /// Hole length in T of the family the member belongs to.
  int hole = 0;
};

struct ForbiddenFamily {
  /// Target cycle length; 0 for a union over several lengths.
  int n = 0;
  /// Sorted by (order, size, canonical form).
  std::vector<FamilyMember> members;
  /// Distinct classes found from one weak split of K_5; only meaningful for n == 6.
  int k5_split_classes = 0;
};

namespace detail {

struct Seed {
  std::string name;
  Graph graph;
  int length;  // induced cycle length in T(graph) to split along
};

inline bool member_less(const FamilyMember& a, const FamilyMember& b) {
  if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
  if (a.graph.size() != b.graph.size()) return a.graph.size() < b.graph.size();
  return a.form < b.form;
}

// All graphs obtained from `g` by one weak split along any induced cycle of
// `length` triangles in T(g).
inline std::vector<Graph> one_weak_split(const Graph& g, int length) {
  const TriangleGraph tg = build_triangle_graph(g);
  std::vector<Graph> out;
  for_each_induced_cycle(tg.derived, length, [&](const std::vector<Vertex>& c) {
    const DesignatedCycle dc{c};
    for (const EdgeSplitStep& s : weak_splits(g, dc)) {
      out.push_back(edge_split(g, s.edge, s.apex, SplitMode::kWeak, dc).graph);
    }
    return true;
  });
  return out;
}

inline FamilyMember make_member(const Graph& g, std::string base, int splits, int sticks, int hole) {
  const CanonicalLabeling lab = canonical_labeling(g);
  return {permute(g, lab.position), lab.form, std::move(base), splits, sticks, hole};
}

// Every canonical class reachable from the seed by `splits` weak splits.
inline std::vector<FamilyMember> split_closure(const Seed& seed, int splits, int hole) {
  std::map<CanonicalForm, FamilyMember> layer;
  FamilyMember start = make_member(seed.graph, seed.name, 0, 0, hole);
  layer.emplace(start.form, start);
  for (int step = 0; step < splits; ++step) {
    std::map<CanonicalForm, FamilyMember> next;
    for (const auto& [form, m] : layer) {
      for (const Graph& h : one_weak_split(m.graph, seed.length + step)) {
        FamilyMember nm = make_member(h, seed.name, step + 1, 0, hole);
        next.emplace(nm.form, std::move(nm));
      }
    }
    layer = std::move(next);
  }
  std::vector<FamilyMember> out;
  for (auto& [form, m] : layer) out.push_back(std::move(m));
  return out;
}

inline std::vector<Seed> seeds_for(int n) {
  std::vector<Seed> seeds;
  if (n == 3) {
    seeds.push_back({"K4", complete_graph(4), 3});
    seeds.push_back({"K5-K3", complete_minus(5, RemovedPattern::kK3), 3});
    return seeds;
  }
  seeds.push_back({"W" + std::to_string(n), wheel_graph(n), n});
  for (int m = 5; m <= n; ++m) {
    seeds.push_back({"C" + std::to_string(m) + "^2", cycle_power(m, 2), m});
  }
  if (n >= 6) {
    seeds.push_back({"K6-K3", complete_minus(6, RemovedPattern::kK3), 6});
    seeds.push_back({"K6-P4", complete_minus(6, RemovedPattern::kP4), 6});
  }
  return seeds;
}

// Generates family(n) without any size pruning.
inline ForbiddenFamily generate_family(int n) {
  ForbiddenFamily fam;
  fam.n = n;
  std::map<CanonicalForm, FamilyMember> found;
  for (const Seed& seed : seeds_for(n)) {
    const auto layer = split_closure(seed, n - seed.length, n);
    if (n == 6 && seed.name == "C5^2") fam.k5_split_classes = static_cast<int>(layer.size());
    for (const auto& m : layer) found.emplace(m.form, m);
  }
  // Weak-stick closure; every stick removes a vertex, so this terminates.
  std::vector<CanonicalForm> frontier;
  for (const auto& [form, m] : found) frontier.push_back(form);
  while (!frontier.empty()) {
    std::vector<CanonicalForm> next;
    for (const CanonicalForm& form : frontier) {
      const FamilyMember m = found.at(form);
      for (const VertexStickStep& s : stick_pairs(m.graph, StickMode::kWeak)) {
        Graph h = vertex_stick(m.graph, s.u, s.v, StickMode::kWeak).graph;
        FamilyMember nm = make_member(h, m.base, m.splits, m.sticks + 1, n);
        if (found.emplace(nm.form, nm).second) next.push_back(nm.form);
      }
    }
    frontier = std::move(next);
  }
  for (auto& [form, m] : found) {
    const bool exception = n == 3 && m.base == "K5-K3";
    if (!exception && m.graph.size() != 2 * n) {
      throw InternalError("family member from " + m.base + " has " + std::to_string(m.graph.size()) +
                          " edges, expected " + std::to_string(2 * n));
    }
    const TriangleGraph tg = build_triangle_graph(m.graph);
    if (!find_designated_cycle(tg, n)) throw InternalError("family member from " + m.base + " lacks an induced C_n in T");
    fam.members.push_back(std::move(m));
  }
  std::sort(fam.members.begin(), fam.members.end(), member_less);
  return fam;
}

class FamilyCache {
 public:
  static FamilyCache& instance() {
    static FamilyCache cache;
    return cache;
  }

  const ForbiddenFamily& get(int n) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = families_.find(n); it != families_.end()) return it->second;
    }
    ForbiddenFamily fam = generate_family(n);
    std::lock_guard lock(mutex_);
    return families_.emplace(n, std::move(fam)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, ForbiddenFamily> families_;  // node-based: references stay valid
};

}  // namespace detail

/// Minimal forbidden subgraphs for an induced C_n in T(G), restricted to
/// members with at most host_vertex_bound vertices. Generation is cached
/// per n and shared between threads.
inline ForbiddenFamily forbidden_family(int n, int host_vertex_bound = std::numeric_limits<int>::max()) {
  if (n < 3) throw PreconditionError("forbidden family needs n >= 3");
  const ForbiddenFamily& full = detail::FamilyCache::instance().get(n);
  ForbiddenFamily out;
  out.n = n;
  out.k5_split_classes = full.k5_split_classes;
  for (const auto& m : full.members) {
    if (m.graph.order() <= host_vertex_bound) out.members.push_back(m);
  }
  return out;
}

/// Largest n whose family can embed in a host with `host_edges` edges:
/// every member of family(n) has 2n edges, apart from K_5-K_3 at n = 3.
inline int max_relevant_length(int host_edges) { return std::max(2, host_edges / 2); }

/// Union of family(n) over odd n >= 5 up to the edge bound; every member
/// also satisfies the split-parity rule of its seed.
inline ForbiddenFamily perfect_forbidden_family(int host_vertex_bound, int host_edge_bound) {
  ForbiddenFamily out;
  for (int n = 5; n <= max_relevant_length(host_edge_bound); n += 2) {
    for (auto& m : forbidden_family(n, host_vertex_bound).members) {
      if (m.base.size() > 1 && m.base[0] == 'C') {
        const int m_len = std::stoi(m.base.substr(1));
        if ((m_len + m.splits) % 2 == 0) throw InternalError("parity rule violated by " + m.base);
      }
      out.members.push_back(std::move(m));
    }
  }
  std::sort(out.members.begin(), out.members.end(), detail::member_less);
  return out;
}

// --- Small-graph corpus -----------------------------------------------------

/// Largest order the built-in enumerator handles.
inline constexpr int kMaxEnumerationOrder = 7;

/// One canonical representative per isomorphism class on 1..max_order
/// vertices, sorted by (order, size, canonical form). Order k classes are
/// grown from order k-1 classes by adding a vertex with every possible
/// neighbourhood.
inline std::vector<Graph> enumerate_small_graphs(int max_order, bool connected_only) {
  if (max_order > kMaxEnumerationOrder) {
    throw PreconditionError("built-in enumeration stops at order " +
                            std::to_string(kMaxEnumerationOrder) + "; ingest larger corpora as graph6");
  }
  std::vector<Graph> out;
  std::vector<Graph> layer;
  for (int n = 1; n <= max_order; ++n) {
    std::map<std::tuple<int, CanonicalForm>, Graph> next;
    if (n == 1) {
      next.emplace(std::tuple{0, canonical_form(Graph(1))}, Graph(1));
    } else {
      for (const Graph& g : layer) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
          Graph h(n);
          for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
          for (Vertex v = 0; v < n - 1; ++v) {
            if (mask & (std::uint32_t{1} << v)) h.add_edge(v, n - 1);
          }
          const CanonicalLabeling lab = canonical_labeling(h);
          std::tuple key{h.size(), lab.form};
          if (next.count(key)) continue;
          next.emplace(std::move(key), permute(h, lab.position));
        }
      }
    }
    layer.clear();
    for (auto& [key, g] : next) {
      layer.push_back(g);
      if (!connected_only || is_connected(g)) out.push_back(g);
    }
  }
  return out;
}

}  // namespace trigraph
