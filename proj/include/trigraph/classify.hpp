#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigraph/cycles.hpp"
#include "trigraph/generators.hpp"
#include "trigraph/graph.hpp"
#include "trigraph/isomorphism.hpp"
#include "trigraph/subgraph.hpp"
#include "trigraph/transforms.hpp"
#include "trigraph/triangle_graph.hpp"

namespace trigraph {

// --- Is T(G) a cycle? -------------------------------------------------------

struct DirectCycleVerdict {
  /// Cycle length when T(G) is a cycle.
  std::optional<int> length;
  std::string reason;
};

inline DirectCycleVerdict tgraph_is_cycle_direct(const Graph& g) {
  const TriangleGraph tg = build_triangle_graph(g);
  const Graph& t = tg.derived;
  if (t.order() < 3) return {std::nullopt, "fewer than 3 triangles"};
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) != 2) {
      return {std::nullopt, "not 2-regular: triangle " + to_string(tg.triangles[v]) + " has " +
                                std::to_string(t.degree(v)) + " neighbours in T"};
    }
  }
  if (!is_connected(t)) return {std::nullopt, "disconnected"};
  return {t.order(), ""};
}

/// Hypothesis of the cycle characterization: no isolated vertex
/// and every edge in a triangle. Returns the first violation.
inline std::optional<std::string> cycle_hypothesis_violation(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return "vertex " + std::to_string(v) + " is isolated";
  }
  const TriangleGraph tg = build_triangle_graph(g);
  for (const auto& [e, tris] : tg.edge_incidence) {
    if (tris.empty()) return "edge " + to_string(e) + " lies in no triangle";
  }
  return std::nullopt;
}

/// Irreducible graphs whose triangle graph is a cycle.
enum class BaseCase { kNone, kK5MinusK3, kWheel4, kCyclePower, kSupplementary };

struct CycleCertificate {
  enum class Verdict { kCycle, kNotCycle, kHypothesisViolation };
  Verdict verdict = Verdict::kNotCycle;
  int length = 0;
  std::string reason;
  BaseCase base_case = BaseCase::kNone;
  /// m for C_m^2, the letter for supplementary bases.
  int base_parameter = 0;
  Graph base{0};
  /// Inverse steps taking the input to `base`.
  TransformLog reduction;
  int splits = 0;
  int sticks = 0;

  bool is_cycle() const { return verdict == Verdict::kCycle; }
  /// Cycle length of T(base).
  int base_length() const { return length - splits; }
  /// T(G) is an odd hole.
  bool odd_hole() const { return is_cycle() && length >= 5 && length % 2 == 1; }
  /// The split-parity rule: odd splits from W_4, supplementary or even
  /// C_m^2 bases, even splits from odd C_m^2 bases.
  bool parity_rule_predicts_odd_hole() const {
    switch (base_case) {
      case BaseCase::kWheel4:
      case BaseCase::kSupplementary: return splits % 2 == 1;
      case BaseCase::kCyclePower: return (base_parameter + splits) % 2 == 1;
      default: return false;
    }
  }
  bool derived() const { return !reduction.steps.empty(); }
};

inline std::string describe(const CycleCertificate& c) {
  switch (c.base_case) {
    case BaseCase::kNone: return "none";
    case BaseCase::kK5MinusK3: return "K5-K3";
    case BaseCase::kWheel4: return "W4";
    case BaseCase::kCyclePower: return "C" + std::to_string(c.base_parameter) + "^2";
    case BaseCase::kSupplementary: return std::string("S_") + static_cast<char>(c.base_parameter);
  }
  return "?";
}

namespace detail {

struct BaseMatch {
  BaseCase kind = BaseCase::kNone;
  int parameter = 0;
  int length = 0;
};

inline BaseMatch match_irreducible(const Graph& b) {
  if (is_isomorphic(b, complete_minus(5, RemovedPattern::kK3))) return {BaseCase::kK5MinusK3, 0, 3};
  if (is_isomorphic(b, wheel_graph(4))) return {BaseCase::kWheel4, 0, 4};
  if (b.order() >= 7 && is_isomorphic(b, cycle_power(b.order(), 2))) {
    return {BaseCase::kCyclePower, b.order(), b.order()};
  }
  for (char x : {'A', 'B', 'C', 'D'}) {
    if (is_isomorphic(b, supplementary_graph(x))) return {BaseCase::kSupplementary, x, 8};
  }
  return {};
}

}  // namespace detail

/// Decides whether T(G) is a cycle by reducing G and recognising the base,
/// then checks the verdict against the direct test. A disagreement throws
/// InternalError carrying both verdicts.
inline CycleCertificate characterize_cycle(const Graph& g) {
  CycleCertificate cert;
  if (auto why = cycle_hypothesis_violation(g)) {
    cert.verdict = CycleCertificate::Verdict::kHypothesisViolation;
    cert.reason = *why;
    return cert;
  }
  Reduction red = detail::reduce_greedily(g);
  cert.base = red.base;
  cert.reduction = std::move(red.log);
  for (const auto& s : cert.reduction.steps) {
    (std::holds_alternative<InverseEdgeSplitStep>(s) ? cert.splits : cert.sticks) += 1;
  }
  const detail::BaseMatch match = detail::match_irreducible(cert.base);
  cert.base_case = match.kind;
  cert.base_parameter = match.parameter;
  if (match.kind != BaseCase::kNone) {
    cert.verdict = CycleCertificate::Verdict::kCycle;
    cert.length = match.length + cert.splits;
  } else {
    cert.verdict = CycleCertificate::Verdict::kNotCycle;
    cert.reason = "irreducible form is not one of the cycle bases";
  }
  const DirectCycleVerdict direct = tgraph_is_cycle_direct(g);
  const bool agree = direct.length ? cert.is_cycle() && *direct.length == cert.length : !cert.is_cycle();
  if (!agree) {
    throw InternalError("cycle routes disagree: direct says " +
                        (direct.length ? "C_" + std::to_string(*direct.length) : direct.reason) +
                        ", reduction says " +
                        (cert.is_cycle() ? "C_" + std::to_string(cert.length) : cert.reason));
  }
  if (!cert.is_cycle()) cert.reason = direct.reason;
  return cert;
}

// --- Path-neighbourhood graphs ----------------------------------------------

struct PathNeighborhoodResult {
  enum class Case { kNotApplicable, kNotCycle, kCyclePower, kSupplementary, kSplitsOnly };
  Case kind = Case::kNotApplicable;
  /// A vertex whose neighbourhood is not a path on two or more vertices.
  Vertex offending = -1;
  std::optional<CycleCertificate> certificate;
};

inline PathNeighborhoodResult classify_png_cycle(const Graph& g) {
  using Case = PathNeighborhoodResult::Case;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2 || neighborhood_shape(g, v) != NeighborhoodShape::kPath) {
      return {Case::kNotApplicable, v, std::nullopt};
    }
  }
  PathNeighborhoodResult out;
  if (!tgraph_is_cycle_direct(g).length) {
    out.kind = Case::kNotCycle;
    return out;
  }
  CycleCertificate cert = characterize_cycle(g);
  const bool good_base =
      cert.base_case == BaseCase::kCyclePower || cert.base_case == BaseCase::kSupplementary;
  if (!good_base || cert.sticks != 0) {
    throw InternalError("path-neighbourhood graph reduced to " + describe(cert) + " with " +
                        std::to_string(cert.sticks) + " inverse sticks");
  }
  if (cert.splits > 0) {
    out.kind = Case::kSplitsOnly;
  } else {
    out.kind = cert.base_case == BaseCase::kCyclePower ? Case::kCyclePower : Case::kSupplementary;
  }
  out.certificate = std::move(cert);
  return out;
}

// --- C_n-freeness -----------------------------------------------------------

/// A forbidden-family member found inside the host.
struct FamilyHit {
  FamilyMember member;
  /// member vertex -> host vertex.
  std::vector<Vertex> embedding;
};

/// Verdict from the two routes. `holds` means the property holds (free,
/// tree, chordal, perfect); absent when a route was skipped or undefined.
struct DualVerdict {
  std::optional<bool> direct;
  std::optional<bool> characterization;
  /// Direct-route witness: T(G) vertices of an offending induced cycle.
  std::vector<Vertex> hole;
  std::optional<FamilyHit> hit;
  std::string note;

  bool agree() const { return !direct || !characterization || *direct == *characterization; }
  std::optional<bool> verdict() const { return direct ? direct : characterization; }
};

struct Routes {
  bool direct = true;
  bool characterization = true;
};

namespace detail {

inline std::optional<FamilyHit> first_hit(const Graph& g, const std::vector<FamilyMember>& members) {
  for (const auto& m : members) {
    if (m.graph.size() > g.size()) continue;
    if (auto emb = contains_subgraph(g, m.graph)) return FamilyHit{m, *emb};
  }
  return std::nullopt;
}

inline std::vector<FamilyMember> families_between(int lo, int hi, const Graph& g) {
  std::vector<FamilyMember> out;
  for (int n = lo; n <= hi; ++n) {
    for (auto& m : forbidden_family(n, g.order()).members) out.push_back(std::move(m));
  }
  return out;
}

inline void fatal_if_disagree(const DualVerdict& v, const std::string& what) {
  if (v.agree()) return;
  std::string detail = what + " routes disagree: direct " + (*v.direct ? "yes" : "no") +
                       ", characterization " + (*v.characterization ? "yes" : "no");
  if (!v.hole.empty()) {
    detail += "; hole in T:";
    for (Vertex t : v.hole) detail += ' ' + std::to_string(t);
  }
  if (v.hit) detail += "; contains " + v.hit->member.base;
  throw InternalError(detail);
}

}  // namespace detail

/// Does T(G) avoid an induced C_n? Route 1 searches T(G); route 2 looks for
/// members of the forbidden family as (non-induced) subgraphs.
inline DualVerdict tgraph_cn_free(const Graph& g, int n, Routes routes = {}) {
  if (n < 3) throw PreconditionError("cycle length must be at least 3");
  DualVerdict out;
  if (routes.direct) {
    const TriangleGraph tg = build_triangle_graph(g);
    auto cyc = find_designated_cycle(tg, n);
    out.direct = !cyc.has_value();
    if (cyc) out.hole = cyc->triangle_indices;
  }
  if (routes.characterization) {
    out.hit = detail::first_hit(g, forbidden_family(n, g.order()).members);
    out.characterization = !out.hit.has_value();
  }
  detail::fatal_if_disagree(out, "C_" + std::to_string(n) + "-free");
  return out;
}

// --- Tree / chordal / perfect -----------------------------------------------

struct ClassReport {
  int triangles = 0;
  /// Only meaningful when triangles > 0.
  bool triangle_connected = false;
  DualVerdict tree;
  DualVerdict chordal;
  DualVerdict perfect;

  /// tree => chordal => perfect, wherever the verdicts exist.
  bool hierarchy_holds() const {
    const auto t = tree.verdict();
    const auto c = chordal.verdict();
    const auto p = perfect.verdict();
    if (t && c && *t && !*c) return false;
    if (c && p && *c && !*p) return false;
    return true;
  }
};

inline ClassReport tgraph_class(const Graph& g, Routes routes = {}) {
  ClassReport r;
  const TriangleGraph tg = build_triangle_graph(g);
  const Graph& t = tg.derived;
  r.triangles = tg.triangle_count();
  const int top = max_relevant_length(g.size());

  if (r.triangles == 0) {
    r.tree.note = "no triangles; tree verdict undefined";
  } else {
    r.triangle_connected = is_triangle_connected(g).connected;
    if (routes.direct) {
      r.tree.direct = is_connected(t) && t.size() == t.order() - 1;
      if (!*r.tree.direct) {
        if (auto cyc = detail::first_induced_cycle(t, 3, t.order(), [](int) { return true; })) {
          r.tree.hole = *cyc;
        }
      }
    }
    if (routes.characterization) {
      if (r.triangle_connected) {
        r.tree.hit = detail::first_hit(g, detail::families_between(3, top, g));
        r.tree.characterization = !r.tree.hit.has_value();
      } else {
        r.tree.characterization = false;
        r.tree.note = "not triangle-connected";
      }
    }
    detail::fatal_if_disagree(r.tree, "tree");
  }

  if (routes.direct) {
    auto hole = find_hole(t);
    r.chordal.direct = !hole.has_value();
    if (hole) r.chordal.hole = *hole;
    auto odd = find_odd_hole(t);
    r.perfect.direct = !odd.has_value();
    if (odd) r.perfect.hole = *odd;
  }
  if (routes.characterization) {
    r.chordal.hit = detail::first_hit(g, detail::families_between(4, top, g));
    r.chordal.characterization = !r.chordal.hit.has_value();
    r.perfect.hit = detail::first_hit(g, perfect_forbidden_family(g.order(), g.size()).members);
    r.perfect.characterization = !r.perfect.hit.has_value();
  }
  detail::fatal_if_disagree(r.chordal, "chordal");
  detail::fatal_if_disagree(r.perfect, "perfect");
  return r;
}

// --- Structural premise for perfection --------------------------------------

/// Two non-adjacent vertices joined to an edge plus an isolated vertex
/// (5 vertices, 7 edges). Triangle graphs never contain it induced.
inline Graph premise_pattern() {
  Graph p(5);
  for (Vertex a : {0, 1}) {
    for (Vertex b : {2, 3, 4}) p.add_edge(a, b);
  }
  p.add_edge(2, 4);
  return p;
}

/// An induced copy of premise_pattern() in T, if any.
inline std::optional<std::vector<Vertex>> premise_violation(const Graph& t) {
  static const Graph pattern = premise_pattern();
  return contains_subgraph(t, pattern, Containment::kInduced);
}

}  // namespace trigraph
