#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trigraph/graph.hpp"
#include "trigraph/triangle_graph.hpp"

namespace trigraph {

// --- Edge lists -------------------------------------------------------------
//
// One edge per line as two whitespace-separated tokens. A line with a single
// token declares a vertex without adding an edge, so isolated vertices
// survive a round trip. '#' starts a comment; blank lines are skipped.
// Tokens are arbitrary strings, numbered densely in order of first
// appearance.

struct EdgeListGraph {
  Graph graph;
  /// names[v] is the token that became vertex v.
  std::vector<std::string> names;
};

inline EdgeListGraph parse_edge_list(const std::string& text) {
  std::map<std::string, Vertex> ids;
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::map<std::pair<Vertex, Vertex>, int> first_line;
  auto id_of = [&](const std::string& tok) {
    auto [it, fresh] = ids.emplace(tok, static_cast<Vertex>(names.size()));
    if (fresh) names.push_back(tok);
    return it->second;
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() == 1) {
      id_of(tok[0]);
      continue;
    }
    if (tok.size() != 2) throw PreconditionError(where + "expected two vertex tokens, got " + std::to_string(tok.size()));
    if (tok[0] == tok[1]) throw PreconditionError(where + "self-loop at '" + tok[0] + "'");
    const Vertex a = id_of(tok[0]);
    const Vertex b = id_of(tok[1]);
    const auto key = std::minmax(a, b);
    if (auto [it, fresh] = first_line.emplace(key, lineno); !fresh) {
      throw PreconditionError(where + "repeated edge " + tok[0] + " " + tok[1] + " (first on line " +
                              std::to_string(it->second) + ")");
    }
    edges.emplace_back(a, b);
  }
  Graph g(static_cast<int>(names.size()));
  for (auto [a, b] : edges) g.add_edge(a, b);
  return {std::move(g), std::move(names)};
}

/// Emits g so that parse_edge_list returns exactly g (same labels): any
/// vertex that would otherwise appear out of order is declared first.
inline std::string format_edge_list(const Graph& g) {
  std::string out;
  Vertex next = 0;
  auto declare_below = [&](Vertex limit) {
    for (; next < limit; ++next) out += std::to_string(next) + '\n';
  };
  for (const Edge& e : g.edges()) {
    if (e.u >= next) declare_below(e.u);
    // The line introduces u (if new) and then v; both must be next in turn.
    const Vertex fresh_limit = e.u == next ? next + 1 : next;
    if (e.v > fresh_limit) declare_below(e.v);
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
    next = std::max(next, e.v + 1);
  }
  declare_below(g.order());
  return out;
}

// --- graph6 -----------------------------------------------------------------

inline constexpr int kMaxGraph6Order = 62;

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw PreconditionError("graph6 output supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

/// Parses one graph6 string (an optional ">>graph6<<" prefix is allowed).
/// Errors name the 0-based byte position.
inline Graph parse_graph6(std::string_view s) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t offset = 0;
  if (s.substr(0, kHeader.size()) == kHeader) offset = kHeader.size();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.size() <= offset) throw PreconditionError("graph6: empty input");
  auto value = [&](std::size_t pos) {
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) {
      throw PreconditionError("graph6: byte " + std::to_string(pos) + " (" + std::to_string(c) +
                              ") is outside 63..126");
    }
    return c - 63;
  };
  const int n = value(offset);
  if (n == 63) throw PreconditionError("graph6: orders above 62 are not supported (byte " + std::to_string(offset) + ")");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (pairs + 5) / 6;
  const std::size_t have = s.size() - offset - 1;
  if (have != need) {
    throw PreconditionError("graph6: expected " + std::to_string(need) + " data bytes after byte " +
                            std::to_string(offset) + ", found " + std::to_string(have));
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t pos = offset + 1 + k / 6;
      if ((value(pos) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < need * 6; ++k) {
    const std::size_t pos = offset + 1 + k / 6;
    if ((value(pos) >> (5 - k % 6)) & 1) {
      throw PreconditionError("graph6: nonzero padding bit in byte " + std::to_string(pos));
    }
  }
  return g;
}

/// One entry per non-blank line of a graph6 stream; a bad line keeps its
/// error and does not stop the rest.
struct Graph6Entry {
  int line = 0;
  std::optional<Graph> graph;
  std::string error;
};

inline std::vector<Graph6Entry> parse_graph6_stream(const std::string& text) {
  std::vector<Graph6Entry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph6Entry e;
    e.line = lineno;
    try {
      e.graph = parse_graph6(line);
    } catch (const PreconditionError& err) {
      e.error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

// --- DOT --------------------------------------------------------------------

/// T(G) with each vertex labelled by its triangle's sorted vertex triple.
inline std::string tgraph_to_dot(const TriangleGraph& tg) {
  std::string out = "graph T {\n";
  for (int t = 0; t < tg.triangle_count(); ++t) {
    const auto& v = tg.triangles[t].v;
    out += "  t" + std::to_string(t) + " [label=\"" + std::to_string(v[0]) + "," +
           std::to_string(v[1]) + "," + std::to_string(v[2]) + "\"];\n";
  }
  for (const Edge& e : tg.derived.edges()) {
    out += "  t" + std::to_string(e.u) + " -- t" + std::to_string(e.v) + ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string graph_to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace trigraph
