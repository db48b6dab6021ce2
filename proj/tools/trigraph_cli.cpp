// Command-line front end for the trigraph library.
//
// Exit codes: 0 success, 1 survey found violations, 2 bad input or
// precondition failure, 3 internal consistency failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigraph/trigraph.hpp"

namespace {

using json = nlohmann::json;
using namespace trigraph;

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_graph6_path(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  return ext == ".g6" || ext == ".graph6";
}

/// "@name" builds a named graph; "-" reads stdin; anything else is a file.
Graph load_graph(const std::string& source, const std::string& format) {
  if (!source.empty() && source[0] == '@') return make_named(source.substr(1));
  const std::string text = read_text(source);
  const bool g6 = format == "graph6" || (format == "auto" && looks_like_graph6_path(source));
  if (!g6) return parse_edge_list(text).graph;
  const auto entries = parse_graph6_stream(text);
  if (entries.empty()) throw PreconditionError("'" + source + "' holds no graph");
  if (entries.size() > 1) {
    throw PreconditionError("'" + source + "' holds " + std::to_string(entries.size()) +
                            " graphs; this command takes one");
  }
  if (!entries[0].graph) throw PreconditionError("line " + std::to_string(entries[0].line) + ": " + entries[0].error);
  return *entries[0].graph;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json graph_json(const Graph& g) { return {{"order", g.order()}, {"edges", edges_json(g.edges())}}; }

std::string render_graph(const Graph& g, const std::string& to) {
  if (to == "edge-list") return format_edge_list(g);
  if (to == "graph6") return to_graph6(g) + "\n";
  if (to == "dot") return graph_to_dot(g);
  if (to == "json") return graph_json(g).dump(2) + "\n";
  throw PreconditionError("unknown output format '" + to + "'");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

std::string yes_no(std::optional<bool> v) {
  if (!v) return "n/a";
  return *v ? "yes" : "no";
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

json verdict_json(const DualVerdict& v) {
  json out;
  out["direct"] = v.direct ? json(*v.direct) : json(nullptr);
  out["characterization"] = v.characterization ? json(*v.characterization) : json(nullptr);
  out["agree"] = v.agree();
  if (!v.hole.empty()) out["hole"] = v.hole;
  if (v.hit) {
    out["forbidden_member"] = {{"base", v.hit->member.base},
                               {"splits", v.hit->member.splits},
                               {"sticks", v.hit->member.sticks},
                               {"graph6", to_graph6(v.hit->member.graph)},
                               {"embedding", v.hit->embedding}};
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

std::string verdict_text(const std::string& name, const DualVerdict& v, const TriangleGraph& tg) {
  std::string s = name + ": " + yes_no(v.verdict()) + " (direct " + yes_no(v.direct) + ", characterization " +
                  yes_no(v.characterization) + ")";
  if (!v.hole.empty()) {
    s += "\n  induced cycle in T:";
    for (Vertex t : v.hole) s += " " + to_string(tg.triangles[t]);
  }
  if (v.hit) {
    s += "\n  contains " + v.hit->member.base + " + " + std::to_string(v.hit->member.splits) + " splits, " +
         std::to_string(v.hit->member.sticks) + " sticks (" + to_graph6(v.hit->member.graph) +
         ") at vertices " + vertex_list(v.hit->embedding);
  }
  if (!v.note.empty()) s += "\n  note: " + v.note;
  return s + "\n";
}

json certificate_json(const CycleCertificate& c) {
  json out;
  switch (c.verdict) {
    case CycleCertificate::Verdict::kCycle: out["verdict"] = "cycle"; break;
    case CycleCertificate::Verdict::kNotCycle: out["verdict"] = "not_cycle"; break;
    case CycleCertificate::Verdict::kHypothesisViolation: out["verdict"] = "hypothesis_violation"; break;
  }
  if (c.is_cycle()) {
    out["length"] = c.length;
    out["base"] = describe(c);
    out["splits"] = c.splits;
    out["sticks"] = c.sticks;
    out["odd_hole"] = c.odd_hole();
    std::vector<std::string> lines;
    for (const auto& s : c.reduction.steps) lines.push_back(to_string(s));
    out["reduction"] = lines;
  } else {
    out["reason"] = c.reason;
  }
  return out;
}

std::string certificate_text(const CycleCertificate& c) {
  if (c.verdict == CycleCertificate::Verdict::kHypothesisViolation) {
    return "cycle: hypothesis not met (" + c.reason + ")\n";
  }
  if (!c.is_cycle()) return "cycle: no (" + c.reason + ")\n";
  std::string s = "cycle: yes, T = C_" + std::to_string(c.length) + "; base " + describe(c) + " after " +
                  std::to_string(c.splits) + " inverse splits and " + std::to_string(c.sticks) +
                  " inverse sticks; odd hole " + (c.odd_hole() ? "yes" : "no") + "\n";
  for (const auto& step : c.reduction.steps) s += "  " + to_string(step) + "\n";
  return s;
}

json clique_json(const TypedClique& c) {
  json out;
  out["kind"] = c.kind == TypedClique::Kind::kA ? "A" : "B";
  if (c.kind == TypedClique::Kind::kA) {
    out["fixed_edge"] = {c.fixed_edge.u, c.fixed_edge.v};
  } else {
    out["k4"] = c.k4;
  }
  out["members"] = c.members;
  return out;
}

json tuza_json(const TuzaReport& r) {
  json cover = json::array();
  for (const auto& c : r.cover_witness) cover.push_back(clique_json(c));
  return {{"nu", r.nu},
          {"tau", r.tau},
          {"theta", r.theta},
          {"packing_witness", r.packing_witness},
          {"transversal_witness", edges_json(r.transversal_witness)},
          {"cover_witness", cover},
          {"constructed_transversal", edges_json(r.constructed_transversal)},
          {"tgraph_perfect", r.tgraph_perfect},
          {"bound_2x", r.bound_2x},
          {"equality", r.equality},
          {"used_fallback", r.used_fallback}};
}

std::vector<CorpusEntry> builtin_corpus(int max_order, bool connected_only) {
  std::vector<CorpusEntry> out;
  int i = 0;
  for (Graph& g : enumerate_small_graphs(max_order, connected_only)) {
    out.push_back({"#" + std::to_string(i++), std::move(g), ""});
  }
  return out;
}

std::vector<CorpusEntry> graph6_corpus(const std::string& path) {
  std::vector<CorpusEntry> out;
  for (auto& e : parse_graph6_stream(read_text(path))) {
    out.push_back({"line" + std::to_string(e.line), std::move(e.graph), e.error});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-graph analysis: T(G), transformations, classification, packing and covering"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "auto";
  app.add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
  std::string output;
  app.add_option("-o,--output", output, "Write the result here instead of stdout");

  // generate
  auto* gen = app.add_subcommand("generate", "Build a named graph");
  std::string family;
  std::vector<std::string> params;
  std::string gen_to = "edge-list";
  gen->add_option("family", family, "Name such as K5, W4, C7^2, K6-P4, S_A, or a family like wheel")->required();
  gen->add_option("params", params, "Family parameters, e.g. 'wheel 5' or 'power 7 2'");
  gen->add_option("--to", gen_to)->check(CLI::IsMember({"edge-list", "graph6", "dot", "json"}));

  // tgraph
  auto* tgc = app.add_subcommand("tgraph", "Print T(G)");
  std::string tg_in;
  bool tg_dot = false;
  bool tg_json = false;
  tgc->add_option("input", tg_in, "Graph file, '-' for stdin, or @name")->required();
  tgc->add_flag("--dot", tg_dot);
  tgc->add_flag("--json", tg_json);

  // classify
  auto* cls = app.add_subcommand("classify", "Classify T(G)");
  std::string cls_in;
  bool want_tree = false, want_chordal = false, want_perfect = false, want_cycle = false, cls_json = false;
  int cn = 0;
  std::string route = "both";
  cls->add_option("input", cls_in)->required();
  cls->add_flag("--tree", want_tree);
  cls->add_flag("--chordal", want_chordal);
  cls->add_flag("--perfect", want_perfect);
  cls->add_flag("--cycle", want_cycle);
  cls->add_option("--cn-free", cn, "Test for an induced C_N in T(G)")->check(CLI::Range(3, 1000));
  cls->add_option("--route", route)->check(CLI::IsMember({"direct", "forbidden", "both"}));
  cls->add_flag("--json", cls_json);

  // reduce
  auto* red = app.add_subcommand("reduce", "Reduce a graph whose T is a cycle to its irreducible base");
  std::string red_in;
  bool red_json = false;
  red->add_option("input", red_in)->required();
  red->add_flag("--json", red_json);

  // forbidden
  auto* fb = app.add_subcommand("forbidden", "List the minimal forbidden subgraphs for an induced C_N");
  int fb_n = 0;
  int max_host = std::numeric_limits<int>::max();
  std::string out_dir;
  bool fb_json = false;
  fb->add_option("n", fb_n)->required()->check(CLI::Range(3, 14));
  fb->add_option("--max-host", max_host, "Drop members with more vertices");
  fb->add_option("--out-dir", out_dir, "Write one edge list per member plus manifest.tsv");
  fb->add_flag("--json", fb_json);

  // tuza
  auto* tz = app.add_subcommand("tuza", "Exact triangle packing and covering");
  std::string tz_in;
  bool tz_json = false;
  tz->add_option("input", tz_in)->required();
  tz->add_flag("--json", tz_json);

  // survey
  auto* sv = app.add_subcommand("survey", "Check invariants over a corpus");
  int max_order = 6;
  std::string g6_file;
  std::string checks;
  int jobs = 1;
  bool connected_only = false;
  bool detail = false;
  auto* mo = sv->add_option("--max-order", max_order)->check(CLI::Range(1, kMaxEnumerationOrder));
  sv->add_option("--graph6", g6_file, "Corpus file, one graph6 string per line")->excludes(mo);
  sv->add_option("--checks", checks, "Comma-separated subset of cn,class,cycle,premise,roundtrip,tuza");
  sv->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  sv->add_flag("--connected", connected_only, "Built-in corpus: connected graphs only");
  sv->add_flag("--detail", detail, "One line per graph and check");

  // replay
  auto* rp = app.add_subcommand("replay", "Apply a transformation log");
  std::string rp_in, rp_log;
  std::string rp_to = "edge-list";
  rp->add_option("input", rp_in)->required();
  rp->add_option("log", rp_log)->required();
  rp->add_option("--to", rp_to)->check(CLI::IsMember({"edge-list", "graph6", "dot", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::string name = family;
      for (const auto& p : params) name += ":" + p;
      emit(render_graph(make_named(name), gen_to), output);
    } else if (*tgc) {
      const TriangleGraph tg = build_triangle_graph(load_graph(tg_in, format));
      if (tg_dot) {
        emit(tgraph_to_dot(tg), output);
      } else if (tg_json) {
        json tris = json::array();
        for (const auto& t : tg.triangles) tris.push_back(t.v);
        json inc = json::array();
        for (const auto& [e, ts] : tg.edge_incidence) inc.push_back({{"edge", {e.u, e.v}}, {"triangles", ts}});
        emit(json{{"triangles", tris}, {"edges", edges_json(tg.derived.edges())}, {"edge_incidence", inc}}.dump(2) + "\n",
             output);
      } else {
        std::ostringstream os;
        os << "triangles: " << tg.triangle_count() << "\n";
        for (int t = 0; t < tg.triangle_count(); ++t) os << "  t" << t << " " << to_string(tg.triangles[t]) << "\n";
        os << "T edges: " << tg.derived.size() << "\n";
        for (const Edge& e : tg.derived.edges()) os << "  t" << e.u << " -- t" << e.v << "\n";
        emit(os.str(), output);
      }
    } else if (*cls) {
      const Graph g = load_graph(cls_in, format);
      const TriangleGraph tg = build_triangle_graph(g);
      Routes routes{route != "forbidden", route != "direct"};
      const bool any = want_tree || want_chordal || want_perfect || want_cycle || cn > 0;
      json out;
      std::string text;
      if (!any || want_tree || want_chordal || want_perfect) {
        const ClassReport r = tgraph_class(g, routes);
        out["triangles"] = r.triangles;
        out["triangle_connected"] = r.triangle_connected;
        text += "triangles: " + std::to_string(r.triangles) + ", triangle-connected: " +
                (r.triangles ? (r.triangle_connected ? "yes" : "no") : "n/a") + "\n";
        if (!any || want_tree) {
          out["tree"] = verdict_json(r.tree);
          text += verdict_text("tree", r.tree, tg);
        }
        if (!any || want_chordal) {
          out["chordal"] = verdict_json(r.chordal);
          text += verdict_text("chordal", r.chordal, tg);
        }
        if (!any || want_perfect) {
          out["perfect"] = verdict_json(r.perfect);
          text += verdict_text("perfect", r.perfect, tg);
        }
      }
      if (!any || want_cycle) {
        const CycleCertificate c = characterize_cycle(g);
        out["cycle"] = certificate_json(c);
        text += certificate_text(c);
      }
      if (cn > 0) {
        const DualVerdict v = tgraph_cn_free(g, cn, routes);
        out["cn_free"] = verdict_json(v);
        out["cn_free"]["n"] = cn;
        text += verdict_text("C" + std::to_string(cn) + "-free", v, tg);
      }
      emit(cls_json ? out.dump(2) + "\n" : text, output);
    } else if (*red) {
      const Graph g = load_graph(red_in, format);
      const Reduction r = reduce_to_irreducible(g);
      CycleCertificate c = characterize_cycle(g);
      if (red_json) {
        std::vector<std::string> lines;
        for (const auto& s : r.log.steps) lines.push_back(to_string(s));
        emit(json{{"base_case", describe(c)}, {"base", graph_json(r.base)}, {"log", lines}}.dump(2) + "\n", output);
      } else {
        emit("# irreducible base: " + describe(c) + "\n" + format_edge_list(r.base) +
                 "# reduction log, one inverse step per line\n" + format_log(r.log),
             output);
      }
    } else if (*fb) {
      const ForbiddenFamily fam = forbidden_family(fb_n, max_host);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream manifest(std::filesystem::path(out_dir) / "manifest.tsv");
        manifest << "file\tbase\tsplits\tsticks\torder\tsize\tgraph6\n";
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
          const auto& m = fam.members[i];
          const std::string file = "member_" + std::to_string(i) + ".edges";
          std::ofstream(std::filesystem::path(out_dir) / file) << format_edge_list(m.graph);
          manifest << file << '\t' << m.base << '\t' << m.splits << '\t' << m.sticks << '\t' << m.graph.order()
                   << '\t' << m.graph.size() << '\t' << to_graph6(m.graph) << '\n';
        }
      }
      if (fb_json) {
        json members = json::array();
        for (const auto& m : fam.members) {
          members.push_back({{"base", m.base}, {"splits", m.splits}, {"sticks", m.sticks},
                             {"graph6", to_graph6(m.graph)}, {"graph", graph_json(m.graph)}});
        }
        emit(json{{"n", fb_n}, {"members", members}}.dump(2) + "\n", output);
      } else {
        std::ostringstream os;
        os << "family(" << fb_n << "): " << fam.members.size() << " members\n";
        for (const auto& m : fam.members) {
          os << "  " << to_graph6(m.graph) << "  order " << m.graph.order() << ", " << m.graph.size()
             << " edges, from " << m.base << " + " << m.splits << " splits, " << m.sticks << " sticks\n";
        }
        emit(os.str(), output);
      }
    } else if (*tz) {
      const Graph g = load_graph(tz_in, format);
      const TuzaReport r = tuza_report(g);
      if (tz_json) {
        emit(tuza_json(r).dump(2) + "\n", output);
      } else {
        std::ostringstream os;
        os << "nu = " << r.nu << ", tau = " << r.tau << ", theta = " << r.theta << "\n";
        os << "T perfect: " << (r.tgraph_perfect ? "yes" : "no") << ", tau <= 2 nu: " << (r.bound_2x ? "yes" : "no")
           << ", tau = nu: " << (r.equality ? "yes" : "no") << "\n";
        os << "transversal:";
        for (const Edge& e : r.transversal_witness) os << " " << to_string(e);
        os << "\nfrom clique cover:";
        for (const Edge& e : r.constructed_transversal) os << " " << to_string(e);
        os << "\n";
        emit(os.str(), output);
      }
    } else if (*sv) {
      SurveyOptions opt;
      opt.jobs = jobs;
      opt.detail = detail;
      if (!checks.empty()) {
        opt.checks.clear();
        std::stringstream ss(checks);
        for (std::string c; std::getline(ss, c, ',');) {
          if (!c.empty()) opt.checks.insert(c);
        }
      }
      const auto corpus = g6_file.empty() ? builtin_corpus(max_order, connected_only) : graph6_corpus(g6_file);
      const SurveyReport rep = run_survey(corpus, opt);
      emit(rep.text, output);
      return rep.violations > 0 || rep.parse_errors > 0 ? 1 : 0;
    } else if (*rp) {
      const Graph g = load_graph(rp_in, format);
      const ParsedSteps steps = parse_log(read_text(rp_log));
      const TransformLog log = replay(g, steps.cycle, steps.steps);
      emit(render_graph(log.final, rp_to), output);
    }
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const InternalError& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 3;
  }
  return 0;
}
