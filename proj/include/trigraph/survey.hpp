#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "trigraph/classify.hpp"
#include "trigraph/io.hpp"
#include "trigraph/transforms.hpp"
#include "trigraph/tuza.hpp"

namespace trigraph {

/// Check names accepted by run_survey.
inline const std::vector<std::string>& survey_check_names() {
  static const std::vector<std::string> names{"cn", "class", "cycle", "premise", "roundtrip", "tuza"};
  return names;
}

struct SurveyOptions {
  std::set<std::string> checks{survey_check_names().begin(), survey_check_names().end()};
  int jobs = 1;
  /// Add one line per graph and check with the verdicts.
  bool detail = false;
};

struct CorpusEntry {
  std::string source;
  std::optional<Graph> graph;
  std::string error;
};

namespace detail {

struct GraphOutcome {
  std::vector<std::string> violations;
  std::vector<std::string> detail;
  int evaluations = 0;
  // Counters for the reported-only observation.
  bool k4_free_odd_hole_free = false;
  bool tau_equals_nu = false;
};

inline std::string yes_no(std::optional<bool> v) {
  if (!v) return "n/a";
  return *v ? "yes" : "no";
}

inline std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

inline void check_graph(const Graph& g, const SurveyOptions& opt, GraphOutcome& out) {
  auto guard = [&](const std::string& name, auto&& body) {
    if (!opt.checks.count(name)) return;
    ++out.evaluations;
    try {
      body();
    } catch (const std::exception& err) {
      out.violations.push_back(name + ": " + err.what());
    }
  };

  guard("cn", [&] {
    std::string line = "cn:";
    for (int n = 3; n <= 6; ++n) {
      const DualVerdict v = tgraph_cn_free(g, n);
      line += " C" + std::to_string(n) + "-free=" + yes_no(v.direct);
    }
    out.detail.push_back(line);
  });

  guard("class", [&] {
    const ClassReport r = tgraph_class(g);
    if (!r.hierarchy_holds()) out.violations.push_back("class: tree => chordal => perfect fails");
    std::string line = "class: tree=" + yes_no(r.tree.verdict()) + " chordal=" + yes_no(r.chordal.verdict()) +
                       " perfect=" + yes_no(r.perfect.verdict());
    if (r.perfect.direct && !*r.perfect.direct) line += " odd-hole=" + join_vertices(r.perfect.hole);
    out.detail.push_back(line);
  });

  guard("cycle", [&] {
    if (cycle_hypothesis_violation(g)) {
      out.detail.push_back("cycle: hypothesis not met");
      return;
    }
    const CycleCertificate c = characterize_cycle(g);
    if (c.is_cycle() && c.odd_hole() != c.parity_rule_predicts_odd_hole()) {
      out.violations.push_back("cycle: parity rule mispredicts odd hole");
    }
    out.detail.push_back("cycle: " + (c.is_cycle() ? "C" + std::to_string(c.length) + " base " + describe(c)
                                                   : std::string("no")));
  });

  guard("premise", [&] {
    const TriangleGraph tg = build_triangle_graph(g);
    if (auto bad = premise_violation(tg.derived)) {
      out.violations.push_back("premise: induced forbidden 5-vertex pattern in T at " + join_vertices(*bad));
    }
  });

  guard("roundtrip", [&] {
    if (!(parse_graph6(to_graph6(g)) == g)) out.violations.push_back("roundtrip: graph6");
    if (!(parse_edge_list(format_edge_list(g)).graph == g)) out.violations.push_back("roundtrip: edge-list");
  });

  guard("tuza", [&] {
    const TuzaReport r = tuza_report(g);
    if (r.tau < r.nu || r.tau > 3 * r.nu) out.violations.push_back("tuza: nu <= tau <= 3 nu fails");
    if (r.used_fallback) out.violations.push_back("tuza: untyped maximal clique in T");
    if (r.tgraph_perfect && !r.chain_holds) out.violations.push_back("tuza: perfect-T chain fails");
    if (!r.bound_2x && r.tgraph_perfect) out.violations.push_back("tuza: tau > 2 nu with perfect T");
    out.k4_free_odd_hole_free = r.k4_free && r.tgraph_perfect;
    out.tau_equals_nu = r.equality;
    out.detail.push_back("tuza: nu=" + std::to_string(r.nu) + " tau=" + std::to_string(r.tau) +
                         " theta=" + std::to_string(r.theta));
  });
}

}  // namespace detail

struct SurveyReport {
  std::string text;
  int violations = 0;
  int parse_errors = 0;
};

/// Runs the selected checks over every corpus entry on `jobs` threads. The
/// report depends only on the corpus and the options, never on scheduling.
inline SurveyReport run_survey(const std::vector<CorpusEntry>& corpus, const SurveyOptions& opt) {
  for (const auto& c : opt.checks) {
    const auto& known = survey_check_names();
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw PreconditionError("unknown survey check '" + c + "'");
    }
  }
  std::vector<detail::GraphOutcome> outcomes(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < corpus.size();) {
      if (corpus[i].graph) detail::check_graph(*corpus[i].graph, opt, outcomes[i]);
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SurveyReport report;
  std::ostringstream os;
  std::string checks;
  for (const auto& c : opt.checks) checks += (checks.empty() ? "" : ",") + c;
  int evaluations = 0;
  int observed_pool = 0;
  int observed_equal = 0;
  std::ostringstream problems;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& entry = corpus[i];
    if (!entry.graph) {
      ++report.parse_errors;
      problems << "PARSE-ERROR " << entry.source << ": " << entry.error << '\n';
      continue;
    }
    const auto& o = outcomes[i];
    evaluations += o.evaluations;
    if (o.k4_free_odd_hole_free) {
      ++observed_pool;
      if (o.tau_equals_nu) ++observed_equal;
    }
    for (const auto& v : o.violations) {
      ++report.violations;
      problems << "VIOLATION " << entry.source << ' ' << to_graph6(*entry.graph) << ' ' << v << '\n';
    }
  }
  os << "survey: " << corpus.size() << " entries, checks " << checks << '\n';
  os << "evaluations: " << evaluations << '\n';
  os << "parse errors: " << report.parse_errors << '\n';
  os << "violations: " << report.violations << '\n';
  if (opt.checks.count("tuza")) {
    os << "observed: tau = nu on " << observed_equal << " of " << observed_pool
       << " K4-free graphs with odd-hole-free T\n";
  }
  os << problems.str();
  if (opt.detail) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!corpus[i].graph) continue;
      for (const auto& line : outcomes[i].detail) {
        os << corpus[i].source << ' ' << to_graph6(*corpus[i].graph) << ' ' << line << '\n';
      }
    }
  }
  report.text = os.str();
  return report;
}

}  // namespace trigraph
