// Acceptance checks. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliquedyn/cliques.h"
#include "cliquedyn/covers.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/geometric.h"
#include "cliquedyn/hexgrid.h"
#include "cliquedyn/io.h"
#include "cliquedyn/lemmas.h"

namespace cliquedyn {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

Graph fixture(const std::string& name) {
  return read_graph_file(std::string(CLIQUEDYN_FIXTURES) + "/" + name).graph;
}

// Runs one suite for each value of `field` in [lo, hi].
Outcome sweep(const std::string& suite, int SuiteOptions::*field, int lo,
              int hi, SuiteOptions opt = {}) {
  Outcome o{true, ""};
  for (int v = lo; v <= hi; ++v) {
    opt.*field = v;
    SuiteResult r = run_suite(suite, opt);
    if (!r.pass) {
      o.pass = false;
      o.detail = std::to_string(v) + ": " + r.detail;
      return o;
    }
  }
  o.detail = suite + " " + std::to_string(lo) + ".." + std::to_string(hi);
  return o;
}

Outcome single(const std::string& suite, const SuiteOptions& opt = {}) {
  SuiteResult r = run_suite(suite, opt);
  return {r.pass, r.detail};
}

Outcome lhg() { return single("lhg"); }

Outcome inclusion() { return sweep("inclusion", &SuiteOptions::m, 1, 8); }

Outcome straight() { return sweep("straight", &SuiteOptions::m, 4, 8); }

Outcome equivalence() {
  SuiteOptions opt;
  opt.radius = 14;
  return sweep("equivalence", &SuiteOptions::n, 0, 3, opt);
}

Outcome neighbours() { return sweep("neighbours", &SuiteOptions::m, 3, 6); }

Outcome delta4_neighbours() {
  HexRegion p = gen_hex_patch(8);
  GeoGraph gg = build_geo(p.graph, 4);
  std::vector<HexCoord> pts = delta_coords(4);
  for (auto& x : pts) x = x + HexCoord{-1, -1, -2};
  auto s = gg.find(p.vertices_at(pts));
  if (!s) return {false, "size-4 triangle not found"};
  int level0 = 0;
  int level2 = 0;
  for (Vertex w : gg.graph.neighbours(*s)) {
    if (gg.vertices[w].level == 0) ++level0;
    if (gg.vertices[w].level == 2) ++level2;
  }
  return {level0 == 3 && level2 == 7,
          std::to_string(level0) + " of level 0, " + std::to_string(level2) +
              " of level 2"};
}

Outcome torus_growth() {
  std::string detail;
  bool pass = true;
  for (auto [p, start] : {std::pair{4, 16}, {5, 25}}) {
    IterationTrace t = iterate_k(gen_torus(p, p).graph, 3);
    bool ok = t.steps.size() == 4 &&
              t.steps[0].vertices == static_cast<std::size_t>(start) &&
              t.steps[1].vertices == static_cast<std::size_t>(2 * start) &&
              t.verdict != IterationTrace::Verdict::kConverged;
    for (std::size_t i = 1; ok && i < t.steps.size(); ++i) {
      ok = t.steps[i].vertices > t.steps[i - 1].vertices;
    }
    pass = pass && ok;
    detail += "T(" + std::to_string(p) + "," + std::to_string(p) + "):";
    for (const auto& s : t.steps) detail += " " + std::to_string(s.vertices);
    detail += "; ";
  }
  return {pass, detail};
}

Outcome cover() {
  SuiteOptions opt;
  opt.radius = 5;
  return single("cover", opt);
}

Outcome discharge() {
  SuiteOptions opt;
  opt.samples = 100;
  return single("discharge", opt);
}

Outcome decisions() {
  using V = Decision::Verdict;
  struct Case {
    std::string name;
    Graph g;
    V want;
    std::string reason;  // expected substring
    std::vector<std::string> gates;
  };
  std::vector<Case> cases = {
      {"T(4,4)", gen_torus(4, 4).graph, V::kDivergent, "", {}},
      {"T(5,5)", gen_torus(5, 5).graph, V::kDivergent, "", {}},
      {"T(4,7)", gen_torus(4, 7).graph, V::kDivergent, "", {}},
      {"octahedron", gen_octahedron(), V::kUnsupported, "below 6", {}},
      {"icosahedron", gen_icosahedron(), V::kUnsupported, "below 6", {}},
      {"K4", gen_complete(4), V::kUnsupported, "locally cyclic", {}},
      {"hex patch", gen_hex_patch(3).graph, V::kUnsupported, "locally cyclic",
       {}},
      {"genus2",
       fixture("genus2.json"),
       V::kConvergent,
       "",
       {"connected: yes", "locally cyclic: yes", "minimum degree >= 6: yes",
        "6-regular: no"}},
      {"genus2-branched",
       fixture("genus2-branched.json"),
       V::kConvergent,
       "",
       {"connected: yes", "locally cyclic: yes", "minimum degree >= 6: yes",
        "6-regular: no"}},
  };
  for (const auto& c : cases) {
    Decision d = decide_finite(c.g);
    bool ok = d.verdict == c.want &&
              d.reason.find(c.reason) != std::string::npos;
    for (std::size_t i = 0; ok && i < c.gates.size(); ++i) {
      ok = i < d.gates.size() && d.gates[i].rfind(c.gates[i], 0) == 0;
    }
    if (!ok) {
      return {false, c.name + " gave " + to_string(d.verdict) + " (" +
                         d.reason + ")"};
    }
  }
  return {true, std::to_string(cases.size()) + " graphs classified"};
}

}  // namespace
}  // namespace cliquedyn

int main() {
  using namespace cliquedyn;
  std::vector<Criterion> criteria = {
      {"1 local graph cliques", 1, lhg},
      {"2 triangle inclusions", 10, inclusion},
      {"3 straight paths", 10, straight},
      {"4 geometric equivalence", 300, equivalence},
      {"5 neighbour counts", 30, neighbours},
      {"6 size-4 triangle neighbours", 1, delta4_neighbours},
      {"7 torus growth", 600, torus_growth},
      {"8 cover ball", 30, cover},
      {"9 discharge", 10, discharge},
      {"10 decisions", 9, decisions},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    std::printf("%s %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL",
                c.name.c_str(), o.detail.c_str(), secs);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
