// Command line front end for cliquedyn.
//
// Exit codes: 0 success, 1 verification failure, 2 input or precondition
// error, 3 budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "cliquedyn/charts.h"
#include "cliquedyn/cliques.h"
#include "cliquedyn/covers.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/geometric.h"
#include "cliquedyn/hexgrid.h"
#include "cliquedyn/io.h"
#include "cliquedyn/lemmas.h"
#include "cliquedyn/surface.h"

using namespace cliquedyn;
using nlohmann::json;

namespace {

struct Output {
  std::string format = "json";
  std::string path;

  void text(const std::string& s) const {
    if (path.empty() || path == "-") {
      std::cout << s;
    } else {
      write_text_file(path, s);
    }
  }

  void graph(const GraphFile& f) const {
    if (format == "dot") {
      text(serialize_dot(f));
    } else if (format == "text") {
      text(serialize_edge_list(f.graph));
    } else {
      text(serialize_json(f));
    }
  }

  void doc(const json& j) const { text(j.dump(2) + "\n"); }
};

json ids_of(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.id(v));
  return out;
}

json analyze(const Graph& g) {
  json j;
  j["name"] = g.name();
  j["vertices"] = g.order();
  j["edges"] = g.size();
  j["min_degree"] = g.min_degree();
  j["max_degree"] = g.max_degree();
  j["connected"] = is_connected(g);
  j["canonical_hash"] = canonical_hash(g);
  if (g.order() > 0 && is_connected(g)) {
    SurfaceReport r = validate_surface(g);
    j["locally_cyclic"] = r.is_locally_cyclic;
    j["inner"] = r.inner.size();
    j["boundary"] = ids_of(g, r.boundary);
    j["invalid"] = ids_of(g, r.invalid);
    j["boundary_edges"] = r.boundary_edges.size();
    j["facets"] = facets(g).size();
  }
  return j;
}

json suite_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail},
          {"seconds", r.seconds}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique graph dynamics of triangulated surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Graph output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("-o,--output", out.path, "Output file (default stdout)");

  std::string input;
  int radius = 5;
  int m = 3;
  int p = 4;
  int q = 4;
  int unit = 0;
  int steps = 6;
  int n = 1;
  int margin = -1;
  int jobs = 1;
  long long base = -1;
  std::uint64_t seed = kDefaultSeed;

  auto* gen = app.add_subcommand("generate", "Write a built-in graph");
  std::string kind;
  gen->add_option("kind", kind, "Graph family")
      ->required()
      ->check(CLI::IsMember({"hex-patch", "delta", "nabla", "lhg", "torus",
                             "octahedron", "icosahedron", "complete"}));
  gen->add_option("--radius", radius, "Patch radius");
  gen->add_option("-m", m, "Triangle size, nabla variant or complete order");
  gen->add_option("-p", p, "First torus period");
  gen->add_option("-q", q, "Second torus period");
  gen->add_option("--unit", unit, "Shift direction for the shifted nabla");

  auto* ana = app.add_subcommand("analyze", "Report surface structure");
  ana->add_option("input", input)->required()->check(CLI::ExistingFile);

  auto* cg = app.add_subcommand("cliquegraph", "Write the clique graph");
  cg->add_option("input", input)->required()->check(CLI::ExistingFile);

  auto* it = app.add_subcommand("iterate", "Iterate the clique operator");
  it->add_option("input", input)->required()->check(CLI::ExistingFile);
  it->add_option("--steps", steps, "Maximum number of iterates");

  auto* geo = app.add_subcommand("geometric", "Triangle graphs of a host");
  std::string geo_mode;
  geo->add_option("mode", geo_mode)
      ->required()
      ->check(CLI::IsMember({"build", "verify"}));
  geo->add_option("input", input)->required()->check(CLI::ExistingFile);
  geo->add_option("-n", n, "Level");
  geo->add_option("--margin", margin, "Distance from the host boundary");
  geo->add_option("--jobs", jobs, "Worker threads");

  auto* cov = app.add_subcommand("cover", "Universal cover ball");
  std::string cov_mode;
  cov->add_option("mode", cov_mode)
      ->required()
      ->check(CLI::IsMember({"build", "validate"}));
  cov->add_option("input", input)->required()->check(CLI::ExistingFile);
  cov->add_option("--base", base, "Base vertex id (default first vertex)");
  cov->add_option("--radius", radius, "Ball radius");

  auto* dec = app.add_subcommand("decide", "Clique convergence verdict");
  dec->add_option("input", input)->required()->check(CLI::ExistingFile);

  auto* ver = app.add_subcommand("verify-lemmas", "Run structural checks");
  std::vector<std::string> suites;
  SuiteOptions so;
  ver->add_option("--suite", suites, "Suites to run (default all)")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("-m", so.m, "Triangle size");
  ver->add_option("-n", so.n, "Level for the equivalence suite");
  ver->add_option("--radius", so.radius, "Patch or ball radius");
  ver->add_option("--samples", so.samples, "Random discs");
  ver->add_option("--seed", seed, "Random seed");
  ver->add_option("--jobs", so.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      if (kind == "hex-patch") {
        out.graph(gen_hex_patch(radius).to_file());
      } else if (kind == "delta") {
        out.graph(gen_delta(m).to_file());
      } else if (kind == "nabla") {
        if (m < 0 || m > 3) throw InputError("nabla variant is 0..3");
        out.graph(gen_nabla(static_cast<Nabla>(m), unit).to_file());
      } else if (kind == "lhg") {
        out.graph(build_lhg().to_file());
      } else if (kind == "torus") {
        out.graph(gen_torus(p, q).to_file());
      } else if (kind == "octahedron") {
        out.graph({gen_octahedron()});
      } else if (kind == "icosahedron") {
        out.graph({gen_icosahedron()});
      } else {
        out.graph({gen_complete(m)});
      }
      return 0;
    }

    if (*ver) {
      so.seed = seed;
      if (suites.empty()) suites = suite_names();
      bool all = true;
      std::string text;
      for (const auto& name : suites) {
        SuiteResult r = run_suite(name, so);
        all = all && r.pass;
        text += suite_json(r).dump() + "\n";
      }
      out.text(text);
      return all ? 0 : 1;
    }

    GraphFile file = read_graph_file(input);
    const Graph& g = file.graph;

    if (*ana) {
      out.doc(analyze(g));
    } else if (*cg) {
      CliqueGraph k = clique_graph(g, CliqueBudget::from_env());
      GraphFile f{k.graph};
      for (Vertex v = 0; v < k.members.size(); ++v) {
        f.labels[std::to_string(v)] = ids_of(g, k.members[v]);
      }
      out.graph(f);
    } else if (*it) {
      IterationTrace t = iterate_k(g, steps);
      std::string text = t.json_lines();
      json summary = {{"verdict", to_string(t.verdict)},
                      {"message", t.message}};
      if (t.verdict == IterationTrace::Verdict::kConverged) {
        summary["converged_n"] = t.converged_n;
        summary["period"] = t.period;
      }
      out.text(text + summary.dump() + "\n");
      if (t.verdict == IterationTrace::Verdict::kBudgetExceeded) return 3;
    } else if (*geo) {
      if (geo_mode == "verify") {
        if (margin < 0) margin = n + 3;
        EquivalenceReport r = verify_geometric_equivalence(g, n, margin, jobs);
        out.doc({{"ok", r.ok},
                 {"n", r.n},
                 {"margin", r.margin},
                 {"interior_vertices", r.interior_vertices},
                 {"interior_cliques", r.interior_cliques},
                 {"adjacency_pairs", r.adjacency_pairs},
                 {"failures", r.failures}});
        return r.ok ? 0 : 1;
      }
      GeoOptions opt;
      opt.margin = std::max(margin, 0);
      opt.jobs = jobs;
      GeoGraph gg = build_geo(g, n, opt);
      GraphFile f{gg.graph};
      for (Vertex v = 0; v < gg.vertices.size(); ++v) {
        f.labels[std::to_string(v)] = {
            {"level", gg.vertices[v].level},
            {"support", ids_of(g, gg.vertices[v].support)}};
      }
      out.graph(f);
    } else if (*cov) {
      Vertex b = base < 0 ? 0 : g.index_of(base);
      CoverBall cb = universal_cover_ball(g, b, radius);
      if (cov_mode == "validate") {
        CoverCheck c =
            validate_covering_map(cb.graph, g, cb.projection, cb.interior);
        out.doc({{"ok", c.ok},
                 {"lifts", cb.graph.order()},
                 {"checked", c.checked},
                 {"failures", c.failures}});
        return c.ok ? 0 : 1;
      }
      GraphFile f{cb.graph};
      for (Vertex v = 0; v < cb.graph.order(); ++v) {
        f.labels[std::to_string(v)] = {{"projection", g.id(cb.projection[v])},
                                       {"depth", cb.depth[v]}};
      }
      out.graph(f);
    } else if (*dec) {
      Decision d = decide_finite(g);
      out.doc({{"verdict", to_string(d.verdict)},
               {"reason", d.reason},
               {"gates", d.gates},
               {"min_degree", d.min_degree},
               {"max_degree", d.max_degree}});
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InjectivityError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
