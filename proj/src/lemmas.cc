#include "cliquedyn/lemmas.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "cliquedyn/charts.h"
#include "cliquedyn/covers.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/geometric.h"

namespace cliquedyn {
namespace {

std::map<std::pair<Vertex, Vertex>, int> edge_counts(
    const std::set<Facet>& disc) {
  std::map<std::pair<Vertex, Vertex>, int> count;
  for (const auto& f : disc) {
    ++count[{f[0], f[1]}];
    ++count[{f[1], f[2]}];
    ++count[{f[0], f[2]}];
  }
  return count;
}

// Boundary cycle of a disc, or empty if the facets do not form a disc.
std::vector<Vertex> disc_boundary(const std::set<Facet>& disc) {
  auto count = edge_counts(disc);
  std::map<Vertex, std::vector<Vertex>> rim;
  std::set<Vertex> verts;
  for (const auto& f : disc) verts.insert(f.begin(), f.end());
  for (const auto& [e, c] : count) {
    if (c > 2) return {};
    if (c == 1) {
      rim[e.first].push_back(e.second);
      rim[e.second].push_back(e.first);
    }
  }
  long chi = static_cast<long>(verts.size()) - static_cast<long>(count.size()) +
             static_cast<long>(disc.size());
  if (chi != 1 || rim.empty()) return {};
  for (const auto& [v, nb] : rim) {
    if (nb.size() != 2) return {};
  }
  std::vector<Vertex> cycle{rim.begin()->first};
  Vertex prev = cycle[0];
  Vertex cur = rim.begin()->second[0];
  while (cur != cycle[0]) {
    cycle.push_back(cur);
    const auto& nb = rim[cur];
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != rim.size()) return {};
  return cycle;
}

std::vector<HexCoord> line_points(int m, int axis, int value) {
  std::vector<HexCoord> out;
  for (const auto& p : delta_coords(m)) {
    if (p[axis] == value) out.push_back(p);
  }
  int along = (axis + 1) % 3;
  std::sort(out.begin(), out.end(), [&](const HexCoord& x, const HexCoord& y) {
    return x[along] < y[along];
  });
  return out;
}

SuiteResult suite_lhg() {
  SuiteResult r;
  r.name = "lhg";
  LocalHexGraph lhg = build_lhg();
  auto found = lhg_cliques_through_origin(lhg);
  std::set<VertexSet> want;
  for (const auto& c : lhg_named_cliques(lhg)) want.insert(c.members);
  std::set<VertexSet> got(found.begin(), found.end());
  r.pass = lhg.graph.order() == 17 && found.size() == 7 && got == want;
  r.detail = std::to_string(found.size()) +
             " maximal cliques through the origin; named set " +
             (got == want ? "matches" : "differs");
  return r;
}

SuiteResult suite_inclusion(const SuiteOptions& o) {
  SuiteResult r;
  r.name = "inclusion";
  std::ostringstream out;
  r.pass = true;
  for (int k = 1; k <= std::min(2, o.m); ++k) {
    auto inc = classify_delta_inclusions(o.m, k);
    int want = expected_inclusion_count(o.m, k);
    std::size_t unlabeled = std::count_if(inc.begin(), inc.end(), [](auto& x) {
      return x.kind == DeltaInclusion::Kind::kOther;
    });
    bool ok = static_cast<int>(inc.size()) == want && unlabeled == 0;
    r.pass = r.pass && ok;
    out << "m=" << o.m << " k=" << k << ": " << inc.size() << " (expected "
        << want << ")" << (unlabeled ? " with unlabeled images" : "") << "; ";
  }
  r.detail = out.str();
  return r;
}

SuiteResult suite_straight(const SuiteOptions& o) {
  SuiteResult r;
  r.name = "straight";
  if (o.m < 4) throw PreconditionError("straight suite needs m >= 4");
  HexRegion delta = gen_delta(o.m);
  auto paths = maximal_straight_paths(delta.graph, o.m - 2);
  std::set<std::vector<HexCoord>> got;
  for (const auto& p : paths) {
    std::vector<HexCoord> pts;
    for (Vertex v : p.walk) pts.push_back(delta.coords[v]);
    std::vector<HexCoord> rev(pts.rbegin(), pts.rend());
    got.insert(std::min(pts, rev));
  }
  std::set<std::vector<HexCoord>> want;
  for (int axis = 0; axis < 3; ++axis) {
    for (int value = 0; value <= 2; ++value) {
      auto pts = line_points(o.m, axis, value);
      std::vector<HexCoord> rev(pts.rbegin(), pts.rend());
      want.insert(std::min(pts, rev));
    }
  }
  r.pass = paths.size() == 9 && got == want;
  r.detail = std::to_string(paths.size()) + " maximal straight paths of length >= " +
             std::to_string(o.m - 2) + "; lines " +
             (got == want ? "match" : "differ from") +
             " the three sides and their two parallels";
  return r;
}

SuiteResult suite_neighbours(const SuiteOptions& o) {
  SuiteResult r;
  r.name = "neighbours";
  if (o.m < 3) throw PreconditionError("neighbours suite needs m >= 3");
  HexRegion patch = gen_hex_patch(o.m + 4);
  HexCoord t{-(o.m / 3), -((o.m + 1) / 3), -((o.m + 2) / 3)};
  std::vector<HexCoord> pts = delta_coords(o.m);
  for (auto& p : pts) p = p + t;
  VertexSet s = patch.vertices_at(pts);
  auto nb = neighbour_triangles(patch.graph, s, o.m);
  std::size_t want = o.m == 3 ? 7 : 6;
  r.pass = nb.size() == want;
  r.detail = std::to_string(nb.size()) + " neighbouring triangles (expected " +
             std::to_string(want) + ")";
  return r;
}

SuiteResult suite_equivalence(const SuiteOptions& o) {
  SuiteResult r;
  r.name = "equivalence";
  HexRegion patch = gen_hex_patch(o.radius);
  EquivalenceReport rep =
      verify_geometric_equivalence(patch.graph, o.n, o.n + 3, o.jobs);
  r.pass = rep.ok && rep.interior_vertices > 0;
  std::ostringstream out;
  out << "n=" << o.n << " radius=" << o.radius << ": "
      << rep.interior_vertices << " interior vertices, "
      << rep.interior_cliques << " interior cliques, " << rep.adjacency_pairs
      << " adjacent pairs";
  for (const auto& f : rep.failures) out << "; " << f;
  r.detail = out.str();
  return r;
}

SuiteResult suite_discharge(const SuiteOptions& o) {
  SuiteResult r;
  r.name = "discharge";
  HexRegion patch = gen_hex_patch(9);
  std::mt19937_64 rng(o.seed);
  int bad = 0;
  for (int i = 0; i < o.samples; ++i) {
    int size = 1 + static_cast<int>(rng() % 60);
    auto cycle = random_disc_boundary(patch, size, rng);
    if (disc_discharge_check(patch.graph, cycle).residual != 0) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(o.samples - bad) + "/" + std::to_string(o.samples) +
             " random discs with zero residual (seed " +
             std::to_string(o.seed) + ")";
  return r;
}

SuiteResult suite_cover(const SuiteOptions& o) {
  SuiteResult r;
  r.name = "cover";
  HexRegion torus = gen_torus(4, 4);
  CoverBall cb = universal_cover_ball(torus.graph, 0, o.radius);
  HexRegion patch = gen_hex_patch(o.radius);
  bool whole = is_isomorphic(cb.graph, patch.graph).isomorphic();
  CoverCheck check =
      validate_covering_map(cb.graph, torus.graph, cb.projection, cb.interior);
  r.pass = whole && check.ok;
  r.detail = std::to_string(cb.graph.order()) + " lifts; ball " +
             (whole ? "is" : "is not") + " isomorphic to the hex patch; " +
             "covering check " + (check.ok ? "passed" : "failed");
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"lhg", "inclusion", "straight", "neighbours", "equivalence",
          "discharge", "cover"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  if (name == "lhg") {
    r = suite_lhg();
  } else if (name == "inclusion") {
    r = suite_inclusion(options);
  } else if (name == "straight") {
    r = suite_straight(options);
  } else if (name == "neighbours") {
    r = suite_neighbours(options);
  } else if (name == "equivalence") {
    r = suite_equivalence(options);
  } else if (name == "discharge") {
    r = suite_discharge(options);
  } else if (name == "cover") {
    r = suite_cover(options);
  } else {
    throw InputError("unknown suite " + name);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

std::vector<NamedClique> lhg_named_cliques(const LocalHexGraph& lhg) {
  std::vector<NamedClique> out;
  auto node = [&](int level, HexCoord p) { return lhg.index(level, p); };
  out.push_back({"bottom",
                 make_vertex_set({node(0, {0, 0, 0}), node(-2, {1, 1, 0}),
                                  node(-2, {0, 1, 1}), node(-2, {1, 0, 1}),
                                  node(-4, {2, 1, 1}), node(-4, {1, 2, 1}),
                                  node(-4, {1, 1, 2}), node(-6, {2, 2, 2})})});
  for (int i = 0; i < 3; ++i) {
    HexCoord e = kUnits[i];
    std::vector<Vertex> mid;
    std::vector<Vertex> top;
    for (const auto& u : kUnits) {
      mid.push_back(node(0, e - u));
      mid.push_back(node(-2, u + e));
      top.push_back(node(0, u - e));
    }
    mid.push_back(node(-4, HexCoord{1, 1, 1} + e));
    top.push_back(node(-2, HexCoord{1, 1, 1} - e));
    out.push_back({"middle-e" + std::to_string(i + 1),
                   make_vertex_set(std::move(mid))});
    out.push_back({"top-e" + std::to_string(i + 1),
                   make_vertex_set(std::move(top))});
  }
  return out;
}

int expected_inclusion_count(int m, int k) {
  if (k == 1) return 3 + (m == 2 ? 1 : 0);
  if (k == 2) return 6 + (m == 3 ? 3 : 0) + (m == 4 ? 1 : 0);
  throw PreconditionError("only k = 1 and k = 2 are tabulated");
}

std::vector<Vertex> random_disc_boundary(const HexRegion& region, int facets,
                                         std::mt19937_64& rng,
                                         std::vector<Facet>* disc) {
  int radius = 0;
  for (const auto& p : region.coords) {
    radius = std::max(radius, hex_distance(p, {p.sum() / 3, p.sum() / 3,
                                               p.sum() - 2 * (p.sum() / 3)}));
  }
  std::vector<Facet> pool;
  for (const auto& f : cliquedyn::facets(region.graph)) {
    bool inside = true;
    for (Vertex v : f) {
      inside = inside && hex_distance(region.coords[v], {0, 0, 0}) < radius;
    }
    if (inside) pool.push_back(f);
  }
  if (pool.empty()) throw PreconditionError("region too small for a disc");
  // Seed with a facet touching the origin when there is one.
  std::vector<Facet> seeds;
  auto origin = region.at({0, 0, 0});
  for (const auto& f : pool) {
    if (origin && (f[0] == *origin || f[1] == *origin || f[2] == *origin)) {
      seeds.push_back(f);
    }
  }
  if (seeds.empty()) seeds = pool;
  std::set<Facet> current{seeds[rng() % seeds.size()]};
  for (int step = 1; step < facets; ++step) {
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& [e, c] : edge_counts(current)) {
      if (c == 1) edges.insert(e);
    }
    std::vector<Facet> frontier;
    for (const auto& f : pool) {
      if (current.count(f)) continue;
      if (edges.count({f[0], f[1]}) || edges.count({f[1], f[2]}) ||
          edges.count({f[0], f[2]})) {
        frontier.push_back(f);
      }
    }
    std::shuffle(frontier.begin(), frontier.end(), rng);
    bool grown = false;
    for (const auto& f : frontier) {
      current.insert(f);
      if (!disc_boundary(current).empty()) {
        grown = true;
        break;
      }
      current.erase(f);
    }
    if (!grown) break;
  }
  if (disc) disc->assign(current.begin(), current.end());
  return disc_boundary(current);
}

}  // namespace cliquedyn
