#include "cliquedyn/geometric.h"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>

#include "cliquedyn/cliques.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/surface.h"

namespace cliquedyn {
namespace {

// Offset t with points == {p : p >= t componentwise} of the same height, if
// the points form an upward triangle.
std::optional<HexCoord> upward_shift(const std::vector<HexCoord>& points,
                                     int level) {
  HexCoord low = points.front();
  for (const auto& p : points) {
    low = {std::min(low.a, p.a), std::min(low.b, p.b), std::min(low.c, p.c)};
  }
  if (points.front().sum() - low.sum() != level) return std::nullopt;
  std::vector<HexCoord> want = delta_coords(level);
  for (auto& p : want) p = p + low;
  std::vector<HexCoord> have = points;
  std::sort(have.begin(), have.end());
  if (have != want) return std::nullopt;
  return low;
}

bool offset_rule(HexCoord higher, int hi_level, HexCoord lower, int lo_level) {
  auto offsets = level_offsets(hi_level - lo_level);
  return std::find(offsets.begin(), offsets.end(), lower - higher) !=
         offsets.end();
}

int min_over(const std::vector<int>& dist, const VertexSet& s) {
  int best = -1;
  for (Vertex v : s) {
    if (dist[v] < 0) return -1;
    best = best < 0 ? dist[v] : std::min(best, dist[v]);
  }
  return best;
}

bool far_enough(const std::vector<int>& dist, const VertexSet& s, int margin) {
  int d = min_over(dist, s);
  return d < 0 || d >= margin;
}

void require_no_invalid(const Graph& host) {
  for (Vertex v = 0; v < host.order(); ++v) {
    if (classify_vertex(host, v).kind == VertexClass::Kind::kInvalid) {
      throw PreconditionError("host vertex " + std::to_string(host.id(v)) +
                              " has a neighbourhood that is neither a cycle "
                              "nor a path");
    }
  }
}

}  // namespace

std::optional<Vertex> GeoGraph::find(const VertexSet& support) const {
  auto it = std::lower_bound(
      vertices.begin(), vertices.end(), support,
      [](const GeoVertex& gv, const VertexSet& s) {
        int level = 0;
        // Triangle sizes determine levels: (m+1)(m+2)/2 points.
        while (static_cast<std::size_t>((level + 1) * (level + 2) / 2) <
               s.size()) {
          ++level;
        }
        return std::pair(gv.level, gv.support) < std::pair(level, s);
      });
  if (it == vertices.end() || it->support != support) return std::nullopt;
  return static_cast<Vertex>(it - vertices.begin());
}

std::size_t GeoGraph::count_at_level(int level) const {
  return std::count_if(vertices.begin(), vertices.end(),
                       [&](const GeoVertex& v) { return v.level == level; });
}

bool geo_adjacent(const GeoGraph& gg, const GeoVertex& a,
                  const GeoVertex& b) {
  const GeoVertex& hi = a.level >= b.level ? a : b;
  const GeoVertex& lo = a.level >= b.level ? b : a;
  switch (hi.level - lo.level) {
    case 0:
      return is_subset(hi.support, closed_neighbourhood(gg.host, lo.support)) ||
             is_subset(lo.support, closed_neighbourhood(gg.host, hi.support));
    case 2:
      return is_subset(lo.support, hi.support);
    case 4:
      return is_subset(lo.support, hi.core);
    case 6:
      return is_subset(lo.support, hi.deep);
    default:
      return false;
  }
}

GeoGraph build_geo(const Graph& host, int n, const GeoOptions& options) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  if (options.margin < 0) throw PreconditionError("margin must be nonnegative");
  if (options.coords && options.coords->size() != host.order()) {
    throw PreconditionError("coordinate list does not match the host");
  }
  require_no_invalid(host);
  GeoGraph gg;
  gg.n = n;
  gg.host = host;
  std::vector<int> dist = boundary_distance(host);
  for (int m = n % 2; m <= n; m += 2) {
    for (auto& group : find_standard_charts(host, m)) {
      if (!far_enough(dist, group.support, options.margin)) continue;
      GeoVertex gv;
      gv.level = m;
      gv.support = group.support;
      gv.chart = std::move(group.charts.front());
      Graph sub = induced_subgraph(host, gv.support);
      for (Vertex i = 0; i < sub.order(); ++i) {
        if (classify_vertex(sub, i).kind != VertexClass::Kind::kInner) {
          gv.rim.push_back(gv.support[i]);
        }
      }
      gv.core = set_difference(gv.support, gv.rim);
      gv.deep = set_difference(gv.support, closed_neighbourhood(host, gv.rim));
      gg.vertices.push_back(std::move(gv));
    }
  }
  gg.containing.assign(host.order(), {});
  for (Vertex i = 0; i < gg.vertices.size(); ++i) {
    for (Vertex v : gg.vertices[i].support) gg.containing[v].push_back(i);
  }

  std::vector<std::optional<HexCoord>> shifts(gg.vertices.size());
  if (options.coords) {
    for (std::size_t i = 0; i < gg.vertices.size(); ++i) {
      std::vector<HexCoord> pts;
      for (Vertex v : gg.vertices[i].support) pts.push_back((*options.coords)[v]);
      shifts[i] = upward_shift(pts, gg.vertices[i].level);
    }
  }
  std::vector<VertexSet> hoods(gg.vertices.size());
  for (std::size_t i = 0; i < gg.vertices.size(); ++i) {
    hoods[i] = closed_neighbourhood(host, gg.vertices[i].support);
  }

  struct Part {
    std::vector<Edge> edges;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<Part> parts(jobs);
  auto work = [&](int job) {
    Part& part = parts[job];
    std::vector<Vertex> seen(gg.vertices.size(), ~Vertex{0});
    for (Vertex a = job; a < gg.vertices.size(); a += jobs) {
      const GeoVertex& ga = gg.vertices[a];
      for (Vertex x : hoods[a]) {
        for (Vertex b : gg.containing[x]) {
          if (b <= a || seen[b] == a) continue;
          seen[b] = a;
          const GeoVertex& gb = gg.vertices[b];
          const GeoVertex& hi = ga.level >= gb.level ? ga : gb;
          const GeoVertex& lo = ga.level >= gb.level ? gb : ga;
          bool adjacent = false;
          switch (hi.level - lo.level) {
            case 0:
              adjacent = is_subset(hi.support, hoods[&lo - gg.vertices.data()]) ||
                         is_subset(lo.support, hoods[&hi - gg.vertices.data()]);
              break;
            case 2:
              adjacent = is_subset(lo.support, hi.support);
              break;
            case 4:
              adjacent = is_subset(lo.support, hi.core);
              break;
            case 6:
              adjacent = is_subset(lo.support, hi.deep);
              break;
            default:
              break;
          }
          if (adjacent) part.edges.emplace_back(a, b);
          const auto& sh = shifts[&hi - gg.vertices.data()];
          const auto& sl = shifts[&lo - gg.vertices.data()];
          if (sh && sl) {
            ++part.checked;
            if (offset_rule(*sh, hi.level, *sl, lo.level) != adjacent) {
              ++part.mismatches;
            }
          }
        }
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  std::vector<Edge> edges;
  for (auto& part : parts) {
    edges.insert(edges.end(), part.edges.begin(), part.edges.end());
    gg.offset_checked += part.checked;
    gg.offset_mismatches += part.mismatches;
  }
  gg.graph = Graph::with_order(gg.vertices.size(), edges,
                               "geometric-" + std::to_string(n));
  return gg;
}

VertexSet clique_from_triangle(const GeoGraph& gg, const Chart& chart) {
  const int m = chart.m - 1;
  if (m < 0 || m > gg.n || (gg.n - m) % 2 != 0) {
    throw PreconditionError("triangle size does not match the level");
  }
  std::vector<Vertex> children;
  for (int e = 0; e < 3; ++e) {
    auto child = gg.find(chart.corner_child(e));
    if (!child) {
      throw PreconditionError("corner sub-triangle missing from the graph");
    }
    children.push_back(*child);
  }
  return common_neighbourhood(gg.graph, make_vertex_set(std::move(children)));
}

VertexSet clique_from_vertex(const GeoGraph& gg, Vertex v) {
  if (gg.n % 2 == 0) throw PreconditionError("vertex cliques need odd n");
  if (v >= gg.host.order()) throw InputError("unknown host vertex");
  std::vector<Vertex> facets;
  for (Vertex i : gg.containing[v]) {
    if (gg.vertices[i].level == 1) facets.push_back(i);
  }
  if (facets.empty()) throw PreconditionError("vertex lies on no facet");
  return common_neighbourhood(gg.graph, make_vertex_set(std::move(facets)));
}

VertexSet clique_summary(const GeoGraph& gg, const GeoVertex& s) {
  const int m = s.level;
  std::vector<Vertex> out;
  auto add = [&](const VertexSet& support) {
    if (auto i = gg.find(support)) out.push_back(*i);
  };
  // Candidates: geometric vertices meeting the support.
  std::set<Vertex> near;
  for (Vertex v : s.support) {
    near.insert(gg.containing[v].begin(), gg.containing[v].end());
  }
  if (m == 0) {
    Vertex v = s.support[0];
    for (Vertex i : near) {
      const GeoVertex& t = gg.vertices[i];
      if (t.level == 1) out.push_back(i);
      if (t.level == 3 && std::binary_search(t.core.begin(), t.core.end(), v)) {
        out.push_back(i);
      }
    }
    return make_vertex_set(std::move(out));
  }
  for (int e = 0; e < 3; ++e) add(s.chart.corner_child(e));
  for (Vertex i : near) {
    const GeoVertex& t = gg.vertices[i];
    if (t.level == m + 1) {
      for (int e = 0; e < 3; ++e) {
        if (t.chart.corner_child(e) == s.support) out.push_back(i);
      }
    }
    if (t.level == m + 3 && t.core == s.support) out.push_back(i);
    if (m == 1 && t.level == 2 && is_subset(s.support, t.support)) {
      // The size-2 triangle whose non-corner points are exactly the facet.
      VertexSet corners = make_vertex_set({t.chart.at({2, 0, 0}),
                                           t.chart.at({0, 2, 0}),
                                           t.chart.at({0, 0, 2})});
      if (set_difference(t.support, corners) == s.support) out.push_back(i);
    }
  }
  if (m == 2) {
    std::vector<Vertex> mid;
    for (const auto& p : nabla_coords(1, 2)) mid.push_back(s.chart.at(p));
    add(make_vertex_set(std::move(mid)));
  }
  if (m >= 3) add(s.core);
  return make_vertex_set(std::move(out));
}

std::vector<VertexSet> c_map(const GeoGraph& gg, const GeoGraph& next,
                             const std::vector<Vertex>& domain) {
  if (next.n != gg.n + 1) throw PreconditionError("levels must differ by one");
  std::vector<VertexSet> out;
  out.reserve(domain.size());
  for (Vertex i : domain) {
    const GeoVertex& s = next.vertices.at(i);
    out.push_back(s.level == 0 ? clique_from_vertex(gg, s.support[0])
                               : clique_from_triangle(gg, s.chart));
  }
  return out;
}

EquivalenceReport verify_geometric_equivalence(const Graph& host, int n,
                                               int margin, int jobs) {
  if (n < 0) throw PreconditionError("level must be nonnegative");
  if (margin < n + 3) {
    throw PreconditionError("margin must be at least n + 3");
  }
  require_no_invalid(host);
  auto classes = validate_surface(host);
  for (Vertex v : classes.inner) {
    if (host.degree(v) < 6) {
      throw PreconditionError("host has an inner vertex of degree below 6");
    }
  }
  long chi = static_cast<long>(host.order()) - static_cast<long>(host.size()) +
             static_cast<long>(facets(host).size());
  if (classes.boundary.empty() || chi != 1 ||
      !is_connected(classes.boundary_graph)) {
    throw PreconditionError("host must be a disc: one boundary cycle and "
                            "Euler characteristic 1");
  }
  EquivalenceReport report;
  report.n = n;
  report.margin = margin;
  GeoOptions opts;
  opts.jobs = jobs;
  GeoGraph gg = build_geo(host, n, opts);
  GeoGraph next = build_geo(host, n + 1, opts);
  std::vector<int> dist = boundary_distance(host);

  std::vector<Vertex> domain;
  for (Vertex i = 0; i < next.vertices.size(); ++i) {
    if (far_enough(dist, next.vertices[i].support, margin)) domain.push_back(i);
  }
  report.interior_vertices = domain.size();
  auto fail = [&](std::string msg) {
    if (report.failures.size() < 20) report.failures.push_back(std::move(msg));
  };

  std::vector<VertexSet> image = c_map(gg, next, domain);
  std::map<VertexSet, Vertex> preimage;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    const GeoVertex& s = next.vertices[domain[k]];
    std::string where = "level-" + std::to_string(s.level) + " vertex " +
                        std::to_string(domain[k]);
    if (!is_clique(gg.graph, image[k])) fail(where + ": image is not a clique");
    if (clique_summary(gg, s) != image[k]) {
      fail(where + ": image differs from its structural description");
    }
    if (!preimage.emplace(image[k], domain[k]).second) {
      fail(where + ": image shared with another vertex");
    }
  }

  for (const auto& clique : max_cliques(gg.graph)) {
    bool deep = true;
    for (Vertex x : clique) {
      deep = deep && far_enough(dist, gg.vertices[x].support, margin);
    }
    if (!deep) continue;
    ++report.interior_cliques;
    if (!preimage.count(clique)) fail("interior clique has no preimage");
  }

  std::unordered_map<Vertex, std::size_t> slot;
  for (std::size_t k = 0; k < domain.size(); ++k) slot[domain[k]] = k;
  std::vector<std::vector<std::size_t>> holders(gg.vertices.size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    for (Vertex x : image[k]) holders[x].push_back(k);
  }
  std::set<std::pair<std::size_t, std::size_t>> meeting;
  for (const auto& list : holders) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        meeting.emplace(std::min(list[i], list[j]), std::max(list[i], list[j]));
      }
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> adjacent;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    for (Vertex w : next.graph.neighbours(domain[k])) {
      auto it = slot.find(w);
      if (it != slot.end() && k < it->second) adjacent.emplace(k, it->second);
    }
  }
  report.adjacency_pairs = adjacent.size();
  if (meeting != adjacent) {
    std::size_t extra = 0;
    std::size_t missing = 0;
    for (const auto& p : meeting) extra += adjacent.count(p) ? 0 : 1;
    for (const auto& p : adjacent) missing += meeting.count(p) ? 0 : 1;
    fail("adjacency mismatch: " + std::to_string(extra) +
         " intersecting non-adjacent pairs, " + std::to_string(missing) +
         " adjacent disjoint pairs");
  }
  if (report.interior_vertices == 0) {
    report.failures.push_back("no vertex of level " + std::to_string(n + 1) +
                              " lies at the required margin");
  }
  report.ok = report.failures.empty();
  return report;
}

}  // namespace cliquedyn
