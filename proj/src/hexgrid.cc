#include "cliquedyn/hexgrid.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "cliquedyn/cliques.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/surface.h"

namespace cliquedyn {

std::string to_string(HexCoord p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
         std::to_string(p.c) + ")";
}

std::vector<HexCoord> level_offsets(int gap) {
  switch (gap) {
    case 0:
      return {kSteps.begin(), kSteps.end()};
    case 2:
      return {kDrop2.begin(), kDrop2.end()};
    case 4:
      return {kDrop4.begin(), kDrop4.end()};
    case 6:
      return {kDrop6};
    default:
      return {};
  }
}

int hex_distance(HexCoord p, HexCoord q) {
  HexCoord d = p - q;
  return std::max({std::abs(d.a), std::abs(d.b), std::abs(d.c)});
}

bool hex_adjacent(HexCoord p, HexCoord q) {
  return p.sum() == q.sum() && hex_distance(p, q) == 1;
}

HexCoord permute(HexCoord p, int which) {
  const auto& s = kPermutations[which];
  return {p[s[0]], p[s[1]], p[s[2]]};
}

std::optional<Vertex> HexRegion::at(HexCoord p) const {
  auto it = std::lower_bound(coords.begin(), coords.end(), p);
  if (it == coords.end() || *it != p) return std::nullopt;
  return static_cast<Vertex>(it - coords.begin());
}

VertexSet HexRegion::vertices_at(const std::vector<HexCoord>& points) const {
  std::vector<Vertex> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    auto v = at(p);
    if (!v) throw PreconditionError("point " + to_string(p) + " not in region");
    out.push_back(*v);
  }
  return make_vertex_set(std::move(out));
}

GraphFile HexRegion::to_file() const {
  GraphFile file{graph};
  for (Vertex v = 0; v < coords.size(); ++v) {
    file.labels[std::to_string(graph.id(v))] = {coords[v].a, coords[v].b,
                                                coords[v].c};
  }
  return file;
}

HexRegion hex_region(std::vector<HexCoord> points, std::string name) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  HexRegion region;
  region.coords = std::move(points);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < region.coords.size(); ++v) {
    for (const auto& d : kSteps) {
      auto w = region.at(region.coords[v] + d);
      if (w && v < *w) edges.emplace_back(v, *w);
    }
  }
  region.graph = Graph::with_order(region.coords.size(), edges,
                                   std::move(name));
  return region;
}

HexRegion gen_hex_patch(int radius) {
  if (radius < 0) throw PreconditionError("radius must be nonnegative");
  std::vector<HexCoord> points;
  for (int a = -radius; a <= radius; ++a) {
    for (int b = -radius; b <= radius; ++b) {
      HexCoord p{a, b, -a - b};
      if (hex_distance(p, {}) <= radius) points.push_back(p);
    }
  }
  return hex_region(std::move(points),
                    "hex-patch-" + std::to_string(radius));
}

std::vector<HexCoord> delta_coords(int m) {
  if (m < 0) throw PreconditionError("triangle size must be nonnegative");
  std::vector<HexCoord> out;
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; a + b <= m; ++b) out.push_back({a, b, m - a - b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

HexRegion gen_delta(int m) {
  return hex_region(delta_coords(m), "delta-" + std::to_string(m));
}

std::vector<HexCoord> nabla_coords(int side, int height) {
  if (side < 0 || (side + height) % 3 != 0) {
    throw PreconditionError("side + height must be a multiple of 3");
  }
  int top = (side + height) / 3;
  std::vector<HexCoord> out;
  for (const auto& p : delta_coords(side)) {
    out.push_back({top - p.a, top - p.b, top - p.c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

HexRegion gen_nabla(Nabla kind, int unit) {
  switch (kind) {
    case Nabla::kOne:
      return hex_region(nabla_coords(1, 2), "nabla-1");
    case Nabla::kOneShifted: {
      if (unit < 0 || unit > 2) throw PreconditionError("unit must be 0..2");
      std::vector<HexCoord> pts = nabla_coords(1, 2);
      for (auto& p : pts) p = p + kUnits[unit];
      return hex_region(std::move(pts),
                        "nabla-1-e" + std::to_string(unit + 1));
    }
    case Nabla::kTwo:
      return hex_region(nabla_coords(2, 4), "nabla-2");
    case Nabla::kThree:
      return hex_region(nabla_coords(3, 3), "nabla-3");
  }
  throw PreconditionError("unknown nabla kind");
}

std::vector<HexCoord> triangle_inclusion(int m, HexCoord t) {
  if (t.a < 0 || t.b < 0 || t.c < 0) {
    throw PreconditionError("inclusion shift must be nonnegative");
  }
  std::vector<HexCoord> out = delta_coords(m);
  for (auto& p : out) p = p + t;
  return out;
}

std::vector<DeltaInclusion> classify_delta_inclusions(int m, int k) {
  if (k < 0 || k > m) throw PreconditionError("need 0 <= k <= m");
  const int d = m - k;
  HexRegion host = gen_delta(m);
  const auto& pts = host.coords;
  std::set<std::vector<HexCoord>> found;
  if (d == 0) {
    for (const auto& p : pts) found.insert({p});
  } else {
    Graph model = gen_delta(d).graph;
    const std::size_t want = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (hex_distance(pts[i], pts[j]) != d) continue;
        for (std::size_t l = j + 1; l < pts.size(); ++l) {
          if (hex_distance(pts[i], pts[l]) != d ||
              hex_distance(pts[j], pts[l]) != d) {
            continue;
          }
          std::vector<HexCoord> inside;
          for (const auto& p : pts) {
            if (hex_distance(p, pts[i]) + hex_distance(p, pts[j]) +
                    hex_distance(p, pts[l]) == 2 * d) {
              inside.push_back(p);
            }
          }
          if (inside.size() != want) continue;
          Graph sub = induced_subgraph(host.graph, host.vertices_at(inside));
          if (is_isomorphic(sub, model).isomorphic()) found.insert(inside);
        }
      }
    }
  }
  std::vector<DeltaInclusion> out;
  for (const auto& points : found) {
    DeltaInclusion inc;
    inc.points = points;
    HexCoord low = points.front();
    for (const auto& p : points) {
      low = {std::min(low.a, p.a), std::min(low.b, p.b), std::min(low.c, p.c)};
    }
    if (triangle_inclusion(d, low) == points) {
      inc.kind = DeltaInclusion::Kind::kTranslate;
      inc.shift = low;
    } else if (m == 2 && d == 1 && points == nabla_coords(1, 2)) {
      inc.kind = DeltaInclusion::Kind::kNablaOne;
    } else if (m == 4 && d == 2 && points == nabla_coords(2, 4)) {
      inc.kind = DeltaInclusion::Kind::kNablaTwo;
    } else if (m == 3 && d == 1) {
      for (const auto& e : kUnits) {
        std::vector<HexCoord> shifted = nabla_coords(1, 2);
        for (auto& p : shifted) p = p + e;
        std::sort(shifted.begin(), shifted.end());
        if (shifted == points) inc.kind = DeltaInclusion::Kind::kNablaOneShifted;
      }
    }
    out.push_back(std::move(inc));
  }
  return out;
}

Vertex LocalHexGraph::index(int level, HexCoord offset) const {
  Node key{level, offset};
  for (Vertex v = 0; v < nodes.size(); ++v) {
    if (nodes[v] == key) return v;
  }
  throw PreconditionError("no local node at level " + std::to_string(level) +
                          " offset " + to_string(offset));
}

GraphFile LocalHexGraph::to_file() const {
  GraphFile file{graph};
  for (Vertex v = 0; v < nodes.size(); ++v) {
    file.labels[std::to_string(graph.id(v))] = {
        {"level", nodes[v].level},
        {"offset", {nodes[v].offset.a, nodes[v].offset.b, nodes[v].offset.c}}};
  }
  return file;
}

LocalHexGraph build_lhg() {
  LocalHexGraph lhg;
  lhg.nodes.push_back({0, {0, 0, 0}});
  for (const auto& d : kSteps) lhg.nodes.push_back({0, d});
  for (const auto& d : kDrop2) lhg.nodes.push_back({-2, d});
  for (const auto& d : kDrop4) lhg.nodes.push_back({-4, d});
  lhg.nodes.push_back({-6, kDrop6});
  std::sort(lhg.nodes.begin(), lhg.nodes.end(), [](const auto& x,
                                                   const auto& y) {
    return std::pair(-x.level, x.offset) < std::pair(-y.level, y.offset);
  });
  std::vector<Edge> edges;
  for (Vertex u = 0; u < lhg.nodes.size(); ++u) {
    for (Vertex v = u + 1; v < lhg.nodes.size(); ++v) {
      const auto& hi = lhg.nodes[u].level >= lhg.nodes[v].level ? lhg.nodes[u]
                                                                : lhg.nodes[v];
      const auto& lo = lhg.nodes[u].level >= lhg.nodes[v].level ? lhg.nodes[v]
                                                                : lhg.nodes[u];
      auto offsets = level_offsets(hi.level - lo.level);
      if (std::find(offsets.begin(), offsets.end(), lo.offset - hi.offset) !=
          offsets.end()) {
        edges.emplace_back(u, v);
      }
    }
  }
  lhg.graph = Graph::with_order(lhg.nodes.size(), edges, "local-hex-graph");
  return lhg;
}

std::vector<VertexSet> lhg_cliques_through_origin(const LocalHexGraph& lhg) {
  Vertex origin = lhg.index(0, {0, 0, 0});
  std::vector<VertexSet> out;
  for (auto& c : max_cliques(lhg.graph)) {
    if (std::binary_search(c.begin(), c.end(), origin)) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

HexRegion gen_torus(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("torus periods must be positive");
  HexRegion region;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) region.coords.push_back({i, j, -i - j});
  }
  auto wrap = [](int x, int n) { return ((x % n) + n) % n; };
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      Vertex v = static_cast<Vertex>(i * q + j);
      for (const auto& d : kSteps) {
        Vertex w = static_cast<Vertex>(wrap(i + d.a, p) * q + wrap(j + d.b, q));
        if (v == w) {
          throw PreconditionError("torus periods too small: self-loop");
        }
        edges.emplace_back(std::min(v, w), std::max(v, w));
      }
    }
  }
  region.graph = Graph::with_order(
      region.coords.size(), edges,
      "torus-" + std::to_string(p) + "x" + std::to_string(q));
  SurfaceReport report = validate_surface(region.graph);
  if (!report.is_locally_cyclic) {
    throw PreconditionError("torus periods too small: not locally cyclic");
  }
  return region;
}

Graph gen_octahedron() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      if (v != u + 3) edges.emplace_back(u, v);
    }
  }
  return Graph::with_order(6, edges, "octahedron");
}

Graph gen_icosahedron() {
  // Two poles and two staggered pentagons.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    Vertex upper = 1 + i;
    Vertex lower = 6 + i;
    edges.emplace_back(0, upper);
    edges.emplace_back(11, lower);
    edges.emplace_back(upper, 1 + (i + 1) % 5);
    edges.emplace_back(lower, 6 + (i + 1) % 5);
    edges.emplace_back(upper, lower);
    edges.emplace_back(upper, 6 + (i + 1) % 5);
  }
  return Graph::with_order(12, edges, "icosahedron");
}

Graph gen_complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) {
      edges.emplace_back(u, v);
    }
  }
  return Graph::with_order(n, edges, "K" + std::to_string(n));
}

}  // namespace cliquedyn
