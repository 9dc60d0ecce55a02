#include "cliquedyn/charts.h"

#include <algorithm>
#include <random>
#include <set>

#include "cliquedyn/errors.h"
#include "cliquedyn/surface.h"

namespace cliquedyn {
namespace {

// Placement order for the triangle: each point after the first has as many
// already placed neighbours as possible.
struct Template {
  std::vector<HexCoord> coords;
  std::vector<int> order;
  std::vector<std::vector<int>> placed_adjacent;
  std::vector<std::vector<int>> placed_apart;

  explicit Template(int m) : coords(delta_coords(m)) {
    const int n = static_cast<int>(coords.size());
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      int score = -1;
      for (int i = 0; i < n; ++i) {
        if (placed[i]) continue;
        int s = 0;
        for (int j = 0; j < n; ++j) {
          if (placed[j] && hex_adjacent(coords[i], coords[j])) ++s;
        }
        if (s > score) {
          score = s;
          best = i;
        }
      }
      if (step == 0) best = static_cast<int>(std::find(coords.begin(), coords.end(),
                                                       HexCoord{m, 0, 0}) -
                                             coords.begin());
      std::vector<int> adj;
      std::vector<int> apart;
      for (int j : order) {
        (hex_adjacent(coords[best], coords[j]) ? adj : apart).push_back(j);
      }
      placed[best] = true;
      order.push_back(best);
      placed_adjacent.push_back(std::move(adj));
      placed_apart.push_back(std::move(apart));
    }
  }
};

void embed(const Graph& g, const Template& t, std::size_t step,
           std::vector<Vertex>& image, std::vector<bool>& used,
           std::vector<std::vector<Vertex>>& out) {
  if (step == t.order.size()) {
    out.push_back(image);
    return;
  }
  const int slot = t.order[step];
  const auto& adj = t.placed_adjacent[step];
  auto try_vertex = [&](Vertex v) {
    if (used[v]) return;
    for (int j : adj) {
      if (!g.adjacent(v, image[j])) return;
    }
    for (int j : t.placed_apart[step]) {
      if (g.adjacent(v, image[j])) return;
    }
    used[v] = true;
    image[slot] = v;
    embed(g, t, step + 1, image, used, out);
    used[v] = false;
  };
  if (adj.empty()) {
    for (Vertex v = 0; v < g.order(); ++v) try_vertex(v);
  } else {
    for (Vertex v : g.neighbours(image[adj[0]])) try_vertex(v);
  }
}

std::vector<Chart> all_charts(const Graph& g, int m) {
  if (m < 0) throw PreconditionError("triangle size must be nonnegative");
  Template t(m);
  std::vector<std::vector<Vertex>> images;
  std::vector<Vertex> image(t.coords.size());
  std::vector<bool> used(g.order(), false);
  embed(g, t, 0, image, used, images);
  std::vector<Chart> out;
  out.reserve(images.size());
  for (auto& img : images) out.push_back({m, t.coords, std::move(img)});
  return out;
}

bool edge_is_inner(const Graph& g, Vertex u, Vertex v) {
  return set_intersection(g.neighbours(u), g.neighbours(v)).size() == 2;
}

// Image of x forced by the facets {x, y, z} whose neighbour {y, z, w} across
// an inner edge is already mapped. Disagreeing facets raise InjectivityError.
std::optional<Vertex> derive(const Graph& g, HexCoord x,
                             const std::map<HexCoord, Vertex>& map) {
  std::optional<Vertex> derived;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      HexCoord y = x + kSteps[i];
      HexCoord z = x + kSteps[j];
      if (!hex_adjacent(y, z)) continue;
      auto my = map.find(y);
      auto mz = map.find(z);
      auto mw = map.find(y + z - x);
      if (my == map.end() || mz == map.end() || mw == map.end()) continue;
      if (!edge_is_inner(g, my->second, mz->second)) continue;
      VertexSet both = set_intersection(g.neighbours(my->second),
                                        g.neighbours(mz->second));
      if (!std::binary_search(both.begin(), both.end(), mw->second)) {
        throw InjectivityError("facet path reaches " + to_string(x) +
                               " through an inconsistent edge");
      }
      Vertex v = both[0] == mw->second ? both[1] : both[0];
      if (derived && *derived != v) {
        throw InjectivityError("two facet paths give different images for " +
                               to_string(x));
      }
      derived = v;
    }
  }
  return derived;
}

// Glues facets outward from the mapped points until every point of `domain`
// has an image. Returns false if some point is unreachable.
bool glue(const Graph& g, const std::vector<HexCoord>& domain,
          std::map<HexCoord, Vertex>& map, std::uint64_t seed) {
  std::vector<HexCoord> pending;
  for (const auto& p : domain) {
    if (!map.count(p)) pending.push_back(p);
  }
  const std::vector<HexCoord> added = pending;
  std::mt19937_64 rng(seed);
  while (!pending.empty()) {
    if (seed != 0) std::shuffle(pending.begin(), pending.end(), rng);
    std::vector<HexCoord> still;
    for (const auto& x : pending) {
      if (auto v = derive(g, x, map)) {
        map[x] = *v;
      } else {
        still.push_back(x);
      }
    }
    if (still.size() == pending.size()) return false;
    pending = std::move(still);
  }
  for (const auto& x : added) {
    if (derive(g, x, map) != map.at(x)) {
      throw InjectivityError("facet paths disagree at " + to_string(x));
    }
  }
  return true;
}

// Whether the points embed injectively as an induced copy of their hex
// neighbourhood structure.
bool embeds_induced(const Graph& g, const std::vector<HexCoord>& points,
                    const std::map<HexCoord, Vertex>& map) {
  std::vector<Vertex> img;
  for (const auto& p : points) img.push_back(map.at(p));
  if (make_vertex_set(img).size() != img.size()) return false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (hex_adjacent(points[i], points[j]) != g.adjacent(img[i], img[j])) {
        return false;
      }
    }
  }
  return true;
}

VertexSet image_of(const std::vector<HexCoord>& points,
                   const std::map<HexCoord, Vertex>& map) {
  std::vector<Vertex> img;
  for (const auto& p : points) img.push_back(map.at(p));
  return make_vertex_set(std::move(img));
}

int margin_of(const Graph& g, const VertexSet& s,
              const std::vector<int>* precomputed) {
  std::vector<int> local;
  if (!precomputed) {
    local = boundary_distance(g);
    precomputed = &local;
  }
  int best = -1;
  for (Vertex v : s) {
    int d = (*precomputed)[v];
    if (d < 0) return -1;  // no boundary at all
    best = best < 0 ? d : std::min(best, d);
  }
  return best;
}

}  // namespace

Vertex Chart::at(HexCoord p) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), p);
  if (it == domain.end() || *it != p) {
    throw PreconditionError("point " + to_string(p) + " outside chart domain");
  }
  return image[it - domain.begin()];
}

VertexSet Chart::support() const { return make_vertex_set(image); }

VertexSet Chart::corner_child(int unit) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i][unit] >= 1) out.push_back(image[i]);
  }
  return make_vertex_set(std::move(out));
}

Chart Chart::permuted(int which) const {
  Chart out{m, domain, image};
  for (std::size_t i = 0; i < domain.size(); ++i) {
    out.image[i] = at(permute(domain[i], which));
  }
  return out;
}

std::vector<ChartGroup> find_standard_charts(const Graph& g, int m) {
  std::map<VertexSet, std::vector<Chart>> groups;
  for (auto& c : all_charts(g, m)) {
    VertexSet s = c.support();
    groups[s].push_back(std::move(c));
  }
  std::vector<ChartGroup> out;
  for (auto& [s, charts] : groups) {
    std::sort(charts.begin(), charts.end(),
              [](const Chart& x, const Chart& y) { return x.image < y.image; });
    out.push_back({s, std::move(charts)});
  }
  return out;
}

std::optional<Chart> chart_for(const Graph& g, const VertexSet& s, int m) {
  if (s.size() != delta_coords(m).size()) return std::nullopt;
  Graph sub = induced_subgraph(g, s);
  auto charts = all_charts(sub, m);
  if (charts.empty()) return std::nullopt;
  auto best = std::min_element(
      charts.begin(), charts.end(),
      [](const Chart& x, const Chart& y) { return x.image < y.image; });
  Chart out = *best;
  for (auto& v : out.image) v = s[v];
  return out;
}

ExtendedChart extend_chart(const Graph& g, const Chart& chart,
                           const ExtendOptions& options) {
  const int m = chart.m;
  if (m < 3) throw PreconditionError("chart extension needs m >= 3");
  int margin = margin_of(g, chart.support(), options.boundary_distance);
  if (margin >= 0 && margin < 2) {
    throw PreconditionError("chart extension needs distance >= 2 from the "
                            "host boundary");
  }
  std::map<HexCoord, Vertex> base;
  for (std::size_t i = 0; i < chart.domain.size(); ++i) {
    base[chart.domain[i]] = chart.image[i];
  }

  ExtendedChart out;
  out.m = m;
  out.map = base;
  auto merge = [&](const std::map<HexCoord, Vertex>& part) {
    for (const auto& [p, v] : part) {
      auto [it, fresh] = out.map.emplace(p, v);
      if (!fresh && it->second != v) {
        throw InjectivityError("translates disagree at " + to_string(p));
      }
    }
  };

  std::vector<std::pair<int, VertexSet>> found;
  for (int k : options.direction_order) {
    HexCoord d = kSteps[k];
    std::vector<HexCoord> shifted = chart.domain;
    for (auto& p : shifted) p = p + d;
    std::map<HexCoord, Vertex> part = base;
    if (!glue(g, shifted, part, options.shuffle_seed)) continue;
    if (!embeds_induced(g, shifted, part)) continue;
    merge(part);
    found.emplace_back(k, image_of(shifted, part));
  }
  std::sort(found.begin(), found.end());
  for (auto& [k, s] : found) {
    out.realized.push_back(k);
    out.neighbours.push_back(std::move(s));
  }
  if (m == 3) {
    std::vector<HexCoord> nabla = nabla_coords(3, 3);
    std::map<HexCoord, Vertex> part = base;
    if (glue(g, nabla, part, options.shuffle_seed) &&
        embeds_induced(g, nabla, part)) {
      merge(part);
      out.nabla_realized = true;
      out.neighbours.push_back(image_of(nabla, part));
    }
  }
  std::vector<Vertex> all;
  for (const auto& [p, v] : out.map) all.push_back(v);
  if (make_vertex_set(all).size() != all.size()) {
    throw InjectivityError("extended chart is not injective");
  }
  std::sort(out.neighbours.begin(), out.neighbours.end());
  return out;
}

std::vector<VertexSet> neighbour_triangles(const Graph& g, const VertexSet& s,
                                           int m) {
  auto chart = chart_for(g, s, m);
  if (!chart) {
    throw PreconditionError("vertex set is not a triangle of the given size");
  }
  if (m >= 3) return extend_chart(g, *chart).neighbours;
  int margin = margin_of(g, s, nullptr);
  if (margin >= 0 && margin < 1) {
    throw PreconditionError("neighbour search needs distance >= 1 from the "
                            "host boundary");
  }
  VertexSet hood = closed_neighbourhood(g, s);
  Graph sub = induced_subgraph(g, hood);
  std::vector<VertexSet> out;
  for (const auto& group : find_standard_charts(sub, m)) {
    std::vector<Vertex> support;
    for (Vertex v : group.support) support.push_back(hood[v]);
    VertexSet t = make_vertex_set(std::move(support));
    if (t != s) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cliquedyn
