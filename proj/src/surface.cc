#include "cliquedyn/surface.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "cliquedyn/errors.h"

namespace cliquedyn {
namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

Facet make_facet(Vertex a, Vertex b, Vertex c) {
  Facet f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

VertexSet common_neighbours(const Graph& g, Vertex u, Vertex v) {
  return set_intersection(g.neighbours(u), g.neighbours(v));
}

}  // namespace

VertexClass classify_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw InputError("unknown vertex index");
  const auto& nb = g.neighbours(v);
  const std::size_t k = nb.size();
  std::vector<std::vector<std::size_t>> local(k);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.adjacent(nb[i], nb[j])) {
        local[i].push_back(j);
        local[j].push_back(i);
        ++edges;
      }
    }
  }
  VertexClass result;
  auto walk_from = [&](std::size_t start) {
    std::vector<Vertex> order;
    std::vector<bool> seen(k, false);
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      order.push_back(nb[cur]);
      std::size_t next = cur;
      for (std::size_t w : local[cur]) {
        if (!seen[w]) {
          next = w;
          break;
        }
      }
      cur = next;
    }
    return order;
  };
  bool all_two = std::all_of(local.begin(), local.end(),
                             [](const auto& l) { return l.size() == 2; });
  if (k >= 4 && edges == k && all_two) {
    auto order = walk_from(0);
    if (order.size() == k) {
      result.kind = VertexClass::Kind::kInner;
      result.order = std::move(order);
    }
    return result;
  }
  if (k >= 2 && edges == k - 1) {
    std::size_t ends = 0;
    std::size_t first_end = k;
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (local[i].size() == 1) {
        ++ends;
        if (first_end == k) first_end = i;
      } else if (local[i].size() != 2) {
        ok = false;
      }
    }
    if (ok && ends == 2) {
      auto order = walk_from(first_end);
      if (order.size() == k) {
        result.kind = VertexClass::Kind::kBoundary;
        result.order = std::move(order);
      }
    }
  }
  return result;
}

SurfaceReport validate_surface(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  SurfaceReport report;
  report.kinds.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto kind = classify_vertex(g, v).kind;
    report.kinds[v] = kind;
    switch (kind) {
      case VertexClass::Kind::kInner:
        report.inner.push_back(v);
        break;
      case VertexClass::Kind::kBoundary:
        report.boundary.push_back(v);
        break;
      case VertexClass::Kind::kInvalid:
        report.invalid.push_back(v);
        break;
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (common_neighbours(g, u, v).size() != 2) {
      report.boundary_edges.emplace_back(u, v);
    }
  }
  Graph sub = induced_subgraph(g, report.boundary);
  std::vector<Edge> kept;
  for (const auto& [u, v] : report.boundary_edges) {
    auto iu = std::lower_bound(report.boundary.begin(), report.boundary.end(), u);
    auto iv = std::lower_bound(report.boundary.begin(), report.boundary.end(), v);
    if (iu != report.boundary.end() && *iu == u &&
        iv != report.boundary.end() && *iv == v) {
      kept.emplace_back(static_cast<Vertex>(iu - report.boundary.begin()),
                        static_cast<Vertex>(iv - report.boundary.begin()));
    }
  }
  report.boundary_graph = Graph(sub.ids(), kept, g.name() + "-boundary");
  report.min_degree = g.min_degree();
  report.is_locally_cyclic = report.boundary.empty() && report.invalid.empty();
  return report;
}

std::vector<int> boundary_distance(const Graph& g) {
  VertexSet sources;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (classify_vertex(g, v).kind != VertexClass::Kind::kInner) {
      sources.push_back(v);
    }
  }
  if (sources.empty()) return std::vector<int>(g.order(), -1);
  return bfs_distances(g, sources);
}

std::vector<Facet> facets(const Graph& g) {
  std::vector<Facet> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& nu = g.neighbours(u);
    for (auto i = std::upper_bound(nu.begin(), nu.end(), u); i != nu.end();
         ++i) {
      for (auto j = i + 1; j != nu.end(); ++j) {
        if (g.adjacent(*i, *j)) out.push_back({u, *i, *j});
      }
    }
  }
  return out;
}

bool PathDegree::contains(int x) const {
  return std::find(values.begin(), values.end(), x) != values.end();
}

PathDegree path_degree(const Graph& g, const std::vector<Vertex>& walk,
                       std::size_t i) {
  if (i == 0 || i + 1 >= walk.size()) {
    throw PreconditionError("path degree needs an interior walk index");
  }
  Vertex prev = walk[i - 1];
  Vertex x = walk[i];
  Vertex next = walk[i + 1];
  if (prev == next) throw PreconditionError("walk turns back on itself");
  if (!g.adjacent(prev, x) || !g.adjacent(x, next)) {
    throw PreconditionError("walk steps along a non-edge");
  }
  VertexClass cls = classify_vertex(g, x);
  if (cls.kind == VertexClass::Kind::kInvalid) {
    throw PreconditionError("path degree undefined at a vertex whose "
                            "neighbourhood is neither a cycle nor a path");
  }
  auto pos = [&](Vertex w) {
    return static_cast<int>(std::find(cls.order.begin(), cls.order.end(), w) -
                            cls.order.begin());
  };
  int a = pos(prev);
  int b = pos(next);
  PathDegree deg;
  if (cls.kind == VertexClass::Kind::kInner) {
    int len = static_cast<int>(cls.order.size());
    int l1 = ((b - a) % len + len) % len;
    deg.values = {std::min(l1, len - l1), std::max(l1, len - l1)};
  } else {
    deg.values = {std::abs(b - a)};
  }
  return deg;
}

bool is_straight(const Graph& g, const std::vector<Vertex>& walk) {
  if (walk.size() < 3) return false;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!g.adjacent(walk[i], walk[i + 1])) return false;
  }
  for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
    if (walk[i - 1] == walk[i + 1]) return false;
    if (!path_degree(g, walk, i).contains(3)) return false;
  }
  return true;
}

namespace {

class StraightSteps {
 public:
  explicit StraightSteps(const Graph& g) : classes_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) classes_[v] = classify_vertex(g, v);
  }

  // Vertices c such that (a, b, c) is straight at b.
  std::vector<Vertex> after(Vertex a, Vertex b) const {
    const VertexClass& cls = classes_[b];
    std::vector<Vertex> out;
    if (cls.kind == VertexClass::Kind::kInvalid) return out;
    const auto& ord = cls.order;
    int len = static_cast<int>(ord.size());
    int p = static_cast<int>(std::find(ord.begin(), ord.end(), a) - ord.begin());
    if (p == len) return out;
    for (int delta : {-3, 3}) {
      int q = p + delta;
      if (cls.kind == VertexClass::Kind::kInner) {
        q = ((q % len) + len) % len;
      } else if (q < 0 || q >= len) {
        continue;
      }
      if (ord[q] != a) out.push_back(ord[q]);
    }
    out = make_vertex_set(std::move(out));
    return out;
  }

 private:
  std::vector<VertexClass> classes_;
};

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  std::vector<Vertex> best;
  const std::size_t n = cycle.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Vertex> cand(n);
      for (std::size_t i = 0; i < n; ++i) cand[i] = cycle[(r + i) % n];
      if (best.empty() || cand < best) best = cand;
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  best.push_back(best.front());
  return best;
}

}  // namespace

std::vector<StraightPath> maximal_straight_paths(const Graph& g, int min_len,
                                                 std::size_t step_budget) {
  StraightSteps steps(g);
  std::set<std::vector<Vertex>> open;
  std::set<std::vector<Vertex>> closed;
  std::size_t used = 0;

  std::vector<Vertex> walk;
  std::unordered_set<std::uint64_t> edges;
  // Depth-first extension of `walk`; `from_open_start` says whether the first
  // edge cannot be extended backwards.
  auto extend = [&](auto&& self, bool from_open_start) -> void {
    if (++used > step_budget) {
      throw BudgetExceeded("straight path enumeration exceeded its budget");
    }
    Vertex a = walk[walk.size() - 2];
    Vertex b = walk.back();
    auto next = steps.after(a, b);
    if (!from_open_start && walk.size() >= 4 && b == walk[0] &&
        std::binary_search(next.begin(), next.end(), walk[1])) {
      if (static_cast<int>(walk.size()) - 1 >= min_len) {
        closed.insert(canonical_cycle({walk.begin(), walk.end() - 1}));
      }
      return;
    }
    bool extended = false;
    for (Vertex c : next) {
      auto key = edge_key(b, c);
      if (edges.count(key)) continue;
      extended = true;
      edges.insert(key);
      walk.push_back(c);
      self(self, from_open_start);
      walk.pop_back();
      edges.erase(key);
    }
    if (!extended && from_open_start && walk.size() >= 3 &&
        static_cast<int>(walk.size()) - 1 >= min_len) {
      std::vector<Vertex> rev(walk.rbegin(), walk.rend());
      open.insert(std::min(walk, rev));
    }
  };

  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      bool has_predecessor = !steps.after(v, u).empty();
      walk = {u, v};
      edges = {edge_key(u, v)};
      extend(extend, !has_predecessor);
    }
  }
  std::vector<StraightPath> out;
  for (const auto& w : open) out.push_back({w, false});
  for (const auto& w : closed) out.push_back({w, true});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.closed, x.walk) < std::pair(y.closed, y.walk);
  });
  return out;
}

std::vector<Facet> umbrella(const Graph& g, Vertex v) {
  VertexClass cls = classify_vertex(g, v);
  if (cls.kind != VertexClass::Kind::kInner) {
    throw PreconditionError("umbrella needs an inner vertex");
  }
  std::vector<Facet> out;
  const auto& ord = cls.order;
  for (std::size_t i = 0; i < ord.size(); ++i) {
    out.push_back(make_facet(v, ord[i], ord[(i + 1) % ord.size()]));
  }
  return out;
}

DischargeResult disc_discharge_check(const Graph& g,
                                     std::vector<Vertex> boundary) {
  if (boundary.size() >= 2 && boundary.front() == boundary.back()) {
    boundary.pop_back();
  }
  const std::size_t r = boundary.size();
  if (r < 3) throw PreconditionError("disc boundary needs at least 3 vertices");
  if (make_vertex_set(boundary).size() != r) {
    throw PreconditionError("disc boundary must be a simple cycle");
  }
  std::unordered_set<std::uint64_t> cut;
  for (std::size_t j = 0; j < r; ++j) {
    Vertex u = boundary[j];
    Vertex v = boundary[(j + 1) % r];
    if (!g.adjacent(u, v)) {
      throw PreconditionError("disc boundary steps along a non-edge");
    }
    cut.insert(edge_key(u, v));
  }

  auto flood = [&](const Facet& seed) {
    std::set<Facet> seen{seed};
    std::deque<Facet> queue{seed};
    while (!queue.empty()) {
      Facet f = queue.front();
      queue.pop_front();
      for (int e = 0; e < 3; ++e) {
        Vertex u = f[e];
        Vertex v = f[(e + 1) % 3];
        if (cut.count(edge_key(u, v))) continue;
        for (Vertex w : common_neighbours(g, u, v)) {
          Facet h = make_facet(u, v, w);
          if (seen.insert(h).second) queue.push_back(h);
        }
      }
    }
    return seen;
  };

  // A side is a disc when its facets have exactly the cycle as boundary and
  // Euler characteristic 1.
  auto is_disc = [&](const std::set<Facet>& side) {
    std::map<std::uint64_t, int> edge_count;
    std::set<Vertex> verts;
    for (const auto& f : side) {
      for (int e = 0; e < 3; ++e) {
        ++edge_count[edge_key(f[e], f[(e + 1) % 3])];
        verts.insert(f[e]);
      }
    }
    for (const auto& [key, count] : edge_count) {
      bool on_cycle = cut.count(key) > 0;
      if (on_cycle != (count == 1)) return false;
      if (count > 2) return false;
    }
    for (auto key : cut) {
      if (!edge_count.count(key)) return false;
    }
    long chi = static_cast<long>(verts.size()) -
               static_cast<long>(edge_count.size()) +
               static_cast<long>(side.size());
    return chi == 1;
  };

  std::vector<std::set<Facet>> sides;
  for (Vertex w : common_neighbours(g, boundary[0], boundary[1])) {
    Facet seed = make_facet(boundary[0], boundary[1], w);
    bool known = false;
    for (const auto& s : sides) known = known || s.count(seed);
    if (!known) sides.push_back(flood(seed));
  }
  const std::set<Facet>* chosen = nullptr;
  for (const auto& s : sides) {
    if (is_disc(s) && (!chosen || s.size() < chosen->size())) chosen = &s;
  }
  if (!chosen) {
    throw PreconditionError("boundary walk does not bound a disc of facets");
  }

  DischargeResult result;
  result.disc.assign(chosen->begin(), chosen->end());
  VertexSet on_cycle = make_vertex_set(boundary);
  std::vector<Vertex> verts;
  for (const auto& f : result.disc) verts.insert(verts.end(), f.begin(), f.end());
  result.interior = set_difference(make_vertex_set(verts), on_cycle);
  int residual = 6;
  for (Vertex v : result.interior) {
    residual -= 6 - static_cast<int>(g.degree(v));
  }
  for (Vertex v : boundary) {
    int beta = 0;
    for (const auto& f : result.disc) {
      if (f[0] == v || f[1] == v || f[2] == v) ++beta;
    }
    result.boundary_facet_degree.push_back(beta);
    residual -= 3 - beta;
  }
  result.residual = residual;
  return result;
}

}  // namespace cliquedyn
