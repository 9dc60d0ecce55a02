#include "cliquedyn/covers.h"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>

#include "cliquedyn/charts.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/surface.h"

namespace cliquedyn {
namespace {

class Development {
 public:
  Development(const Graph& g, std::size_t budget) : g_(g), budget_(budget) {}

  Vertex add_lift(Vertex host, int depth) {
    if (proj_.size() >= budget_) {
      throw BudgetExceeded("cover ball exceeded " + std::to_string(budget_) +
                           " lifts");
    }
    proj_.push_back(host);
    depth_.push_back(depth);
    adj_.emplace_back();
    return static_cast<Vertex>(proj_.size() - 1);
  }

  // Lift adjacent to x projecting to host vertex h, if any.
  std::optional<Vertex> neighbour_over(Vertex x, Vertex h) const {
    auto it = adj_[x].find(h);
    if (it == adj_[x].end()) return std::nullopt;
    return it->second;
  }

  void connect(Vertex x, Vertex y) {
    auto link = [&](Vertex a, Vertex b) {
      auto [it, fresh] = adj_[a].emplace(proj_[b], b);
      if (!fresh && it->second != b) {
        throw PreconditionError("development does not close up consistently "
                                "around host vertex " +
                                std::to_string(g_.id(proj_[a])));
      }
    };
    link(x, y);
    link(y, x);
  }

  void complete_star(Vertex x) {
    VertexClass cls = classify_vertex(g_, proj_[x]);
    if (cls.kind != VertexClass::Kind::kInner) {
      throw PreconditionError("cover development needs a locally cyclic host; "
                              "vertex " + std::to_string(g_.id(proj_[x])) +
                              " is not inner");
    }
    const auto& ring = cls.order;
    const std::size_t d = ring.size();
    std::vector<std::optional<Vertex>> lift(d);
    for (std::size_t i = 0; i < d; ++i) lift[i] = neighbour_over(x, ring[i]);
    if (std::none_of(lift.begin(), lift.end(), [](auto& l) { return l; })) {
      for (std::size_t i = 0; i < d; ++i) {
        lift[i] = add_lift(ring[i], depth_[x] + 1);
        connect(x, *lift[i]);
      }
    }
    // Fill each gap walking forward from the lift just before it.
    for (std::size_t i = 0; i < d; ++i) {
      if (!lift[i] || lift[(i + 1) % d]) continue;
      for (std::size_t q = (i + 1) % d; !lift[q]; q = (q + 1) % d) {
        Vertex prev = *lift[(q + d - 1) % d];
        auto known = neighbour_over(prev, ring[q]);
        lift[q] = known ? *known : add_lift(ring[q], depth_[x] + 1);
        connect(x, *lift[q]);
        connect(prev, *lift[q]);
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      connect(*lift[i], *lift[(i + 1) % d]);
    }
  }

  CoverBall finish(Vertex base, int radius) const {
    std::vector<Edge> edges;
    for (Vertex x = 0; x < adj_.size(); ++x) {
      for (const auto& [h, y] : adj_[x]) {
        if (x < y) edges.emplace_back(x, y);
      }
    }
    CoverBall cb;
    cb.graph = Graph::with_order(proj_.size(), edges,
                                 "cover-" + g_.name() + "-r" +
                                     std::to_string(radius));
    cb.projection = proj_;
    cb.depth = depth_;
    cb.base = base;
    cb.radius = radius;
    for (Vertex x = 0; x < proj_.size(); ++x) {
      if (depth_[x] < radius) cb.interior.push_back(x);
    }
    return cb;
  }

  int depth(Vertex x) const { return depth_[x]; }
  std::size_t size() const { return proj_.size(); }

 private:
  const Graph& g_;
  std::size_t budget_;
  std::vector<Vertex> proj_;
  std::vector<int> depth_;
  // Neighbours keyed by their projection.
  std::vector<std::map<Vertex, Vertex>> adj_;
};

}  // namespace

CoverBall universal_cover_ball(const Graph& g, Vertex base, int radius,
                               std::size_t vertex_budget) {
  if (base >= g.order()) throw InputError("unknown base vertex");
  if (radius < 0) throw PreconditionError("radius must be nonnegative");
  Development dev(g, vertex_budget);
  Vertex root = dev.add_lift(base, 0);
  // Lifts are created in order of depth, so index order is BFS order.
  for (Vertex x = root; x < dev.size(); ++x) {
    if (dev.depth(x) >= radius) continue;
    dev.complete_star(x);
  }
  return dev.finish(root, radius);
}

CoverCheck validate_covering_map(const Graph& source, const Graph& target,
                                 const std::vector<Vertex>& projection,
                                 const VertexSet& check_at) {
  CoverCheck check;
  auto fail = [&](std::string msg) {
    if (check.failures.size() < 20) check.failures.push_back(std::move(msg));
  };
  if (projection.size() != source.order()) {
    fail("projection size does not match the source");
    return check;
  }
  for (Vertex p : projection) {
    if (p >= target.order()) {
      fail("projection leaves the target");
      return check;
    }
  }
  for (const auto& [u, v] : source.edges()) {
    if (!target.adjacent(projection[u], projection[v])) {
      fail("edge " + std::to_string(source.id(u)) + "-" +
           std::to_string(source.id(v)) + " does not map to an edge");
    }
  }
  for (Vertex u : check_at) {
    ++check.checked;
    Vertex pu = projection[u];
    std::vector<Vertex> images;
    for (Vertex w : source.neighbours(u)) images.push_back(projection[w]);
    std::sort(images.begin(), images.end());
    if (images != target.neighbours(pu)) {
      fail("edges at " + std::to_string(source.id(u)) + " do not lift uniquely");
      continue;
    }
    std::set<std::pair<Vertex, Vertex>> up;
    std::size_t count = 0;
    const auto& nb = source.neighbours(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!source.adjacent(nb[i], nb[j])) continue;
        ++count;
        Vertex a = projection[nb[i]];
        Vertex b = projection[nb[j]];
        up.emplace(std::min(a, b), std::max(a, b));
      }
    }
    std::size_t down = 0;
    const auto& tn = target.neighbours(pu);
    for (std::size_t i = 0; i < tn.size(); ++i) {
      for (std::size_t j = i + 1; j < tn.size(); ++j) {
        if (target.adjacent(tn[i], tn[j])) ++down;
      }
    }
    if (count != up.size() || up.size() != down) {
      fail("facets at " + std::to_string(source.id(u)) +
           " do not lift uniquely");
    }
  }
  check.ok = check.failures.empty();
  return check;
}

std::string to_string(Decision::Verdict verdict) {
  switch (verdict) {
    case Decision::Verdict::kConvergent:
      return "convergent";
    case Decision::Verdict::kDivergent:
      return "divergent";
    case Decision::Verdict::kUnsupported:
      return "unsupported";
  }
  return "unknown";
}

Decision decide_finite(const Graph& g) {
  Decision d;
  d.min_degree = g.min_degree();
  d.max_degree = g.max_degree();
  if (g.order() == 0 || !is_connected(g)) {
    d.gates.push_back("connected: no");
    d.reason = "input is empty or disconnected";
    return d;
  }
  d.gates.push_back("connected: yes");
  SurfaceReport report = validate_surface(g);
  if (!report.is_locally_cyclic) {
    std::string why;
    if (!report.invalid.empty()) {
      why = std::to_string(report.invalid.size()) +
            " vertices (first id " + std::to_string(g.id(report.invalid[0])) +
            ") have a neighbourhood that is not a cycle of length >= 4";
    } else {
      why = std::to_string(report.boundary.size()) +
            " boundary vertices (first id " +
            std::to_string(g.id(report.boundary[0])) +
            ") have a path as neighbourhood";
    }
    d.gates.push_back("locally cyclic: no (" + why + ")");
    d.reason = "not locally cyclic: " + why;
    return d;
  }
  d.gates.push_back("locally cyclic: yes");
  if (d.min_degree < 6) {
    d.gates.push_back("minimum degree >= 6: no (" +
                      std::to_string(d.min_degree) + ")");
    d.reason = "minimum degree " + std::to_string(d.min_degree) +
               " is below 6";
    return d;
  }
  d.gates.push_back("minimum degree >= 6: yes (" +
                    std::to_string(d.min_degree) + ")");
  bool six_regular = d.min_degree == 6 && d.max_degree == 6;
  d.gates.push_back(std::string("6-regular: ") + (six_regular ? "yes" : "no"));
  if (six_regular) {
    d.verdict = Decision::Verdict::kDivergent;
    d.reason = "6-regular locally cyclic graph";
  } else {
    d.verdict = Decision::Verdict::kConvergent;
    d.reason = "locally cyclic with minimum degree " +
               std::to_string(d.min_degree) + " and a vertex of degree " +
               std::to_string(d.max_degree);
  }
  return d;
}

EmbeddingBound delta_embedding_bound(const CoverBall& cb, int m_max) {
  if (m_max < 0) throw PreconditionError("m_max must be nonnegative");
  if (cb.radius < m_max + 1) {
    throw PreconditionError("ball radius must be at least m_max + 1");
  }
  Graph inside = induced_subgraph(cb.graph, cb.interior);
  EmbeddingBound bound;
  for (int m = 1; m <= m_max; ++m) {
    if (find_standard_charts(inside, m).empty()) {
      bound.bound_found = true;
      return bound;
    }
    bound.largest_embeddable = m;
  }
  return bound;
}

}  // namespace cliquedyn
