#include "cliquedyn/graph.h"

#include <algorithm>
#include <deque>
#include <iterator>

#include "cliquedyn/errors.h"

namespace cliquedyn {

Graph::Graph(std::vector<VertexId> ids, const std::vector<Edge>& edges,
             std::string name)
    : adj_(ids.size()), ids_(std::move(ids)), name_(std::move(name)) {
  index_.reserve(ids_.size());
  for (Vertex v = 0; v < ids_.size(); ++v) {
    if (!index_.emplace(ids_[v], v).second) {
      throw InputError("duplicate vertex id " + std::to_string(ids_[v]));
    }
  }
  for (const auto& [u, v] : edges) {
    if (u >= adj_.size() || v >= adj_.size()) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(ids_[u]));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    num_edges_ += nb.size();
  }
  num_edges_ /= 2;
}

Graph Graph::with_order(std::size_t n, const std::vector<Edge>& edges,
                        std::string name) {
  std::vector<VertexId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<VertexId>(i);
  return Graph(std::move(ids), edges, std::move(name));
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::optional<Vertex> Graph::find(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(VertexId id) const {
  auto v = find(id);
  if (!v) throw InputError("unknown vertex id " + std::to_string(id));
  return *v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t best = adj_.empty() ? 0 : adj_[0].size();
  for (const auto& nb : adj_) best = std::min(best, nb.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adj_) best = std::max(best, nb.size());
  return best;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return vertices;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v >= g.order()) throw InputError("unknown vertex index");
  }
}

}  // namespace

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<VertexId> ids;
  ids.reserve(s.size());
  for (Vertex v : s) ids.push_back(g.id(v));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbours(s[i])) {
      auto it = std::lower_bound(s.begin(), s.end(), w);
      if (it != s.end() && *it == w) {
        Vertex j = static_cast<Vertex>(it - s.begin());
        if (i < j) edges.emplace_back(i, j);
      }
    }
  }
  return Graph(std::move(ids), edges, g.name());
}

VertexSet closed_neighbourhood(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<Vertex> out(s.begin(), s.end());
  for (Vertex v : s) {
    out.insert(out.end(), g.neighbours(v).begin(), g.neighbours(v).end());
  }
  return make_vertex_set(std::move(out));
}

VertexSet common_neighbourhood(const Graph& g, const VertexSet& s) {
  if (s.empty()) {
    throw PreconditionError("common neighbourhood of an empty set");
  }
  check_members(g, s);
  VertexSet common = g.neighbours(s[0]);
  for (std::size_t i = 1; i < s.size() && !common.empty(); ++i) {
    common = set_intersection(common, g.neighbours(s[i]));
  }
  return set_union(s, common);
}

Graph graph_minus(const Graph& g, const VertexSet& h) {
  check_members(g, h);
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return induced_subgraph(g, set_difference(all, h));
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, {0});
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace cliquedyn
