#ifndef CLIQUEDYN_GRAPH_H_
#define CLIQUEDYN_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cliquedyn {

// Dense vertex index into a particular Graph.
using Vertex = std::uint32_t;
// Opaque external vertex id, preserved by induced_subgraph and friends.
using VertexId = std::int64_t;
// Sorted, duplicate-free list of dense indices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Immutable finite simple graph.
class Graph {
 public:
  Graph() = default;
  // Edges refer to positions in `ids`. Duplicate edges are merged; self-loops
  // and out-of-range endpoints raise InputError.
  Graph(std::vector<VertexId> ids, const std::vector<Edge>& edges,
        std::string name = "");

  // Vertices 0..n-1 with ids equal to their index.
  static Graph with_order(std::size_t n, const std::vector<Edge>& edges,
                          std::string name = "");

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return num_edges_; }
  const std::string& name() const { return name_; }
  Graph renamed(std::string name) const;

  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  VertexId id(Vertex v) const { return ids_[v]; }
  const std::vector<VertexId>& ids() const { return ids_; }
  std::optional<Vertex> find(VertexId id) const;
  // Throws InputError for unknown ids.
  Vertex index_of(VertexId id) const;

  // All edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, Vertex> index_;
  std::size_t num_edges_ = 0;
  std::string name_;
};

VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Vertex i of the result is s[i] of g; ids carry over.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// s together with every vertex adjacent to some member of s.
VertexSet closed_neighbourhood(const Graph& g, const VertexSet& s);

// s together with every vertex adjacent to all members of s. Empty s is an
// error.
VertexSet common_neighbourhood(const Graph& g, const VertexSet& s);

// Removes the vertices of h and every edge touching them.
Graph graph_minus(const Graph& g, const VertexSet& h);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

// Multi-source BFS; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources);

struct IsoResult {
  enum class Outcome { kIsomorphic, kNotIsomorphic, kBudgetExceeded };
  Outcome outcome = Outcome::kNotIsomorphic;
  // mapping[v] is the image in the second graph of vertex v of the first.
  std::vector<Vertex> mapping;

  bool isomorphic() const { return outcome == Outcome::kIsomorphic; }
};

// Colour refinement with individualisation and backtracking. `node_budget`
// caps the number of search nodes.
IsoResult is_isomorphic(const Graph& a, const Graph& b,
                        std::size_t node_budget = 2'000'000);

// Checks that `mapping` is an isomorphism from a onto b.
bool is_isomorphism(const Graph& a, const Graph& b,
                    const std::vector<Vertex>& mapping);

// Hex digest of the stable colour-refinement partition. Isomorphic graphs get
// equal digests; equal digests must still be confirmed by is_isomorphic.
std::string canonical_hash(const Graph& g);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_GRAPH_H_
