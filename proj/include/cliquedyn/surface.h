#ifndef CLIQUEDYN_SURFACE_H_
#define CLIQUEDYN_SURFACE_H_

#include <array>
#include <cstddef>
#include <vector>

#include "cliquedyn/graph.h"

namespace cliquedyn {

struct VertexClass {
  enum class Kind { kInner, kBoundary, kInvalid };
  Kind kind = Kind::kInvalid;
  // Neighbours in cycle order (inner) or path order (boundary).
  std::vector<Vertex> order;
};

// Inner when the open neighbourhood induces a cycle of length at least 4,
// boundary when it induces a path with at least one edge.
VertexClass classify_vertex(const Graph& g, Vertex v);

struct SurfaceReport {
  bool is_locally_cyclic = false;
  std::vector<VertexClass::Kind> kinds;
  VertexSet inner;
  VertexSet boundary;
  VertexSet invalid;
  // Edges whose endpoints do not have exactly two common neighbours.
  std::vector<Edge> boundary_edges;
  // Boundary vertices with the boundary edges between them; ids carry over.
  Graph boundary_graph;
  std::size_t min_degree = 0;
};

// Disconnected input raises PreconditionError.
SurfaceReport validate_surface(const Graph& g);

// Distance from each vertex to the nearest non-inner vertex, or -1 when every
// vertex is inner.
std::vector<int> boundary_distance(const Graph& g);

using Facet = std::array<Vertex, 3>;  // sorted

std::vector<Facet> facets(const Graph& g);

struct PathDegree {
  // One value at a boundary vertex, two (summing to the degree) at an inner
  // vertex; sorted.
  std::vector<int> values;

  bool contains(int x) const;
};

// Path degree of walk[i] for 0 < i < walk.size() - 1.
PathDegree path_degree(const Graph& g, const std::vector<Vertex>& walk,
                       std::size_t i);

bool is_straight(const Graph& g, const std::vector<Vertex>& walk);

struct StraightPath {
  std::vector<Vertex> walk;  // closed lines repeat the first vertex at the end
  bool closed = false;

  std::size_t length() const { return walk.size() - 1; }
};

// Straight walks of length >= min_len that extend in neither direction,
// without reusing an edge. Each appears once up to reversal (and rotation for
// closed lines); the list is sorted.
std::vector<StraightPath> maximal_straight_paths(
    const Graph& g, int min_len, std::size_t step_budget = 5'000'000);

// Facets around an inner vertex in cyclic order.
std::vector<Facet> umbrella(const Graph& g, Vertex v);

struct DischargeResult {
  int residual = 0;
  std::vector<Facet> disc;  // facets enclosed by the boundary
  VertexSet interior;
  std::vector<int> boundary_facet_degree;  // per boundary position
};

// Evaluates 6 - sum over interior vertices of (6 - deg) - sum over boundary
// positions of (3 - enclosed facets at that vertex). `boundary` lists a
// simple cycle of g (optionally closed by repeating the first vertex) that
// bounds a disc of facets.
DischargeResult disc_discharge_check(const Graph& g,
                                     std::vector<Vertex> boundary);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_SURFACE_H_
