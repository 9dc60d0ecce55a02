#ifndef CLIQUEDYN_GEOMETRIC_H_
#define CLIQUEDYN_GEOMETRIC_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/charts.h"
#include "cliquedyn/graph.h"
#include "cliquedyn/hexgrid.h"

namespace cliquedyn {

// A triangle-shaped subgraph of the host, at level m.
struct GeoVertex {
  int level = 0;
  VertexSet support;
  Chart chart;
  VertexSet rim;   // vertices that are not inner within the support
  VertexSet core;  // support minus rim
  VertexSet deep;  // support minus the closed host neighbourhood of rim
};

// The geometric graph of level n: triangles of every level m <= n with
// m = n (mod 2).
struct GeoGraph {
  int n = 0;
  Graph host;
  std::vector<GeoVertex> vertices;  // sorted by (level, support)
  Graph graph;                      // vertex i is vertices[i]
  // containing[v] lists the geometric vertices whose support holds host v.
  std::vector<std::vector<Vertex>> containing;
  // Pairs checked against the offset rule when host coordinates were given.
  std::size_t offset_checked = 0;
  std::size_t offset_mismatches = 0;

  std::optional<Vertex> find(const VertexSet& support) const;
  std::size_t count_at_level(int level) const;
};

struct GeoOptions {
  // Keep only triangles whose support is at least this far from the host
  // boundary.
  int margin = 0;
  // Host coordinates; enables the offset-rule cross-check.
  const std::vector<HexCoord>* coords = nullptr;
  int jobs = 1;
};

GeoGraph build_geo(const Graph& host, int n, const GeoOptions& options = {});

// Adjacency computed from set containment alone.
bool geo_adjacent(const GeoGraph& gg, const GeoVertex& a, const GeoVertex& b);

// Common neighbourhood in gg of the three corner sub-triangles of the chart
// (a triangle of size m + 1, with m <= n and m = n mod 2).
VertexSet clique_from_triangle(const GeoGraph& gg, const Chart& chart);

// Common neighbourhood in gg of every facet containing host vertex v; n odd.
VertexSet clique_from_vertex(const GeoGraph& gg, Vertex v);

// The clique assigned to a vertex of the next level up, assembled from its
// structural description rather than from common neighbourhoods.
VertexSet clique_summary(const GeoGraph& gg, const GeoVertex& s);

// Clique of gg assigned to each listed vertex of next (next.n == gg.n + 1).
std::vector<VertexSet> c_map(const GeoGraph& gg, const GeoGraph& next,
                             const std::vector<Vertex>& domain);

struct EquivalenceReport {
  bool ok = false;
  int n = 0;
  int margin = 0;
  std::size_t interior_vertices = 0;   // checked vertices of level n + 1
  std::size_t interior_cliques = 0;    // cliques of level n far from the rim
  std::size_t adjacency_pairs = 0;     // intersecting or adjacent pairs seen
  std::vector<std::string> failures;
};

// Checks that c_map is an isomorphism from the level n + 1 graph onto the
// clique graph of the level n graph on the part of the host at least
// `margin` (>= n + 3) from its boundary. The host must be a disc whose inner
// vertices have degree at least 6.
EquivalenceReport verify_geometric_equivalence(const Graph& host, int n,
                                               int margin, int jobs = 1);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_GEOMETRIC_H_
