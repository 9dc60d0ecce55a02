#ifndef CLIQUEDYN_CHARTS_H_
#define CLIQUEDYN_CHARTS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cliquedyn/graph.h"
#include "cliquedyn/hexgrid.h"

namespace cliquedyn {

// Isomorphism from the height-m triangle onto an induced subgraph of a host.
struct Chart {
  int m = 0;
  std::vector<HexCoord> domain;  // delta_coords(m)
  std::vector<Vertex> image;     // image[i] is the host vertex of domain[i]

  Vertex at(HexCoord p) const;
  VertexSet support() const;
  // Image of the sub-triangle {p : p >= offset}, offset a unit vector.
  VertexSet corner_child(int unit) const;
  // Same image, domain relabelled by a coordinate permutation.
  Chart permuted(int which) const;
};

struct ChartGroup {
  VertexSet support;
  std::vector<Chart> charts;  // six for m >= 1, one for m = 0
};

// Every induced subgraph of g isomorphic to the height-m triangle with all of
// its charts, sorted by support.
std::vector<ChartGroup> find_standard_charts(const Graph& g, int m);

// One chart onto exactly the vertex set s, if s induces a height-m triangle.
std::optional<Chart> chart_for(const Graph& g, const VertexSet& s, int m);

struct ExtendOptions {
  // Order in which the six unit translates are glued.
  std::array<int, 6> direction_order = {0, 1, 2, 3, 4, 5};
  // Nonzero seeds shuffle the order in which coordinates are derived.
  std::uint64_t shuffle_seed = 0;
  // Precomputed boundary_distance(g); computed on demand when empty.
  const std::vector<int>* boundary_distance = nullptr;
};

struct ExtendedChart {
  int m = 0;
  std::map<HexCoord, Vertex> map;
  // Indices into kSteps of the translates that embed as triangles.
  std::vector<int> realized;
  // For m = 3: whether the downward triangle of side 3 embeds.
  bool nabla_realized = false;
  // Supports of the realized translates (and the downward triangle).
  std::vector<VertexSet> neighbours;
};

// Extends a chart with m >= 3 by gluing facets across inner edges onto its
// unit translates (and, for m = 3, the downward triangle of side 3). Requires
// distance >= 2 from the host boundary; conflicting images raise
// InjectivityError.
ExtendedChart extend_chart(const Graph& g, const Chart& chart,
                           const ExtendOptions& options = {});

// The height-m triangles T != s inside the closed neighbourhood of s.
std::vector<VertexSet> neighbour_triangles(const Graph& g, const VertexSet& s,
                                           int m);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_CHARTS_H_
