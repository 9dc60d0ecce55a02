#ifndef CLIQUEDYN_HEXGRID_H_
#define CLIQUEDYN_HEXGRID_H_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliquedyn/graph.h"
#include "cliquedyn/io.h"

namespace cliquedyn {

// Integer triple; the hexagonal plane of height h holds the triples summing
// to h.
struct HexCoord {
  int a = 0;
  int b = 0;
  int c = 0;

  int sum() const { return a + b + c; }
  int operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
  friend HexCoord operator+(HexCoord p, HexCoord q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c};
  }
  friend HexCoord operator-(HexCoord p, HexCoord q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c};
  }
  friend HexCoord operator-(HexCoord p) { return {-p.a, -p.b, -p.c}; }
  friend auto operator<=>(const HexCoord&, const HexCoord&) = default;
};

std::string to_string(HexCoord p);

// Unit steps within a plane.
inline constexpr std::array<HexCoord, 6> kSteps = {{
    {1, -1, 0}, {1, 0, -1}, {-1, 1, 0}, {0, 1, -1}, {-1, 0, 1}, {0, -1, 1}}};
// Offsets from a level to the level two, four and six below.
inline constexpr std::array<HexCoord, 6> kDrop2 = {{
    {2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}, {1, 0, 1}}};
inline constexpr std::array<HexCoord, 3> kDrop4 = {{
    {2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
inline constexpr HexCoord kDrop6 = {2, 2, 2};
inline constexpr std::array<HexCoord, 3> kUnits = {{
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

// Offset set between levels `gap` apart (gap in {0, 2, 4, 6}).
std::vector<HexCoord> level_offsets(int gap);

// Graph distance between two points of the same plane.
int hex_distance(HexCoord p, HexCoord q);
bool hex_adjacent(HexCoord p, HexCoord q);

// The six coordinate permutations, identity first.
inline constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
HexCoord permute(HexCoord p, int which);

// A finite induced subgraph of a hexagonal plane. Vertex i sits at coords[i];
// coordinates are kept sorted.
struct HexRegion {
  Graph graph;
  std::vector<HexCoord> coords;

  std::optional<Vertex> at(HexCoord p) const;
  VertexSet vertices_at(const std::vector<HexCoord>& points) const;
  GraphFile to_file() const;
};

HexRegion hex_region(std::vector<HexCoord> points, std::string name);

// Points of height 0 within distance `radius` of the origin.
HexRegion gen_hex_patch(int radius);

// Nonnegative triples of height m, sorted.
std::vector<HexCoord> delta_coords(int m);
HexRegion gen_delta(int m);

// Downward triangle with `side` + 1 points per side: the triples of height h
// whose entries are all at most (side + h) / 3.
std::vector<HexCoord> nabla_coords(int side, int height);

enum class Nabla {
  kOne,         // side 1 at height 2
  kOneShifted,  // side 1 at height 3, shifted by a unit vector
  kTwo,         // side 2 at height 4
  kThree,       // side 3 at height 3
};
HexRegion gen_nabla(Nabla kind, int unit = 0);

// Image of the height-m triangle under a -> a + t; entries of t must be
// nonnegative.
std::vector<HexCoord> triangle_inclusion(int m, HexCoord t);

struct DeltaInclusion {
  enum class Kind { kTranslate, kNablaOne, kNablaOneShifted, kNablaTwo,
                    kOther };
  Kind kind = Kind::kOther;
  std::vector<HexCoord> points;  // sorted
  HexCoord shift;                // for kTranslate
};

// Every induced subgraph of the height-m triangle isomorphic to the height
// (m - k) triangle, found by enumerating corner triples.
std::vector<DeltaInclusion> classify_delta_inclusions(int m, int k);

// The 17-vertex local graph of level-shifted triangles around a level-0
// origin.
struct LocalHexGraph {
  struct Node {
    int level;  // 0, -2, -4 or -6
    HexCoord offset;
    auto operator<=>(const Node&) const = default;
  };
  Graph graph;
  std::vector<Node> nodes;

  Vertex index(int level, HexCoord offset) const;
  GraphFile to_file() const;
};

LocalHexGraph build_lhg();

// Maximal cliques of the local graph containing the origin node.
std::vector<VertexSet> lhg_cliques_through_origin(const LocalHexGraph& lhg);

// Quotient of the height-0 plane by the lattice spanned by (p, 0, -p) and
// (0, q, -q). Vertex (i, j) has coordinates (i, j, -i - j).
HexRegion gen_torus(int p, int q);

Graph gen_octahedron();
Graph gen_icosahedron();
Graph gen_complete(int n);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_HEXGRID_H_
