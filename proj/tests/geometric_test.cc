#include "cliquedyn/geometric.h"

#include "cliquedyn/covers.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/hexgrid.h"
#include "cliquedyn/io.h"
#include "cliquedyn/surface.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cliquedyn {
namespace {

Graph fixture(const std::string& name) {
  return read_graph_file(std::string(CLIQUEDYN_FIXTURES) + "/" + name).graph;
}

TEST(GeometricTest, LevelCountsMatchPlaneTriangles) {
  const int r = 4;
  HexRegion p = gen_hex_patch(r);
  for (int n = 0; n <= 4; ++n) {
    GeoGraph gg = build_geo(p.graph, n);
    std::size_t total = 0;
    for (int m = n % 2; m <= n; m += 2) {
      EXPECT_EQ(gg.count_at_level(m), oracle::plane_triangles(m, r))
          << "n=" << n << " m=" << m;
      total += oracle::plane_triangles(m, r);
    }
    EXPECT_EQ(gg.graph.order(), total);
  }
}

TEST(GeometricTest, ContainmentAgreesWithOffsetRule) {
  HexRegion p = gen_hex_patch(7);
  for (int n : {3, 4, 5, 6}) {
    GeoOptions opt;
    opt.coords = &p.coords;
    GeoGraph gg = build_geo(p.graph, n, opt);
    EXPECT_GT(gg.offset_checked, 0u) << "n=" << n;
    EXPECT_EQ(gg.offset_mismatches, 0u) << "n=" << n;
  }
}

TEST(GeometricTest, GraphEdgesAreContainment) {
  HexRegion p = gen_hex_patch(4);
  for (int n : {2, 3}) {
    GeoGraph gg = build_geo(p.graph, n);
    for (Vertex i = 0; i < gg.vertices.size(); ++i) {
      for (Vertex j = i + 1; j < gg.vertices.size(); ++j) {
        ASSERT_EQ(gg.graph.adjacent(i, j),
                  geo_adjacent(gg, gg.vertices[i], gg.vertices[j]))
            << "n=" << n << " pair " << i << "," << j;
      }
    }
  }
}

TEST(GeometricTest, SameLevelConditionsAreEquivalentAwayFromTheRim) {
  HexRegion p = gen_hex_patch(7);
  auto dist = boundary_distance(p.graph);
  for (int n : {3, 4}) {
    GeoOptions opt;
    opt.margin = 1;
    GeoGraph gg = build_geo(p.graph, n, opt);
    std::size_t checked = 0;
    for (const auto& a : gg.vertices) {
      VertexSet na = closed_neighbourhood(p.graph, a.support);
      for (const auto& b : gg.vertices) {
        if (a.level != b.level || a.support == b.support) continue;
        VertexSet nb = closed_neighbourhood(p.graph, b.support);
        EXPECT_EQ(is_subset(a.support, nb), is_subset(b.support, na));
        ++checked;
      }
    }
    EXPECT_GT(checked, 0u);
  }
}

TEST(GeometricTest, CliquesFromTrianglesAndVertices) {
  HexRegion p = gen_hex_patch(8);
  GeoGraph g1 = build_geo(p.graph, 1);
  VertexSet c = clique_from_vertex(g1, *p.at({0, 0, 0}));
  EXPECT_TRUE(is_clique(g1.graph, c));
  EXPECT_EQ(c.size(), 6u);
  // From n = 3 on, the two size-3 triangles centred at the vertex join.
  GeoGraph g3 = build_geo(p.graph, 3);
  VertexSet c3 = clique_from_vertex(g3, *p.at({0, 0, 0}));
  EXPECT_TRUE(is_clique(g3.graph, c3));
  EXPECT_EQ(c3.size(), 6u + 2u);
  GeoGraph g2 = build_geo(p.graph, 2);
  auto pts = delta_coords(3);
  for (auto& x : pts) x = x + HexCoord{-1, -1, -1};
  auto ch = chart_for(p.graph, p.vertices_at(pts), 3);
  ASSERT_TRUE(ch.has_value());
  VertexSet k = clique_from_triangle(g2, *ch);
  EXPECT_TRUE(is_clique(g2.graph, k));
  EXPECT_THROW(clique_from_vertex(g2, 0), PreconditionError);
  EXPECT_THROW(clique_from_triangle(g1, *ch), PreconditionError);
}

TEST(GeometricTest, EquivalenceOnFlatPatch) {
  HexRegion p = gen_hex_patch(10);
  for (int n = 0; n <= 3; ++n) {
    EquivalenceReport rep = verify_geometric_equivalence(p.graph, n, n + 3);
    EXPECT_TRUE(rep.ok) << "n=" << n << ": "
                        << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_GT(rep.interior_vertices, 0u);
  }
}

TEST(GeometricTest, EquivalenceOnCurvedDisc) {
  Graph g2 = fixture("genus2.json");
  CoverBall ball = universal_cover_ball(g2, 0, 9);
  ASSERT_GT(ball.graph.max_degree(), 6u);
  for (int n = 0; n <= 3; ++n) {
    EquivalenceReport rep = verify_geometric_equivalence(ball.graph, n, n + 3);
    EXPECT_TRUE(rep.ok) << "n=" << n << ": "
                        << (rep.failures.empty() ? "" : rep.failures[0]);
    EXPECT_GT(rep.interior_vertices, 0u);
  }
}

TEST(GeometricTest, EquivalencePreconditions) {
  HexRegion p = gen_hex_patch(6);
  EXPECT_THROW(verify_geometric_equivalence(p.graph, 2, 2), PreconditionError);
  EXPECT_THROW(verify_geometric_equivalence(gen_octahedron(), 0, 3),
               PreconditionError);
  EXPECT_THROW(verify_geometric_equivalence(gen_complete(4), 0, 3),
               PreconditionError);
  EXPECT_THROW(verify_geometric_equivalence(fixture("genus2.json"), 1, 4),
               PreconditionError);
  EXPECT_THROW(build_geo(gen_complete(4), 1), PreconditionError);
  EXPECT_THROW(build_geo(p.graph, -1), PreconditionError);
}

}  // namespace
}  // namespace cliquedyn
