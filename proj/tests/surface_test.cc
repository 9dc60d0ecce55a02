#include "cliquedyn/surface.h"

#include <numeric>
#include <random>
#include <set>

#include "cliquedyn/errors.h"
#include "cliquedyn/hexgrid.h"
#include "cliquedyn/io.h"
#include "cliquedyn/lemmas.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cliquedyn {
namespace {

using ::testing::ElementsAre;

std::vector<Vertex> walk_through(const HexRegion& r, HexCoord from,
                                 std::vector<HexCoord> steps) {
  std::vector<Vertex> w{*r.at(from)};
  for (const auto& s : steps) {
    from = from + s;
    w.push_back(*r.at(from));
  }
  return w;
}

// Closed straight lines of the torus: one orbit of each unit step.
std::size_t torus_lines(int p, int q) {
  return q + p + static_cast<std::size_t>(p * q / std::lcm(p, q));
}

TEST(SurfaceTest, ClassifiesPatchVertices) {
  for (int r = 1; r <= 5; ++r) {
    HexRegion p = gen_hex_patch(r);
    SurfaceReport rep = validate_surface(p.graph);
    EXPECT_FALSE(rep.is_locally_cyclic);
    EXPECT_EQ(rep.inner.size(), static_cast<std::size_t>(1 + 3 * r * (r - 1)));
    EXPECT_EQ(rep.boundary.size(), static_cast<std::size_t>(6 * r));
    EXPECT_TRUE(rep.invalid.empty());
    EXPECT_EQ(rep.boundary_edges.size(), static_cast<std::size_t>(6 * r));
    EXPECT_EQ(rep.boundary_graph.order(), static_cast<std::size_t>(6 * r));
    EXPECT_EQ(facets(p.graph).size(), static_cast<std::size_t>(6 * r * r));
    auto dist = boundary_distance(p.graph);
    for (Vertex v = 0; v < p.graph.order(); ++v) {
      EXPECT_EQ(dist[v], r - hex_distance(p.coords[v], {0, 0, 0}));
    }
  }
}

TEST(SurfaceTest, InvalidNeighbourhoods) {
  SurfaceReport k4 = validate_surface(gen_complete(4));
  EXPECT_EQ(k4.invalid.size(), 4u);
  EXPECT_FALSE(k4.is_locally_cyclic);
  // A single edge has one-vertex neighbourhoods, which are not paths.
  Graph edge = Graph::with_order(2, {{0, 1}});
  EXPECT_EQ(classify_vertex(edge, 0).kind, VertexClass::Kind::kInvalid);
  EXPECT_THROW(validate_surface(Graph::with_order(3, {{0, 1}})),
               PreconditionError);
  EXPECT_EQ(classify_vertex(gen_delta(1).graph, 0).kind,
            VertexClass::Kind::kBoundary);
  EXPECT_TRUE(validate_surface(gen_torus(4, 4).graph).is_locally_cyclic);
  EXPECT_EQ(boundary_distance(gen_torus(4, 4).graph),
            std::vector<int>(16, -1));
}

TEST(SurfaceTest, PathDegrees) {
  HexRegion p = gen_hex_patch(3);
  HexCoord e = kSteps[0];
  auto straight = walk_through(p, {-1, 1, 0}, {e, e});
  EXPECT_THAT(path_degree(p.graph, straight, 1).values, ElementsAre(3, 3));
  EXPECT_TRUE(is_straight(p.graph, straight));
  auto bent = walk_through(p, {-1, 1, 0}, {e, kSteps[1]});
  EXPECT_FALSE(is_straight(p.graph, bent));
  EXPECT_THAT(path_degree(p.graph, bent, 1).values, ElementsAre(2, 4));
  auto sharp = walk_through(p, {-1, 1, 0}, {e, kSteps[4]});
  EXPECT_THAT(path_degree(p.graph, sharp, 1).values, ElementsAre(1, 5));
  // Along the rim of a triangle, the middle of a side is straight.
  HexRegion d = gen_delta(2);
  auto side = walk_through(d, {2, 0, 0}, {{-1, 1, 0}, {-1, 1, 0}});
  EXPECT_THAT(path_degree(d.graph, side, 1).values, ElementsAre(3));
  EXPECT_TRUE(is_straight(d.graph, side));
  auto back = walk_through(p, {0, 0, 0}, {e, -e});
  EXPECT_THROW(path_degree(p.graph, back, 1), PreconditionError);
  EXPECT_THROW(path_degree(p.graph, straight, 0), PreconditionError);
}

TEST(SurfaceTest, StraightLinesOfPatches) {
  // Single edges are not straight walks, so the rim of the radius-1 patch
  // contributes nothing.
  EXPECT_EQ(maximal_straight_paths(gen_hex_patch(1).graph, 1).size(), 3u);
  for (int r = 2; r <= 4; ++r) {
    HexRegion p = gen_hex_patch(r);
    auto lines = maximal_straight_paths(p.graph, 1);
    EXPECT_EQ(lines.size(), static_cast<std::size_t>(3 * (2 * r + 1)));
    for (const auto& l : lines) {
      EXPECT_FALSE(l.closed);
      EXPECT_TRUE(is_straight(p.graph, l.walk));
      // Coordinate check: one coordinate is constant along the walk.
      int constant = 0;
      for (int i = 0; i < 3; ++i) {
        bool same = true;
        for (Vertex v : l.walk) {
          same = same && p.coords[v][i] == p.coords[l.walk[0]][i];
        }
        constant += same;
      }
      EXPECT_EQ(constant, 1);
    }
  }
}

TEST(SurfaceTest, ClosedStraightLinesOfTori) {
  for (auto [p, q] : {std::pair{4, 4}, {4, 5}, {5, 5}, {4, 6}}) {
    HexRegion t = gen_torus(p, q);
    auto lines = maximal_straight_paths(t.graph, 1);
    EXPECT_EQ(lines.size(), torus_lines(p, q)) << p << "x" << q;
    std::size_t total = 0;
    for (const auto& l : lines) {
      EXPECT_TRUE(l.closed);
      EXPECT_EQ(l.walk.front(), l.walk.back());
      total += l.length();
    }
    EXPECT_EQ(total, t.graph.size());
  }
}

TEST(SurfaceTest, Umbrella) {
  HexRegion p = gen_hex_patch(2);
  auto u = umbrella(p.graph, *p.at({0, 0, 0}));
  ASSERT_EQ(u.size(), 6u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<Vertex> common;
    std::set_intersection(u[i].begin(), u[i].end(), u[(i + 1) % 6].begin(),
                          u[(i + 1) % 6].end(), std::back_inserter(common));
    EXPECT_EQ(common.size(), 2u);
  }
  EXPECT_THROW(umbrella(p.graph, *p.at({2, -2, 0})), PreconditionError);
}

TEST(SurfaceTest, DischargeOfRandomDiscs) {
  HexRegion patch = gen_hex_patch(7);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Facet> disc;
    auto cycle = random_disc_boundary(patch, 1 + trial * 2, rng, &disc);
    DischargeResult res = disc_discharge_check(patch.graph, cycle);
    std::vector<Facet> got = res.disc;
    std::sort(got.begin(), got.end());
    std::sort(disc.begin(), disc.end());
    EXPECT_EQ(got, disc) << "trial " << trial;
    EXPECT_EQ(res.residual, oracle::disc_residual(patch.graph, disc));
    EXPECT_EQ(res.residual, 0);
  }
}

TEST(SurfaceTest, DischargeAroundHighDegreeVertices) {
  Graph g = read_graph_file(std::string(CLIQUEDYN_FIXTURES) + "/genus2.json")
                .graph;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 6) continue;
    VertexClass c = classify_vertex(g, v);
    ASSERT_EQ(c.kind, VertexClass::Kind::kInner);
    DischargeResult res = disc_discharge_check(g, c.order);
    EXPECT_THAT(res.interior, ElementsAre(v));
    EXPECT_EQ(res.residual, 0);
    EXPECT_EQ(res.residual, oracle::disc_residual(g, res.disc));
  }
}

TEST(SurfaceTest, DischargeRejectsNonCycles) {
  HexRegion p = gen_hex_patch(2);
  Vertex a = *p.at({0, 0, 0});
  Vertex b = *p.at({1, -1, 0});
  EXPECT_THROW(disc_discharge_check(p.graph, {a, b}), PreconditionError);
  Vertex far = *p.at({2, -2, 0});
  EXPECT_THROW(disc_discharge_check(p.graph, {a, b, far}), PreconditionError);
}

TEST(SurfaceTest, GenusTwoFixtures) {
  for (const char* name : {"genus2.json", "genus2-branched.json"}) {
    Graph g = read_graph_file(std::string(CLIQUEDYN_FIXTURES) + "/" + name)
                  .graph;
    SurfaceReport rep = validate_surface(g);
    EXPECT_TRUE(rep.is_locally_cyclic) << name;
    long chi = static_cast<long>(g.order()) - static_cast<long>(g.size()) +
               static_cast<long>(facets(g).size());
    EXPECT_EQ(chi, -2) << name;
    EXPECT_GE(g.min_degree(), 6u);
  }
}

}  // namespace
}  // namespace cliquedyn
