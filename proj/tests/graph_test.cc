#include "cliquedyn/graph.h"

#include <random>

#include "cliquedyn/errors.h"
#include "cliquedyn/hexgrid.h"
#include "cliquedyn/io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cliquedyn {
namespace {

using ::testing::ElementsAre;

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::with_order(n, e, "path");
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::with_order(n, e);
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::with_order(g.order(), e);
}

TEST(GraphTest, BasicQueries) {
  Graph g({10, 20, 30}, {{0, 1}, {1, 2}, {1, 0}}, "g");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.index_of(30), 2u);
  EXPECT_FALSE(g.find(40).has_value());
  EXPECT_THAT(g.edges(), ElementsAre(Edge{0, 1}, Edge{1, 2}));
  EXPECT_EQ(g.min_degree(), 1u);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(GraphTest, RejectsBadInput) {
  EXPECT_THROW(Graph({1, 2}, {{0, 0}}), InputError);
  EXPECT_THROW(Graph({1, 1}, {}), InputError);
  EXPECT_THROW(Graph({1, 2}, {{0, 2}}), InputError);
  EXPECT_THROW(path(3).index_of(7), InputError);
}

TEST(GraphTest, SetHelpers) {
  Graph g = path(5);
  EXPECT_THAT(closed_neighbourhood(g, {2}), ElementsAre(1, 2, 3));
  EXPECT_THAT(common_neighbourhood(g, {1, 3}), ElementsAre(1, 2, 3));
  EXPECT_THROW(common_neighbourhood(g, {}), PreconditionError);
  Graph h = induced_subgraph(g, {1, 2, 4});
  EXPECT_EQ(h.size(), 1u);
  EXPECT_EQ(h.id(2), 4);
  EXPECT_FALSE(is_connected(h));
  EXPECT_TRUE(is_connected(g));
  EXPECT_THAT(bfs_distances(g, {0}), ElementsAre(0, 1, 2, 3, 4));
  EXPECT_TRUE(is_clique(g, {1, 2}));
  EXPECT_FALSE(is_clique(g, {1, 3}));
  EXPECT_THAT(set_difference({1, 2, 3}, {2}), ElementsAre(1, 3));
  EXPECT_TRUE(is_subset({1, 3}, {1, 2, 3}));
  EXPECT_EQ(graph_minus(g, {2}).order(), 4u);
}

TEST(IsomorphismTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + trial % 6;
    Graph a = random_graph(n, 0.5, rng);
    Graph b = trial % 2 ? shuffled(a, rng) : random_graph(n, 0.5, rng);
    IsoResult r = is_isomorphic(a, b);
    ASSERT_NE(r.outcome, IsoResult::Outcome::kBudgetExceeded);
    EXPECT_EQ(r.isomorphic(), oracle::isomorphic(a, b)) << "trial " << trial;
    if (r.isomorphic()) {
      EXPECT_TRUE(is_isomorphism(a, b, r.mapping));
      EXPECT_EQ(canonical_hash(a), canonical_hash(b));
    }
  }
}

TEST(IsomorphismTest, RegularGraphsNeedIndividualisation) {
  // Two 3-regular graphs on 6 vertices: the prism and K_{3,3}.
  Graph prism = Graph::with_order(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4},
          {2, 5}});
  Graph k33 = Graph::with_order(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
          {2, 5}});
  EXPECT_FALSE(is_isomorphic(prism, k33).isomorphic());
  std::mt19937_64 rng(3);
  HexRegion t = gen_torus(5, 5);
  Graph s = shuffled(t.graph, rng);
  IsoResult r = is_isomorphic(t.graph, s);
  ASSERT_TRUE(r.isomorphic());
  EXPECT_TRUE(is_isomorphism(t.graph, s, r.mapping));
  EXPECT_FALSE(is_isomorphic(gen_torus(4, 9).graph, gen_torus(6, 6).graph)
                   .isomorphic());
}

TEST(IsomorphismTest, BudgetIsReported) {
  Graph a = gen_torus(6, 6).graph;
  std::mt19937_64 rng(5);
  EXPECT_EQ(is_isomorphic(a, shuffled(a, rng), 1).outcome,
            IsoResult::Outcome::kBudgetExceeded);
}

TEST(IoTest, JsonRoundTrip) {
  GraphFile f{Graph({5, 9, 2}, {{0, 1}, {1, 2}}, "tiny")};
  f.labels["5"] = {{"level", 0}};
  std::string text = serialize_json(f);
  GraphFile back = parse_json(text);
  EXPECT_EQ(back.graph.name(), "tiny");
  EXPECT_EQ(back.graph.ids(), f.graph.ids());
  EXPECT_EQ(back.graph.edges(), f.graph.edges());
  EXPECT_EQ(back.labels, f.labels);
  EXPECT_EQ(serialize_json(back), text);
}

TEST(IoTest, EdgeListAndDot) {
  GraphFile f = parse_edge_list("# comment\n1 2\n2 3\n7\n");
  EXPECT_EQ(f.graph.order(), 4u);
  EXPECT_EQ(f.graph.size(), 2u);
  GraphFile back = parse_edge_list(serialize_edge_list(f.graph));
  EXPECT_EQ(back.graph.ids(), f.graph.ids());
  EXPECT_EQ(back.graph.edges(), f.graph.edges());
  std::string dot = serialize_dot(f);
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
}

TEST(IoTest, MalformedInputIsAnInputError) {
  EXPECT_THROW(parse_json("{\"vertices\": [1, 2], \"edges\": [[1]]}"),
               InputError);
  EXPECT_THROW(parse_json("not json"), InputError);
  EXPECT_THROW(parse_edge_list("1 x\n"), InputError);
  EXPECT_THROW(read_graph_file("/nonexistent/file.json"), InputError);
}

}  // namespace
}  // namespace cliquedyn
