#include "cliquedyn/cliques.h"

#include <cstdlib>
#include <random>

#include "cliquedyn/errors.h"
#include "cliquedyn/hexgrid.h"
#include "cliquedyn/io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace cliquedyn {
namespace {

using Verdict = IterationTrace::Verdict;

std::vector<std::size_t> vertex_counts(const IterationTrace& t) {
  std::vector<std::size_t> out;
  for (const auto& s : t.steps) out.push_back(s.vertices);
  return out;
}

TEST(CliquesTest, AgreeWithSubsetEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + trial % 14;
    double p = 0.2 + 0.1 * (trial % 7);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) e.emplace_back(u, v);
      }
    }
    Graph g = Graph::with_order(n, e);
    EXPECT_EQ(max_cliques(g), oracle::max_cliques(g)) << "trial " << trial;
  }
}

TEST(CliquesTest, CliqueGraphEdgesAreIntersections) {
  for (const Graph& g : {gen_octahedron(), gen_icosahedron(),
                         gen_hex_patch(2).graph, gen_complete(5)}) {
    CliqueGraph k = clique_graph(g);
    auto want = oracle::max_cliques(g);
    ASSERT_EQ(k.members, want);
    for (Vertex a = 0; a < want.size(); ++a) {
      for (Vertex b = a + 1; b < want.size(); ++b) {
        EXPECT_EQ(k.graph.adjacent(a, b), intersects(want[a], want[b]));
      }
    }
  }
  EXPECT_EQ(clique_graph(gen_octahedron()).graph.order(), 8u);
  EXPECT_EQ(clique_graph(gen_complete(6)).graph.order(), 1u);
}

TEST(CliquesTest, IsolatedVerticesAreCliques) {
  Graph g = Graph::with_order(3, {{0, 1}});
  EXPECT_EQ(max_cliques(g), (std::vector<VertexSet>{{0, 1}, {2}}));
}

TEST(CliquesTest, BudgetIsEnforced) {
  CliqueBudget tight;
  tight.max_vertices = 5;
  EXPECT_THROW(max_cliques(gen_octahedron(), tight), BudgetExceeded);
  setenv("CLIQUE_BUDGET_VERTICES", "12", 1);
  EXPECT_EQ(CliqueBudget::from_env().max_vertices, 12u);
  IterationTrace t = iterate_k(gen_octahedron(), 5);
  unsetenv("CLIQUE_BUDGET_VERTICES");
  EXPECT_EQ(t.verdict, Verdict::kBudgetExceeded);
  EXPECT_EQ(vertex_counts(t), (std::vector<std::size_t>{6, 8}));
}

TEST(CliquesTest, TorusIteratesGrowLinearly) {
  IterationTrace t4 = iterate_k(gen_torus(4, 4).graph, 4);
  EXPECT_EQ(vertex_counts(t4), (std::vector<std::size_t>{16, 32, 48, 64, 80}));
  EXPECT_EQ(t4.verdict, Verdict::kDivergingEvidence);
  IterationTrace t5 = iterate_k(gen_torus(5, 5).graph, 3);
  EXPECT_EQ(vertex_counts(t5), (std::vector<std::size_t>{25, 50, 75, 100}));
  EXPECT_EQ(t5.verdict, Verdict::kDivergingEvidence);
}

TEST(CliquesTest, ConvergenceIsDetected) {
  Graph p3 = Graph::with_order(3, {{0, 1}, {1, 2}});
  IterationTrace t = iterate_k(p3, 6);
  EXPECT_EQ(t.verdict, Verdict::kConverged);
  EXPECT_EQ(t.converged_n, 2);
  EXPECT_EQ(t.period, 1);
  Graph c5 = Graph::with_order(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  IterationTrace c = iterate_k(c5, 3);
  EXPECT_EQ(c.verdict, Verdict::kConverged);
  EXPECT_EQ(c.converged_n, 0);
}

TEST(CliquesTest, ShrinkingGrowthIsInconclusive) {
  Graph g = read_graph_file(std::string(CLIQUEDYN_FIXTURES) + "/genus2.json")
                .graph;
  IterationTrace t = iterate_k(g, 2);
  EXPECT_EQ(vertex_counts(t), (std::vector<std::size_t>{72, 148, 220}));
  EXPECT_EQ(t.verdict, Verdict::kInconclusive);
}

TEST(CliquesTest, JsonLines) {
  IterationTrace t = iterate_k(gen_torus(4, 4).graph, 1);
  std::string lines = t.json_lines();
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 2);
  auto first = nlohmann::json::parse(lines.substr(0, lines.find('\n')));
  EXPECT_EQ(first["vertices"], 16);
  EXPECT_EQ(first["n"], 0);
}

}  // namespace
}  // namespace cliquedyn
