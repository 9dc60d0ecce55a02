#ifndef CLIQUEDYN_CLIQUES_H_
#define CLIQUEDYN_CLIQUES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "cliquedyn/graph.h"

namespace cliquedyn {

struct CliqueBudget {
  // Largest clique graph that may be produced.
  std::size_t max_vertices = 500'000;
  // Largest number of search nodes in one enumeration.
  std::size_t max_nodes = 10'000'000;

  // Defaults, with max_vertices overridden by CLIQUE_BUDGET_VERTICES.
  static CliqueBudget from_env();
};

// All maximal cliques, each sorted, in lexicographic order.
std::vector<VertexSet> max_cliques(const Graph& g,
                                   const CliqueBudget& budget = {});

struct CliqueGraph {
  // Vertex i (id i) stands for the clique members[i].
  Graph graph;
  std::vector<VertexSet> members;
};

CliqueGraph clique_graph(const Graph& g, const CliqueBudget& budget = {});

struct IterationStep {
  int n = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::string digest;
};

struct IterationTrace {
  enum class Verdict { kConverged, kBudgetExceeded, kDivergingEvidence,
                       kInconclusive };
  std::vector<IterationStep> steps;
  Verdict verdict = Verdict::kInconclusive;
  // kDivergingEvidence: vertex counts grow with non-shrinking increments.
  // For kConverged: the iterate k^n(G) recurs with period `period`.
  int converged_n = -1;
  int period = 0;
  std::string message;

  // One JSON object per step, newline separated.
  std::string json_lines() const;
};

std::string to_string(IterationTrace::Verdict verdict);

// Computes k(G), k^2(G), ... up to `max_steps` iterates, stopping early when
// an iterate is isomorphic to an earlier one.
IterationTrace iterate_k(const Graph& g, int max_steps,
                         const CliqueBudget& budget = CliqueBudget::from_env());

}  // namespace cliquedyn

#endif  // CLIQUEDYN_CLIQUES_H_
