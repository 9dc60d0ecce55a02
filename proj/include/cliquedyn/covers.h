#ifndef CLIQUEDYN_COVERS_H_
#define CLIQUEDYN_COVERS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "cliquedyn/graph.h"

namespace cliquedyn {

// Ball of radius r around a lift of `base` in the universal cover of a
// locally cyclic graph.
struct CoverBall {
  Graph graph;
  std::vector<Vertex> projection;  // lift -> host vertex
  std::vector<int> depth;          // distance from the base lift
  Vertex base = 0;                 // the base lift
  int radius = 0;
  // Lifts at depth < radius; their umbrellas are complete.
  VertexSet interior;
};

// Develops the host facet by facet around each lift, in order of distance
// from the base lift, identifying lifts only when an umbrella closes up.
CoverBall universal_cover_ball(const Graph& g, Vertex base, int radius,
                               std::size_t vertex_budget = 2'000'000);

struct CoverCheck {
  bool ok = false;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

// Checks that `projection` is a homomorphism and that edges and facets at
// each vertex of `check_at` lift uniquely.
CoverCheck validate_covering_map(const Graph& source, const Graph& target,
                                 const std::vector<Vertex>& projection,
                                 const VertexSet& check_at);

struct Decision {
  enum class Verdict { kConvergent, kDivergent, kUnsupported };
  Verdict verdict = Verdict::kUnsupported;
  std::string reason;
  // One line per gate, in the order evaluated.
  std::vector<std::string> gates;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

std::string to_string(Decision::Verdict verdict);

// Clique-convergence verdict for a finite connected graph: locally cyclic
// graphs of minimum degree 6 diverge exactly when 6-regular; all other inputs
// are unsupported.
Decision decide_finite(const Graph& g);

struct EmbeddingBound {
  int largest_embeddable = 0;
  // True when some size up to m_max fails to embed.
  bool bound_found = false;
};

// Largest m <= m_max such that the size-m triangle embeds as an induced
// subgraph of the ball interior. Requires radius >= m_max + 1.
EmbeddingBound delta_embedding_bound(const CoverBall& cb, int m_max);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_COVERS_H_
