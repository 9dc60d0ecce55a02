#ifndef CLIQUEDYN_LEMMAS_H_
#define CLIQUEDYN_LEMMAS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliquedyn/hexgrid.h"
#include "cliquedyn/surface.h"

namespace cliquedyn {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  int m = 4;
  int n = 1;
  int radius = 10;
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// lhg, inclusion, straight, neighbours, equivalence, discharge, cover.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

// Named maximal cliques through the origin of the local graph: the bottom
// clique, three clique of the second kind and three of the third.
struct NamedClique {
  std::string name;
  VertexSet members;
};
std::vector<NamedClique> lhg_named_cliques(const LocalHexGraph& lhg);

// Number of size (m - k) triangles inside the size-m triangle, k in {1, 2}.
int expected_inclusion_count(int m, int k);

// Grows a random disc of about `facets` facets inside the region, starting
// near the origin, and returns its boundary cycle. The disc itself is written
// to `disc` when given.
std::vector<Vertex> random_disc_boundary(const HexRegion& region, int facets,
                                         std::mt19937_64& rng,
                                         std::vector<Facet>* disc = nullptr);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_LEMMAS_H_
