#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "cliquedyn/graph.h"

namespace cliquedyn {
namespace {

using Colours = std::vector<std::uint64_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser over the running state.
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

std::size_t count_classes(const Colours& c) {
  std::unordered_set<std::uint64_t> seen(c.begin(), c.end());
  return seen.size();
}

Colours refine_once(const Graph& g, const Colours& c) {
  Colours next(c.size());
  std::vector<std::uint64_t> nb;
  for (Vertex v = 0; v < g.order(); ++v) {
    nb.clear();
    for (Vertex w : g.neighbours(v)) nb.push_back(c[w]);
    std::sort(nb.begin(), nb.end());
    std::uint64_t h = mix(0x51ed27ULL, c[v]);
    for (auto x : nb) h = mix(h, x);
    next[v] = h;
  }
  return next;
}

// Refines both colourings in lock step so their values stay comparable.
void refine_pair(const Graph& a, Colours& ca, const Graph& b, Colours& cb) {
  std::size_t na = count_classes(ca);
  std::size_t nb = count_classes(cb);
  while (true) {
    ca = refine_once(a, ca);
    cb = refine_once(b, cb);
    std::size_t ma = count_classes(ca);
    std::size_t mb = count_classes(cb);
    if (ma == na && mb == nb) return;
    na = ma;
    nb = mb;
  }
}

bool same_histogram(Colours a, Colours b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

struct Search {
  const Graph& a;
  const Graph& b;
  std::size_t budget;
  std::size_t nodes = 0;
  bool exhausted = false;
  std::vector<Vertex> mapping;

  bool run(Colours ca, Colours cb, std::uint64_t depth) {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    refine_pair(a, ca, b, cb);
    if (!same_histogram(ca, cb)) return false;
    // Smallest non-singleton cell, ties broken by colour value.
    std::unordered_map<std::uint64_t, std::size_t> sizes;
    for (auto c : ca) ++sizes[c];
    std::uint64_t cell = 0;
    std::size_t best = 0;
    for (const auto& [c, s] : sizes) {
      if (s > 1 && (best == 0 || s < best || (s == best && c < cell))) {
        best = s;
        cell = c;
      }
    }
    if (best == 0) {
      std::unordered_map<std::uint64_t, Vertex> where;
      for (Vertex w = 0; w < b.order(); ++w) where[cb[w]] = w;
      mapping.assign(a.order(), 0);
      for (Vertex v = 0; v < a.order(); ++v) mapping[v] = where[ca[v]];
      return is_isomorphism(a, b, mapping);
    }
    Vertex pick = 0;
    while (ca[pick] != cell) ++pick;
    std::uint64_t fresh = mix(0xfeedULL, depth + 1);
    for (Vertex w = 0; w < b.order(); ++w) {
      if (cb[w] != cell) continue;
      Colours na = ca;
      Colours nb = cb;
      na[pick] = mix(fresh, cell);
      nb[w] = mix(fresh, cell);
      if (run(std::move(na), std::move(nb), depth + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b,
                    const std::vector<Vertex>& mapping) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (mapping.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (Vertex v : mapping) {
    if (v >= b.order() || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& [u, v] : a.edges()) {
    if (!b.adjacent(mapping[u], mapping[v])) return false;
  }
  return true;
}

IsoResult is_isomorphic(const Graph& a, const Graph& b,
                        std::size_t node_budget) {
  IsoResult result;
  if (a.order() != b.order() || a.size() != b.size()) return result;
  if (a.order() == 0) {
    result.outcome = IsoResult::Outcome::kIsomorphic;
    return result;
  }
  Search search{a, b, node_budget, 0, false, {}};
  Colours ca(a.order(), 1);
  Colours cb(b.order(), 1);
  if (search.run(std::move(ca), std::move(cb), 0)) {
    result.outcome = IsoResult::Outcome::kIsomorphic;
    result.mapping = std::move(search.mapping);
  } else if (search.exhausted) {
    result.outcome = IsoResult::Outcome::kBudgetExceeded;
  }
  return result;
}

std::string canonical_hash(const Graph& g) {
  Colours c(g.order(), 1);
  std::size_t classes = count_classes(c);
  while (true) {
    c = refine_once(g, c);
    std::size_t next = count_classes(c);
    if (next == classes) break;
    classes = next;
  }
  std::sort(c.begin(), c.end());
  std::uint64_t h = mix(mix(0x6b1dULL, g.order()), g.size());
  for (auto x : c) h = mix(h, x);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cliquedyn
