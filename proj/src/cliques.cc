#include "cliquedyn/cliques.h"

#include <algorithm>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "cliquedyn/errors.h"

namespace cliquedyn {

CliqueBudget CliqueBudget::from_env() {
  CliqueBudget budget;
  if (const char* cap = std::getenv("CLIQUE_BUDGET_VERTICES")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(cap, &end, 10);
    if (end != cap && *end == '\0') budget.max_vertices = value;
  }
  return budget;
}

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, const CliqueBudget& budget)
      : g_(g), budget_(budget) {}

  std::vector<VertexSet> run() {
    // Degeneracy order keeps the top-level candidate sets small.
    const std::size_t n = g_.order();
    std::vector<std::size_t> deg(n);
    std::size_t maxdeg = 0;
    for (Vertex v = 0; v < n; ++v) {
      deg[v] = g_.degree(v);
      maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::vector<Vertex>> buckets(maxdeg + 1);
    for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> position(n);
    std::vector<Vertex> order;
    order.reserve(n);
    std::size_t low = 0;
    while (order.size() < n) {
      while (low > 0 && !buckets[low - 1].empty()) --low;
      while (buckets[low].empty()) ++low;
      Vertex v = buckets[low].back();
      buckets[low].pop_back();
      if (removed[v] || deg[v] != low) continue;
      removed[v] = true;
      position[v] = order.size();
      order.push_back(v);
      for (Vertex w : g_.neighbours(v)) {
        if (!removed[w]) buckets[--deg[w]].push_back(w);
      }
    }
    for (Vertex v : order) {
      VertexSet p;
      VertexSet x;
      for (Vertex w : g_.neighbours(v)) {
        (position[w] > position[v] ? p : x).push_back(w);
      }
      std::vector<Vertex> r{v};
      expand(r, std::move(p), std::move(x));
    }
    for (auto& c : out_) std::sort(c.begin(), c.end());
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void expand(std::vector<Vertex>& r, VertexSet p, VertexSet x) {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("maximal clique search exceeded " +
                           std::to_string(budget_.max_nodes) + " nodes");
    }
    if (p.empty()) {
      if (x.empty()) {
        out_.push_back(r);
        if (out_.size() > budget_.max_vertices) {
          throw BudgetExceeded("more than " +
                               std::to_string(budget_.max_vertices) +
                               " maximal cliques");
        }
      }
      return;
    }
    // Pivot maximising |P ∩ N(u)| over P ∪ X.
    Vertex pivot = p[0];
    std::size_t best = 0;
    bool first = true;
    for (const VertexSet* s : {&p, &x}) {
      for (Vertex u : *s) {
        std::size_t c = set_intersection(p, g_.neighbours(u)).size();
        if (first || c > best) {
          pivot = u;
          best = c;
          first = false;
        }
      }
    }
    VertexSet branch = set_difference(p, g_.neighbours(pivot));
    for (Vertex v : branch) {
      const auto& nv = g_.neighbours(v);
      r.push_back(v);
      expand(r, set_intersection(p, nv), set_intersection(x, nv));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  CliqueBudget budget_;
  std::size_t nodes_ = 0;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> max_cliques(const Graph& g, const CliqueBudget& budget) {
  return BronKerbosch(g, budget).run();
}

CliqueGraph clique_graph(const Graph& g, const CliqueBudget& budget) {
  CliqueGraph result;
  result.members = max_cliques(g, budget);
  std::vector<std::vector<Vertex>> containing(g.order());
  for (Vertex i = 0; i < result.members.size(); ++i) {
    for (Vertex v : result.members[i]) containing[v].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& list : containing) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        edges.emplace_back(list[a], list[b]);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.graph = Graph::with_order(result.members.size(), edges,
                                   g.name().empty() ? "k" : "k(" + g.name() + ")");
  return result;
}

std::string to_string(IterationTrace::Verdict verdict) {
  switch (verdict) {
    case IterationTrace::Verdict::kConverged:
      return "converged";
    case IterationTrace::Verdict::kBudgetExceeded:
      return "budget-exceeded";
    case IterationTrace::Verdict::kDivergingEvidence:
      return "diverging-evidence";
    case IterationTrace::Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::string IterationTrace::json_lines() const {
  std::string out;
  for (const auto& s : steps) {
    nlohmann::json line = {{"n", s.n},
                           {"vertices", s.vertices},
                           {"edges", s.edges},
                           {"digest", s.digest}};
    out += line.dump() + "\n";
  }
  return out;
}

IterationTrace iterate_k(const Graph& g, int max_steps,
                         const CliqueBudget& budget) {
  IterationTrace trace;
  std::vector<Graph> iterates{g};
  trace.steps.push_back({0, g.order(), g.size(), canonical_hash(g)});
  for (int n = 1; n <= max_steps; ++n) {
    try {
      iterates.push_back(clique_graph(iterates.back(), budget).graph);
    } catch (const BudgetExceeded& e) {
      trace.verdict = IterationTrace::Verdict::kBudgetExceeded;
      trace.message = e.what();
      return trace;
    }
    const Graph& cur = iterates.back();
    trace.steps.push_back({n, cur.order(), cur.size(), canonical_hash(cur)});
    for (int j = 0; j < n; ++j) {
      if (trace.steps[j].digest != trace.steps[n].digest) continue;
      IsoResult iso = is_isomorphic(iterates[j], cur);
      if (iso.isomorphic()) {
        trace.verdict = IterationTrace::Verdict::kConverged;
        trace.converged_n = j;
        trace.period = n - j;
        return trace;
      }
      if (iso.outcome == IsoResult::Outcome::kBudgetExceeded) {
        trace.message = "isomorphism check at step " + std::to_string(n) +
                        " exceeded its budget";
      }
    }
  }
  // Growth counts as evidence only when the increments do not shrink.
  const auto& st = trace.steps;
  bool growing = st.size() > 1;
  for (std::size_t i = 1; i < st.size(); ++i) {
    growing = growing && st[i].vertices > st[i - 1].vertices;
    if (i >= 2) {
      growing = growing && st[i].vertices - st[i - 1].vertices >=
                               st[i - 1].vertices - st[i - 2].vertices;
    }
  }
  trace.verdict = growing ? IterationTrace::Verdict::kDivergingEvidence
                          : IterationTrace::Verdict::kInconclusive;
  return trace;
}

}  // namespace cliquedyn
