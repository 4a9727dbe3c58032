#pragma once

#include "isub/detectors.hpp"
#include "isub/graph.hpp"

#include <optional>
#include <vector>

namespace isub {

// Subgraph (not necessarily induced) copies of a small pattern.
long long automorphism_count(const Graph& f);
// Number of copies, stopping early once `limit` is reached (returns limit then).
long long count_copies(const Graph& g, const Graph& f, long long limit);
std::optional<std::vector<int>> find_copy(const Graph& g, const Graph& f);
// Induced embedding; throws BudgetExhausted past node_budget search nodes.
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& f, long long node_budget);

struct DeletionParams {
  double d = 1;
  double delta = 0.5;
  double eps = 0.1;
  double target = 0;    // required d(output); 0 selects d^{delta/(10|V(F)|)}
  double p = 0;         // vertex sampling probability; 0 selects d^{delta/(5|V(F)|) - 1}
  bool check_eps = true;  // enforce eps < delta/2
};

InducedGraph delete_copies(const Graph& g, const Graph& f, const DeletionParams& prm, const Ctl& ctl);
double deletion_threshold(int n, double d, int v0, double delta);  // n d^{v0-1-delta}

struct DenseOrC4 {
  enum Kind { LocallyDense, C4Free, IndependentSet } kind = C4Free;
  VertexSet vertices;  // host ids: the dense set, the C4-free set or the independent set
};

// deletion_p > 0 overrides the sampling probability of the deletion branch
DenseOrC4 dense_or_c4free(const Graph& g, double d, double eps, const Ctl& ctl, double c4free_target = 0,
                          double deletion_p = 0);
DenseOrC4 independent_or_dense(const Graph& g, double eps, const Ctl& ctl, double c4free_target = 0);

struct DrcOptions {
  int tuple = 0;               // number of random vertices; 0 means 10 s
  double common_exp = 0.9;     // common neighbourhoods must reach n^{common_exp}
  double size_exp = 1.0 / 3;   // |S| >= floor(n^{size_exp}) - 1
  VertexSet within;            // restrict the output; empty means all vertices
};

VertexSet drc(const Graph& g, int s, const Ctl& ctl, const DrcOptions& opt = {});
bool drc_precondition(const Graph& g, int s);

struct SupersatResult {
  bool dense_escape = false;
  Rational density;  // e(G[within]) / C(|within|, 2)
  std::vector<VertexSet> sets;
};

SupersatResult supersat_independent(const Graph& g, int s, const VertexSet& within, uint64_t seed = 1);

Witness too_dense(const Graph& g, int s, int t, int k, const Ctl& ctl, const DrcOptions& opt = {});

}  // namespace isub
