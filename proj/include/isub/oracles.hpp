#pragma once

// Brute-force references. Exponential on purpose; they refuse inputs above the budget.

#include "isub/graph.hpp"

#include <optional>

namespace isub {

struct OracleBudget {
  int max_vertices = 24;
  long long max_edges = 400;
};

struct Biclique {
  VertexSet left;
  VertexSet right;
};

long long oracle_count_c4(const Graph& g, const OracleBudget& b = {});
VertexSet oracle_max_clique(const Graph& g, const OracleBudget& b = {});
std::optional<Biclique> oracle_find_kss(const Graph& g, int s, const OracleBudget& b = {});
long long oracle_independent_sets(const Graph& g, int s, const VertexSet& within, const OracleBudget& b = {});
std::optional<Biclique> oracle_find_induced_kst(const Graph& g, int s, int t, const OracleBudget& b = {});

// Exact C4 count, polynomial, independent of the codegree formula: each cycle is
// counted once from its smallest vertex. Used where the graph exceeds the oracle budget.
long long enumerate_c4_rooted(const Graph& g);

}  // namespace isub
