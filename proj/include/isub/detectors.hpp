#pragma once

#include "isub/config.hpp"
#include "isub/graph.hpp"
#include "isub/oracles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isub {

long long count_c4(const Graph& g);  // via codegrees
long long c4_through_edge(const Graph& g, int x, int y);

struct RamseyResult {
  enum Kind { Clique, Independent, Failure } kind = Failure;
  VertexSet set;
};

// Upper bound binom(k+t-2, k-1) from the pivot recursion.
long long ramsey_bound(int k, int t);
RamseyResult ramsey_split(const Graph& g, const VertexSet& within, int k, int t);

// Exact searches with a node budget; BudgetExhausted when the budget runs out.
std::optional<Biclique> find_kss(const Graph& g, int s, long long node_budget = 50'000'000);
std::optional<Biclique> find_induced_kst(const Graph& g, int s, int t, long long node_budget = 50'000'000);
VertexSet max_clique(const Graph& g);
long long count_independent_sets(const Graph& g, int s, const VertexSet& within);

enum class WitnessKind { Clique, KssSubgraph, InducedKst, C4FreeDense, InducedBalancedSubdivision, OneSubdivision };

const char* kind_name(WitnessKind k);
std::optional<WitnessKind> kind_from_name(const std::string& s);

struct Witness {
  WitnessKind kind = WitnessKind::Clique;
  VertexSet vertices;        // Clique, C4FreeDense
  VertexSet left, right;     // bicliques; for OneSubdivision left = edge-vertices, right = branch-vertices
  Rational claimed_degree;   // C4FreeDense
  std::vector<int> branch;   // balanced subdivision branch vertices
  std::vector<std::vector<int>> paths;  // one per pair i<j (lexicographic), branch[i] ... branch[j]
  int path_length = 0;       // edges per path
  int uniformity = 0;        // OneSubdivision

  bool operator==(const Witness& o) const;
};

struct Verdict {
  bool accepted = false;
  std::string clause;  // first violated clause, empty when accepted
  std::string detail;

  static Verdict ok() { return {true, "", ""}; }
  static Verdict reject(std::string c, std::string d = "") { return {false, std::move(c), std::move(d)}; }
};

Verdict verify_witness(const Graph& g, const Witness& w, const RunConfig& params = {});

// Plain subgraph check of a subdivision of K_h (paths of length >= 1, internally disjoint).
Verdict verify_subdivision_subgraph(const Graph& g, const std::vector<int>& branch,
                                    const std::vector<std::vector<int>>& paths);

// Induced-copy check: host[image] must equal pattern under the map pattern vertex i -> image[i].
bool verify_induced_copy(const Graph& host, const Graph& pattern, const std::vector<int>& image);

}  // namespace isub
