#pragma once

#include "isub/common.hpp"

#include <utility>
#include <vector>

namespace isub {

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  // Duplicate edges are merged; self-loops and out-of-range endpoints throw OutOfRange.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  long long m() const { return m_; }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  int max_degree() const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<VertexSet> adj_;
  long long m_ = 0;
};

struct BipartitePartition {
  VertexSet a;
  VertexSet b;
};

struct DegeneracyOrdering {
  std::vector<int> order;
  int degeneracy = 0;
};

// An induced subgraph with its map back to host vertex ids (to_host is sorted ascending).
struct InducedGraph {
  Graph graph;
  std::vector<int> to_host;

  VertexSet lift(const VertexSet& local) const;
};

Rational average_degree(const Graph& g);
DegeneracyOrdering degeneracy(const Graph& g);
bool verify_degeneracy(const Graph& g, const DegeneracyOrdering& ord);
InducedGraph densest_prefix(const Graph& g);
InducedGraph induced(const Graph& g, const VertexSet& s);

// Edge counts inside a set and across two disjoint sets (sets sorted).
long long edges_within(const Graph& g, const VertexSet& s);
long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);
int degree_into(const Graph& g, int v, const VertexSet& s);
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
VertexSet all_vertices(int n);

// Greedy minimum-degree independent set (deterministic).
VertexSet greedy_independent_set(const Graph& g);

}  // namespace isub
