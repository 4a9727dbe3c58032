#pragma once

#include "isub/detectors.hpp"
#include "isub/graph.hpp"

#include <optional>
#include <vector>

namespace isub {

struct Multihypergraph {
  int n = 0;
  int s = 0;
  std::vector<VertexSet> edges;  // each sorted, s distinct vertices in [0, n)

  Rational average_degree() const;  // s|E|/n
  bool valid() const;
};

// a: edge-vertices, b: branch-vertices, both host ids (sorted). The edge of x in a is N(x) ∩ b.
struct OneSubdivision {
  VertexSet a;
  VertexSet b;
  int uniformity = 0;
};

Witness to_witness(const OneSubdivision& w);
OneSubdivision from_witness(const Witness& w);

// Host graph of the 1-subdivision: b-vertices 0..n-1, then one a-vertex per edge in order.
Graph one_subdivision_graph(const Multihypergraph& h, OneSubdivision* w = nullptr);

// Vertices of the result are positions in w.b, edges follow the order of w.a.
Multihypergraph recover_hypergraph(const Graph& g, const OneSubdivision& w);

// Keeps the listed edge indices (into recover_hypergraph order) and b positions; edges touching a dropped vertex go too.
OneSubdivision sub_subdivision(const Graph& g, const OneSubdivision& w, const std::vector<int>& keep_edges,
                               const VertexSet& keep_vertices);

// Some hyperedge repeated t times gives t a-vertices over one s-set: an induced K_{s,t}.
std::optional<Witness> find_heavy_multiplicity(const Graph& g, const OneSubdivision& w, int t);

OneSubdivision drop_uniformity(const Graph& g, const OneSubdivision& w, int s, int t, const Ctl& ctl);

struct BalancedSubdivision {
  std::vector<int> branch;
  std::vector<std::vector<int>> paths;  // pairs i<j in lexicographic order
  int length = 0;
};

std::optional<BalancedSubdivision> find_balanced_clique_subdivision(const Graph& h, int h_target,
                                                                    long long node_budget = 2'000'000,
                                                                    int max_length = 6);

// Throws NotFound when the base graph has no subdivision the finder can locate.
Witness subdivision_reduction(const Graph& g, const OneSubdivision& w, int s, int t, int h_target, const Ctl& ctl,
                              long long node_budget = 2'000'000);

VertexSet make_regular(const Graph& g, const BipartitePartition& part, double d, const Ctl& ctl);

struct UnbalancedParams {
  double p = 0;       // 0 selects 1/(2(10+s)d)
  double target = 0;  // required d(H); 0 selects d
};

OneSubdivision unbalanced_to_subdivision(const Graph& g, const BipartitePartition& part, double d, int s, int k,
                                         const Ctl& ctl, const UnbalancedParams& prm = {});

struct AlmostRegularParams {
  double cleanup_p = 0;     // 0 selects d0^{-9/10}
  double extraction_p = 0;  // 0 selects d^{-1-eta/s}
  double eta = 1.0 / 2000;
  double target = 1;        // required d(H)
};

OneSubdivision almost_regular_to_subdivision(const Graph& g0, int s, int t, int k, const Ctl& ctl,
                                             const AlmostRegularParams& prm = {});

}  // namespace isub
