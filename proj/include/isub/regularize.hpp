#pragma once

#include "isub/graph.hpp"

namespace isub {

struct AlmostRegularCertificate {
  VertexSet subgraph;  // host ids
  Rational avg;
  int max_deg = 0;
  Rational slack;  // max_deg / avg
};

struct DichotomyOutcome {
  enum Kind { Unbalanced, AlmostRegular } kind = AlmostRegular;
  BipartitePartition partition;  // Unbalanced: a = light side, b = heavy side
  long long edges_across = 0;
  AlmostRegularCertificate cert;
};

// Recomputes avg/max_deg/slack from the induced subgraph.
bool certificate_consistent(const Graph& g, const AlmostRegularCertificate& c);
AlmostRegularCertificate make_certificate(const Graph& g, const VertexSet& s);

// Works on the bipartite graph of edges between part.a and part.b (edges inside a side are ignored).
// Returns the sides of the sampled induced subgraph.
BipartitePartition biregular_to_regular(const Graph& g, const BipartitePartition& part, double l, const Ctl& ctl);
bool is_almost_biregular(const Graph& g, const BipartitePartition& part, double l);

// c1, c2: explicit constants of the certificate bounds max_deg <= c1 log^2(l) avg and avg >= d / (c2 log^2(l)).
AlmostRegularCertificate bootstrap_almost_regular(const Graph& g, double d, double l, const Ctl& ctl,
                                                  double c1 = 28800, double c2 = 3200);

DichotomyOutcome dichotomy(const Graph& g, double d, double l, const Ctl& ctl, double c1 = 28800, double c2 = 3200);

}  // namespace isub
