#pragma once

#include "isub/graph.hpp"

#include <cstdint>

namespace isub::gen {

Graph gnp(int n, double p, uint64_t seed);
Graph complement_gnp(int n, double p, uint64_t seed);  // complement of G(n, p)
Graph complement(const Graph& g);

// Point-line incidence graph of the projective plane over GF(q), q a prime power (points first).
Graph incidence_plane(int q);
Graph heawood();

Graph h_k(int k);
Graph one_subdivision_of_clique(int h);
Graph multipartite(int parts, int size);  // complete multipartite, parts of equal size

Graph complete(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph pad_isolated(const Graph& g, int extra);

// Random d-degenerate graph: each new vertex joins up to d uniformly chosen earlier vertices.
Graph random_degenerate(int n, int d, uint64_t seed);

}  // namespace isub::gen
