#pragma once

#include "isub/generators.hpp"
#include "isub/graph.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace fix {

inline isub::Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  return isub::Graph::from_edges(10, e);
}

inline isub::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return isub::Graph::from_edges(n, e);
}

inline isub::Graph star(int leaves) { return isub::gen::complete_bipartite(1, leaves); }

// Random tree: vertex v attaches to a uniformly chosen earlier vertex.
inline isub::Graph tree(int n, uint64_t seed) { return isub::gen::random_degenerate(n, 1, seed); }

// PG(2,8) incidence graph with 50 random extra pairs (loops skipped, repeats merged)
inline isub::Graph padded_plane() {
  auto p = isub::gen::incidence_plane(8);
  auto e = p.edges();
  isub::Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    int u = static_cast<int>(rng() % p.n()), v = static_cast<int>(rng() % p.n());
    if (u != v) e.emplace_back(std::min(u, v), std::max(u, v));
  }
  return isub::Graph::from_edges(p.n(), e);
}

}  // namespace fix
