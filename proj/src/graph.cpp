#include "isub/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace isub {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw OutOfRange("edge endpoint out of range");
    if (u == v) throw OutOfRange("self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  long long twice = 0;
  for (auto& a : g.adj_) {
    a = sorted_unique(std::move(a));
    twice += static_cast<long long>(a.size());
  }
  g.m_ = twice / 2;
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = static_cast<int>(adj_[0].size());
  for (auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet InducedGraph::lift(const VertexSet& local) const {
  VertexSet out;
  out.reserve(local.size());
  for (int v : local) out.push_back(to_host[v]);
  return sorted_unique(std::move(out));
}

Rational average_degree(const Graph& g) {
  if (g.n() == 0) return Rational(0);
  return Rational(2 * g.m(), g.n());
}

DegeneracyOrdering degeneracy(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    q.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  DegeneracyOrdering out;
  out.order.reserve(n);
  while (!q.empty()) {
    auto [d, v] = *q.begin();
    q.erase(q.begin());
    removed[v] = 1;
    out.order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, d);
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      q.erase({deg[w], w});
      --deg[w];
      q.emplace(deg[w], w);
    }
  }
  return out;
}

bool verify_degeneracy(const Graph& g, const DegeneracyOrdering& ord) {
  int n = g.n();
  if (static_cast<int>(ord.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ord.order[i];
    if (v < 0 || v >= n || pos[v] != -1) return false;
    pos[v] = i;
  }
  for (int v = 0; v < n; ++v) {
    int later = 0;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) ++later;
    if (later > ord.degeneracy) return false;
  }
  return true;
}

InducedGraph densest_prefix(const Graph& g) {
  int n = g.n();
  if (n == 0) return induced(g, {});
  auto ord = degeneracy(g);
  std::vector<char> removed(n, 0);
  long long m = g.m();
  // best suffix: maximize 2m_i/(n-i); later suffixes win ties
  int best = 0;
  long long best_m = m;
  for (int i = 0; i < n; ++i) {
    long long rest = n - i;
    long long best_rest = n - best;
    if ((__int128)m * best_rest >= (__int128)best_m * rest) {
      best = i;
      best_m = m;
    }
    int v = ord.order[i];
    int live = 0;
    for (int w : g.neighbors(v))
      if (!removed[w]) ++live;
    removed[v] = 1;
    m -= live;
  }
  VertexSet keep(ord.order.begin() + best, ord.order.end());
  return induced(g, sorted_unique(std::move(keep)));
}

InducedGraph induced(const Graph& g, const VertexSet& s_in) {
  VertexSet s = sorted_unique(s_in);
  for (int v : s)
    if (v < 0 || v >= g.n()) throw OutOfRange("induced: vertex id out of range");
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) local[s[i]] = i;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    for (int w : g.neighbors(s[i]))
      if (local[w] > i) e.emplace_back(i, local[w]);
  InducedGraph out;
  out.graph = Graph::from_edges(static_cast<int>(s.size()), e);
  out.to_host = s;
  return out;
}

long long edges_within(const Graph& g, const VertexSet& s) {
  long long c = 0;
  for (int v : s) c += intersection_size(g.neighbors(v), s);
  return c / 2;
}

long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long long c = 0;
  for (int v : a) c += intersection_size(g.neighbors(v), b);
  return c;
}

int degree_into(const Graph& g, int v, const VertexSet& s) { return intersection_size(g.neighbors(v), s); }

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  if (s.empty()) return all_vertices(g.n());
  VertexSet c = g.neighbors(s[0]);
  for (size_t i = 1; i < s.size() && !c.empty(); ++i) c = set_intersection(c, g.neighbors(s[i]));
  return c;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  VertexSet t = sorted_unique(s);
  for (int v : t)
    if (intersection_size(g.neighbors(v), t) != 0) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

VertexSet all_vertices(int n) {
  VertexSet v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

VertexSet greedy_independent_set(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    q.emplace(deg[v], v);
  }
  std::vector<char> gone(n, 0);
  VertexSet out;
  auto drop = [&](int v) {
    q.erase({deg[v], v});
    gone[v] = 1;
    for (int w : g.neighbors(v)) {
      if (gone[w]) continue;
      q.erase({deg[w], w});
      --deg[w];
      q.emplace(deg[w], w);
    }
  };
  while (!q.empty()) {
    int v = q.begin()->second;
    out.push_back(v);
    std::vector<int> nb;
    for (int w : g.neighbors(v))
      if (!gone[w]) nb.push_back(w);
    drop(v);
    for (int w : nb)
      if (!gone[w]) drop(w);
  }
  return sorted_unique(std::move(out));
}

}  // namespace isub
