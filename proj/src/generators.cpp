#include "isub/generators.hpp"

#include "isub/pipeline.hpp"
#include "isub/shattering.hpp"

#include <algorithm>
#include <array>
#include <iterator>

namespace isub::gen {

Graph gnp(int n, double p, uint64_t seed) {
  if (n < 0 || p < 0 || p > 1) throw OutOfRange("gnp: need n >= 0 and p in [0,1]");
  Rng rng(mix_seed(seed, "gnp"));
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph::from_edges(g.n(), e);
}

Graph complement_gnp(int n, double p, uint64_t seed) { return complement(gnp(n, p, seed)); }

namespace {

// GF(p^m) with elements encoded in base p; arithmetic by table.
struct Field {
  int q = 0, p = 0, m = 0;
  std::vector<int> add, mul;

  int plus(int a, int b) const { return add[a * q + b]; }
  int times(int a, int b) const { return mul[a * q + b]; }
};

Field make_field(int q) {
  if (q < 2 || q > 256) throw OutOfRange("incidence-plane: need 2 <= q <= 256");
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int m = 0;
  for (int r = q; r > 1; r /= p) {
    if (r % p != 0) throw OutOfRange("incidence-plane: q must be a prime power");
    ++m;
  }
  auto digits = [&](int a) {
    std::vector<int> d(m);
    for (int i = 0; i < m; ++i, a /= p) d[i] = a % p;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = m - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  };
  Field f;
  f.q = q;
  f.p = p;
  f.m = m;
  f.add.resize(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto x = digits(a), y = digits(b);
      for (int i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
      f.add[a * q + b] = encode(x);
    }
  // try monic reduction polynomials x^m + c(x) until multiplication has no zero divisors
  for (int c = 0; c < q; ++c) {
    auto red = digits(c);  // x^m == -red
    f.mul.assign(q * q, 0);
    bool field = true;
    for (int a = 0; a < q && field; ++a)
      for (int b = 0; b < q; ++b) {
        auto x = digits(a), y = digits(b);
        std::vector<int> prod(2 * m, 0);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        for (int k = 2 * m - 2; k >= m; --k) {
          int t = prod[k];
          prod[k] = 0;
          for (int i = 0; i < m; ++i) prod[k - m + i] = ((prod[k - m + i] - t * red[i]) % p + p) % p;
        }
        int r = encode(std::vector<int>(prod.begin(), prod.begin() + m));
        if (a && b && r == 0) {
          field = false;
          break;
        }
        f.mul[a * q + b] = r;
      }
    if (field) return f;
  }
  throw InvariantViolation("incidence-plane: no irreducible polynomial found");
}

// normalized representatives of the 1-dimensional subspaces of GF(q)^3
std::vector<std::array<int, 3>> projective_points(int q) {
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  return pts;
}

}  // namespace

Graph incidence_plane(int q) {
  Field f = make_field(q);
  auto pts = projective_points(q);
  int np = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j) {
      int s = 0;
      for (int c = 0; c < 3; ++c) s = f.plus(s, f.times(pts[i][c], pts[j][c]));
      if (s == 0) e.emplace_back(i, np + j);
    }
  return Graph::from_edges(2 * np, e);
}

Graph heawood() { return incidence_plane(2); }

Graph h_k(int k) { return construct_hk(k).graph; }

Graph one_subdivision_of_clique(int h) {
  if (h < 1) throw OutOfRange("one-subdivision-of-clique: need h >= 1");
  return clique_one_subdivision(h);
}

Graph multipartite(int parts, int size) {
  if (parts < 1 || size < 1) throw OutOfRange("multipartite: need parts >= 1 and size >= 1");
  int n = parts * size;
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / size != v / size) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph complete(int n) { return multipartite(n, 1); }

Graph cycle(int n) {
  if (n < 3) throw OutOfRange("cycle: need n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(a.n() + u, a.n() + v);
  return Graph::from_edges(a.n() + b.n(), e);
}

Graph pad_isolated(const Graph& g, int extra) { return Graph::from_edges(g.n() + extra, g.edges()); }

Graph random_degenerate(int n, int d, uint64_t seed) {
  Rng rng(mix_seed(seed, "random_degenerate"));
  std::vector<std::pair<int, int>> e;
  std::vector<int> prev;
  for (int v = 0; v < n; ++v) {
    std::vector<int> pick;
    std::sample(prev.begin(), prev.end(), std::back_inserter(pick), d, rng);
    for (int u : pick) e.emplace_back(u, v);
    prev.push_back(v);
  }
  return Graph::from_edges(n, e);
}

}  // namespace isub::gen
