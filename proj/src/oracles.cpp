#include "isub/oracles.hpp"

#include <algorithm>

namespace isub {

namespace {

void check(const Graph& g, const OracleBudget& b, const char* who) {
  if (g.n() > b.max_vertices || g.m() > b.max_edges)
    throw OracleBudgetExceeded(std::string(who) + ": input exceeds oracle budget");
}

}  // namespace

long long oracle_count_c4(const Graph& g, const OracleBudget& b) {
  check(g, b, "oracle_count_c4");
  long long c = 0;
  for_each_subset(all_vertices(g.n()), 4, [&](const std::vector<int>& q) {
    // the three cyclic orders of 4 labelled points
    static const int ord[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    for (auto& o : ord) {
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i) ok = g.adjacent(q[o[i]], q[o[(i + 1) % 4]]);
      if (ok) ++c;
    }
    return true;
  });
  return c;
}

long long enumerate_c4_rooted(const Graph& g) {
  long long c = 0;
  for (int r = 0; r < g.n(); ++r) {
    VertexSet up;
    for (int a : g.neighbors(r))
      if (a > r) up.push_back(a);
    for (size_t i = 0; i < up.size(); ++i)
      for (size_t j = i + 1; j < up.size(); ++j) {
        const auto& na = g.neighbors(up[i]);
        const auto& nc = g.neighbors(up[j]);
        auto ia = std::upper_bound(na.begin(), na.end(), r);
        auto ic = std::upper_bound(nc.begin(), nc.end(), r);
        while (ia != na.end() && ic != nc.end()) {
          if (*ia < *ic)
            ++ia;
          else if (*ic < *ia)
            ++ic;
          else {
            ++c;
            ++ia;
            ++ic;
          }
        }
      }
  }
  return c;
}

VertexSet oracle_max_clique(const Graph& g, const OracleBudget& b) {
  check(g, b, "oracle_max_clique");
  VertexSet best, cur;
  // plain include/exclude recursion over vertices in id order
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.n()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    bool ok = true;
    for (int u : cur)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
    self(self, v + 1);
  };
  rec(rec, 0);
  return best;
}

std::optional<Biclique> oracle_find_kss(const Graph& g, int s, const OracleBudget& b) {
  check(g, b, "oracle_find_kss");
  if (s <= 0) return Biclique{};
  std::optional<Biclique> out;
  for_each_subset(all_vertices(g.n()), s, [&](const std::vector<int>& left) {
    VertexSet c = common_neighborhood(g, left);
    if (static_cast<int>(c.size()) >= s) {
      out = Biclique{left, VertexSet(c.begin(), c.begin() + s)};
      return false;
    }
    return true;
  });
  return out;
}

long long oracle_independent_sets(const Graph& g, int s, const VertexSet& within, const OracleBudget& b) {
  check(g, b, "oracle_independent_sets");
  long long c = 0;
  for_each_subset(sorted_unique(within), s, [&](const std::vector<int>& q) {
    bool ok = true;
    for (int i = 0; i < s && ok; ++i)
      for (int j = i + 1; j < s && ok; ++j) ok = !g.adjacent(q[i], q[j]);
    if (ok) ++c;
    return true;
  });
  return c;
}

std::optional<Biclique> oracle_find_induced_kst(const Graph& g, int s, int t, const OracleBudget& b) {
  check(g, b, "oracle_find_induced_kst");
  std::optional<Biclique> out;
  for_each_subset(all_vertices(g.n()), s, [&](const std::vector<int>& left) {
    if (!is_independent(g, left)) return true;
    VertexSet c = common_neighborhood(g, left);
    bool go = for_each_subset(c, t, [&](const std::vector<int>& right) {
      if (!is_independent(g, right)) return true;
      out = Biclique{left, right};
      return false;
    });
    return go;
  });
  return out;
}

}  // namespace isub
