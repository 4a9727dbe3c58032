#include "isub/detectors.hpp"

#include <algorithm>
#include <set>

namespace isub {

long long count_c4(const Graph& g) {
  // sum over unordered pairs {u,w} of C(codeg,2) counts every 4-cycle twice (once per diagonal)
  int n = g.n();
  std::vector<int> cnt(n, 0);
  std::vector<int> touched;
  long long twice = 0;
  for (int u = 0; u < n; ++u) {
    touched.clear();
    for (int v : g.neighbors(u))
      for (int w : g.neighbors(v)) {
        if (w <= u) continue;
        if (cnt[w]++ == 0) touched.push_back(w);
      }
    for (int w : touched) {
      long long c = cnt[w];
      twice += c * (c - 1) / 2;
      cnt[w] = 0;
    }
  }
  return twice / 2;
}

long long c4_through_edge(const Graph& g, int x, int y) {
  if (!g.adjacent(x, y)) return 0;
  // cycles x-y-w-z-x with z in N(x)\{y}, w in N(z) ∩ N(y) \ {x}
  long long c = 0;
  const auto& ny = g.neighbors(y);
  for (int z : g.neighbors(x)) {
    if (z == y) continue;
    c += intersection_size(g.neighbors(z), ny) - 1;  // x is always a common neighbour of z and y
  }
  return c;
}

long long ramsey_bound(int k, int t) {
  if (k <= 0 || t <= 0) return 0;
  if (k == 1 || t == 1) return 1;
  return binom_ll(k + t - 2, k - 1);
}

namespace {

bool ramsey_rec(const Graph& g, const VertexSet& within, int k, int t, RamseyResult& out) {
  if (k <= 0) {
    out = {RamseyResult::Clique, {}};
    return true;
  }
  if (t <= 0) {
    out = {RamseyResult::Independent, {}};
    return true;
  }
  if (within.empty()) return false;
  if (k == 1) {
    out = {RamseyResult::Clique, {within[0]}};
    return true;
  }
  if (t == 1) {
    out = {RamseyResult::Independent, {within[0]}};
    return true;
  }
  int v = within[0];
  VertexSet nb, non;
  for (size_t i = 1; i < within.size(); ++i) (g.adjacent(v, within[i]) ? nb : non).push_back(within[i]);
  long long bn = ramsey_bound(k - 1, t), bm = ramsey_bound(k, t - 1);
  auto try_n = [&] {
    if (!ramsey_rec(g, nb, k - 1, t, out)) return false;
    if (out.kind == RamseyResult::Clique) out.set.push_back(v);
    return true;
  };
  auto try_m = [&] {
    if (!ramsey_rec(g, non, k, t - 1, out)) return false;
    if (out.kind == RamseyResult::Independent) out.set.push_back(v);
    return true;
  };
  if (static_cast<long long>(nb.size()) >= bn) return try_n();
  if (static_cast<long long>(non.size()) >= bm) return try_m();
  return try_n() || try_m();
}

}  // namespace

RamseyResult ramsey_split(const Graph& g, const VertexSet& within, int k, int t) {
  RamseyResult r;
  VertexSet w = sorted_unique(within);
  if (!ramsey_rec(g, w, k, t, r)) return {RamseyResult::Failure, {}};
  r.set = sorted_unique(r.set);
  bool ok = r.kind == RamseyResult::Clique ? (static_cast<int>(r.set.size()) == k && is_clique(g, r.set))
                                            : (static_cast<int>(r.set.size()) == t && is_independent(g, r.set));
  if (!ok) throw InvariantViolation("ramsey_split produced an invalid set");
  return r;
}

namespace {

VertexSet core_vertices(const Graph& g, int s) {
  int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < s) {
      alive[v] = 0;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (alive[w] && --deg[w] < s) {
        alive[w] = 0;
        stack.push_back(w);
      }
  }
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

struct NodeCounter {
  long long used = 0, cap;
  void tick() {
    if (++used > cap) throw BudgetExhausted("search node budget exhausted");
  }
};

// independent t-subset of cand (sorted) by backtracking
bool find_independent_in(const Graph& g, const VertexSet& cand, int t, VertexSet& cur, NodeCounter& nc) {
  if (static_cast<int>(cur.size()) == t) return true;
  if (static_cast<int>(cand.size()) < t - static_cast<int>(cur.size())) return false;
  for (size_t i = 0; i < cand.size(); ++i) {
    if (static_cast<int>(cand.size() - i) < t - static_cast<int>(cur.size())) return false;
    nc.tick();
    int v = cand[i];
    VertexSet rest(cand.begin() + i + 1, cand.end());
    rest = set_difference(rest, g.neighbors(v));
    cur.push_back(v);
    if (find_independent_in(g, rest, t, cur, nc)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Biclique> find_kss(const Graph& g, int s, long long node_budget) {
  if (s <= 0) return Biclique{};
  VertexSet alive = core_vertices(g, s);
  if (static_cast<int>(alive.size()) < 2 * s) return std::nullopt;
  // high-degree vertices first finds dense instances quickly; the search is exhaustive either way
  std::vector<int> cand = alive;
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  NodeCounter nc{0, node_budget};
  VertexSet left;
  std::optional<Biclique> out;
  auto rec = [&](auto&& self, size_t start, const VertexSet& common) -> bool {
    if (static_cast<int>(left.size()) == s) {
      out = Biclique{sorted_unique(left), VertexSet(common.begin(), common.begin() + s)};
      return true;
    }
    for (size_t i = start; i < cand.size(); ++i) {
      if (static_cast<int>(cand.size() - i) < s - static_cast<int>(left.size())) break;
      nc.tick();
      int v = cand[i];
      VertexSet c = left.empty() ? set_intersection(g.neighbors(v), alive) : set_intersection(common, g.neighbors(v));
      if (static_cast<int>(c.size()) < s) continue;
      left.push_back(v);
      if (self(self, i + 1, c)) return true;
      left.pop_back();
    }
    return false;
  };
  rec(rec, 0, {});
  return out;
}

std::optional<Biclique> find_induced_kst(const Graph& g, int s, int t, long long node_budget) {
  if (s > t) std::swap(s, t);
  if (s <= 0) {
    // K_{0,t}: an independent t-set
    NodeCounter nc{0, node_budget};
    VertexSet cur;
    if (find_independent_in(g, all_vertices(g.n()), t, cur, nc)) return Biclique{{}, sorted_unique(cur)};
    return std::nullopt;
  }
  VertexSet alive = core_vertices(g, s);
  NodeCounter nc{0, node_budget};
  VertexSet left;
  std::optional<Biclique> out;
  auto rec = [&](auto&& self, const VertexSet& cand, const VertexSet& common) -> bool {
    if (static_cast<int>(left.size()) == s) {
      VertexSet right;
      if (find_independent_in(g, common, t, right, nc)) {
        out = Biclique{sorted_unique(left), sorted_unique(right)};
        return true;
      }
      return false;
    }
    for (size_t i = 0; i < cand.size(); ++i) {
      if (static_cast<int>(cand.size() - i) < s - static_cast<int>(left.size())) break;
      nc.tick();
      int v = cand[i];
      VertexSet c = left.empty() ? set_intersection(g.neighbors(v), alive) : set_intersection(common, g.neighbors(v));
      if (static_cast<int>(c.size()) < t) continue;
      VertexSet rest = set_difference(VertexSet(cand.begin() + i + 1, cand.end()), g.neighbors(v));
      left.push_back(v);
      if (self(self, rest, c)) return true;
      left.pop_back();
    }
    return false;
  };
  rec(rec, alive, {});
  return out;
}

VertexSet max_clique(const Graph& g) {
  VertexSet best, r;
  auto bk = [&](auto&& self, VertexSet p, VertexSet x) -> void {
    if (p.empty()) {
      if (x.empty() && r.size() > best.size()) best = r;
      return;
    }
    if (r.size() + p.size() <= best.size()) return;
    int pivot = -1, pd = -1;
    for (const VertexSet* s : {&p, &x})
      for (int u : *s) {
        int d = intersection_size(g.neighbors(u), p);
        if (d > pd) {
          pd = d;
          pivot = u;
        }
      }
    VertexSet todo = set_difference(p, g.neighbors(pivot));
    for (int v : todo) {
      r.push_back(v);
      self(self, set_intersection(p, g.neighbors(v)), set_intersection(x, g.neighbors(v)));
      r.pop_back();
      p = set_difference(p, {v});
      x = set_union(x, {v});
    }
  };
  bk(bk, all_vertices(g.n()), {});
  return sorted_unique(best);
}

long long count_independent_sets(const Graph& g, int s, const VertexSet& within) {
  if (s == 0) return 1;
  long long total = 0;
  auto rec = [&](auto&& self, const VertexSet& cand, int need) -> void {
    if (need == 0) {
      ++total;
      return;
    }
    if (need == 1) {
      total += static_cast<long long>(cand.size());
      return;
    }
    for (size_t i = 0; i + need <= cand.size(); ++i) {
      VertexSet rest = set_difference(VertexSet(cand.begin() + i + 1, cand.end()), g.neighbors(cand[i]));
      self(self, rest, need - 1);
    }
  };
  rec(rec, sorted_unique(within), s);
  return total;
}

const char* kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Clique: return "Clique";
    case WitnessKind::KssSubgraph: return "KssSubgraph";
    case WitnessKind::InducedKst: return "InducedKst";
    case WitnessKind::C4FreeDense: return "C4FreeDense";
    case WitnessKind::InducedBalancedSubdivision: return "InducedBalancedSubdivision";
    case WitnessKind::OneSubdivision: return "OneSubdivision";
  }
  return "?";
}

std::optional<WitnessKind> kind_from_name(const std::string& s) {
  for (auto k : {WitnessKind::Clique, WitnessKind::KssSubgraph, WitnessKind::InducedKst, WitnessKind::C4FreeDense,
                 WitnessKind::InducedBalancedSubdivision, WitnessKind::OneSubdivision})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

bool Witness::operator==(const Witness& o) const {
  return kind == o.kind && vertices == o.vertices && left == o.left && right == o.right &&
         claimed_degree == o.claimed_degree && branch == o.branch && paths == o.paths &&
         path_length == o.path_length && uniformity == o.uniformity;
}

namespace {

bool in_range(const Graph& g, const std::vector<int>& v) {
  for (int x : v)
    if (x < 0 || x >= g.n()) return false;
  return true;
}

bool has_dup(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

Verdict verify_biclique(const Graph& g, const Witness& w, bool induced) {
  if (!in_range(g, w.left) || !in_range(g, w.right)) return Verdict::reject("range", "vertex id out of range");
  if (has_dup(w.left) || has_dup(w.right)) return Verdict::reject("duplicate", "repeated vertex in a side");
  if (w.left.empty() || w.right.empty()) return Verdict::reject("size", "empty side");
  if (!induced && w.left.size() != w.right.size()) return Verdict::reject("size", "sides differ in size");
  if (intersection_size(sorted_unique(w.left), sorted_unique(w.right)) != 0)
    return Verdict::reject("sides-overlap");
  for (int a : w.left)
    for (int b : w.right)
      if (!g.adjacent(a, b))
        return Verdict::reject("not-complete", std::to_string(a) + "-" + std::to_string(b) + " missing");
  if (induced) {
    if (!is_independent(g, w.left)) return Verdict::reject("left-not-independent");
    if (!is_independent(g, w.right)) return Verdict::reject("right-not-independent");
  }
  return Verdict::ok();
}

Verdict verify_balanced(const Graph& g, const Witness& w) {
  const auto& br = w.branch;
  int h = static_cast<int>(br.size());
  if (!in_range(g, br)) return Verdict::reject("range", "branch vertex out of range");
  for (auto& p : w.paths)
    if (!in_range(g, p)) return Verdict::reject("range", "path vertex out of range");
  if (has_dup(br)) return Verdict::reject("range", "repeated branch vertex");
  if (h < 2) return Verdict::reject("path-count", "fewer than two branch vertices");
  if (static_cast<long long>(w.paths.size()) != static_cast<long long>(h) * (h - 1) / 2)
    return Verdict::reject("path-count", "expected one path per pair");
  size_t idx = 0;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j, ++idx) {
      const auto& p = w.paths[idx];
      if (p.size() < 2 || p.front() != br[i] || p.back() != br[j])
        return Verdict::reject("endpoints", "path " + std::to_string(idx) + " does not join its branch pair");
    }
  for (auto& p : w.paths)
    if (p.size() < 3) return Verdict::reject("not-proper", "path of length 1");
  int len = static_cast<int>(w.paths[0].size()) - 1;
  for (auto& p : w.paths)
    if (static_cast<int>(p.size()) - 1 != len) return Verdict::reject("not-balanced", "path lengths differ");
  if (w.path_length != len) return Verdict::reject("not-balanced", "declared length differs from paths");
  std::vector<int> all = br;
  for (auto& p : w.paths) all.insert(all.end(), p.begin() + 1, p.end() - 1);
  if (has_dup(all)) return Verdict::reject("not-disjoint", "internal vertex reused");
  for (auto& p : w.paths)
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.adjacent(p[i], p[i + 1]))
        return Verdict::reject("path-broken", std::to_string(p[i]) + "-" + std::to_string(p[i + 1]) + " missing");
  long long expect = static_cast<long long>(w.paths.size()) * len;
  long long got = edges_within(g, sorted_unique(all));
  if (got != expect)
    return Verdict::reject("induced-violation",
                           std::to_string(got - expect) + " extra edges among payload vertices");
  return Verdict::ok();
}

Verdict verify_one_subdivision(const Graph& g, const Witness& w) {
  if (!in_range(g, w.left) || !in_range(g, w.right)) return Verdict::reject("range", "vertex id out of range");
  if (has_dup(w.left) || has_dup(w.right)) return Verdict::reject("duplicate");
  VertexSet a = sorted_unique(w.left), b = sorted_unique(w.right);
  if (intersection_size(a, b) != 0) return Verdict::reject("sides-overlap");
  if (!is_independent(g, a)) return Verdict::reject("a-not-independent");
  if (!is_independent(g, b)) return Verdict::reject("b-not-independent");
  if (w.uniformity < 1) return Verdict::reject("uniformity", "uniformity must be positive");
  for (int x : a)
    if (degree_into(g, x, b) != w.uniformity)
      return Verdict::reject("uniformity", "vertex " + std::to_string(x) + " has " +
                                               std::to_string(degree_into(g, x, b)) + " branch neighbours");
  return Verdict::ok();
}

Verdict verify_c4free(const Graph& g, const Witness& w, const RunConfig& params) {
  if (!in_range(g, w.vertices)) return Verdict::reject("range");
  if (has_dup(w.vertices)) return Verdict::reject("duplicate");
  if (w.vertices.empty()) return Verdict::reject("size", "empty vertex set");
  auto sub = induced(g, w.vertices);
  long long c4 = 0;
  if (sub.graph.n() <= params.oracle.max_vertices && sub.graph.m() <= params.oracle.max_edges)
    c4 = oracle_count_c4(sub.graph, params.oracle);
  else
    c4 = enumerate_c4_rooted(sub.graph);
  if (c4 != 0) return Verdict::reject("has-c4", std::to_string(c4) + " four-cycles");
  if (average_degree(sub.graph) < w.claimed_degree) return Verdict::reject("degree-below-claim");
  return Verdict::ok();
}

}  // namespace

Verdict verify_witness(const Graph& g, const Witness& w, const RunConfig& params) {
  switch (w.kind) {
    case WitnessKind::Clique:
      if (!in_range(g, w.vertices)) return Verdict::reject("range");
      if (has_dup(w.vertices)) return Verdict::reject("duplicate");
      if (w.vertices.empty()) return Verdict::reject("size", "empty clique");
      if (!is_clique(g, sorted_unique(w.vertices))) return Verdict::reject("not-clique");
      return Verdict::ok();
    case WitnessKind::KssSubgraph: return verify_biclique(g, w, false);
    case WitnessKind::InducedKst: return verify_biclique(g, w, true);
    case WitnessKind::C4FreeDense: return verify_c4free(g, w, params);
    case WitnessKind::InducedBalancedSubdivision: return verify_balanced(g, w);
    case WitnessKind::OneSubdivision: return verify_one_subdivision(g, w);
  }
  return Verdict::reject("kind");
}

Verdict verify_subdivision_subgraph(const Graph& g, const std::vector<int>& br,
                                    const std::vector<std::vector<int>>& paths) {
  int h = static_cast<int>(br.size());
  if (!in_range(g, br) || has_dup(br)) return Verdict::reject("range");
  if (static_cast<long long>(paths.size()) != static_cast<long long>(h) * (h - 1) / 2)
    return Verdict::reject("path-count");
  size_t idx = 0;
  std::vector<int> all = br;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j, ++idx) {
      const auto& p = paths[idx];
      if (!in_range(g, p)) return Verdict::reject("range");
      if (p.size() < 2 || p.front() != br[i] || p.back() != br[j]) return Verdict::reject("endpoints");
      if (p.size() != paths[0].size()) return Verdict::reject("not-balanced");
      for (size_t q = 0; q + 1 < p.size(); ++q)
        if (!g.adjacent(p[q], p[q + 1])) return Verdict::reject("path-broken");
      all.insert(all.end(), p.begin() + 1, p.end() - 1);
    }
  if (has_dup(all)) return Verdict::reject("not-disjoint");
  return Verdict::ok();
}

bool verify_induced_copy(const Graph& host, const Graph& pattern, const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != pattern.n()) return false;
  if (!in_range(host, image) || has_dup(image)) return false;
  for (int i = 0; i < pattern.n(); ++i)
    for (int j = i + 1; j < pattern.n(); ++j)
      if (pattern.adjacent(i, j) != host.adjacent(image[i], image[j])) return false;
  return true;
}

}  // namespace isub
