#include "isub/sparsify.hpp"

#include "isub/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace isub {

namespace {

// Pattern vertex order in which every vertex after the first of its component has an earlier neighbour.
std::vector<int> pattern_order(const Graph& f) {
  std::vector<int> order;
  std::vector<char> seen(f.n(), 0);
  for (int r = 0; r < f.n(); ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      int v = order[head++];
      for (int w : f.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    }
  }
  return order;
}

bool is_c4_pattern(const Graph& f) {
  if (f.n() != 4 || f.m() != 4) return false;
  for (int v = 0; v < 4; ++v)
    if (f.degree(v) != 2) return false;
  return true;
}

// Enumerates injective homomorphisms f -> g (subgraph embeddings); visit returns false to stop.
template <class Visit>
void embeddings(const Graph& g, const Graph& f, Visit&& visit) {
  int k = f.n();
  if (k == 0) {
    visit(std::vector<int>{});
    return;
  }
  auto order = pattern_order(f);
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  std::vector<int> anchor(k, -1);  // earlier neighbour used to generate candidates
  for (int i = 1; i < k; ++i)
    for (int w : f.neighbors(order[i]))
      if (pos[w] < i) {
        anchor[i] = w;
        break;
      }
  std::vector<int> img(k, -1);
  std::vector<char> used(g.n(), 0);
  bool stop = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == k) {
      if (!visit(img)) stop = true;
      return;
    }
    int pv = order[i];
    auto try_v = [&](int v) {
      if (used[v]) return;
      for (int w : f.neighbors(pv))
        if (pos[w] < i && !g.adjacent(v, img[w])) return;
      img[pv] = v;
      used[v] = 1;
      self(self, i + 1);
      used[v] = 0;
      img[pv] = -1;
    };
    if (anchor[i] >= 0) {
      for (int v : g.neighbors(img[anchor[i]])) {
        try_v(v);
        if (stop) return;
      }
    } else {
      for (int v = 0; v < g.n() && !stop; ++v) try_v(v);
    }
  };
  rec(rec, 0);
}

}  // namespace

long long automorphism_count(const Graph& f) {
  long long c = 0;
  embeddings(f, f, [&](const std::vector<int>&) {
    ++c;
    return true;
  });
  return c;
}

long long count_copies(const Graph& g, const Graph& f, long long limit) {
  if (is_c4_pattern(f)) return std::min(limit, count_c4(g));
  long long aut = automorphism_count(f);
  long long emb = 0;
  __int128 cap = static_cast<__int128>(limit) * aut;
  embeddings(g, f, [&](const std::vector<int>&) {
    ++emb;
    return emb < cap;
  });
  return std::min(limit, emb / aut);
}

std::optional<std::vector<int>> find_copy(const Graph& g, const Graph& f) {
  std::optional<std::vector<int>> out;
  embeddings(g, f, [&](const std::vector<int>& img) {
    out = img;
    return false;
  });
  return out;
}

std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& f, long long node_budget) {
  int k = f.n();
  if (k == 0) return std::vector<int>{};
  if (k > g.n()) return std::nullopt;
  auto order = pattern_order(f);
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  std::vector<int> img(k, -1);
  std::vector<char> used(g.n(), 0);
  long long nodes = 0;
  bool found = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      found = true;
      return;
    }
    int pv = order[i];
    int anchor = -1;
    for (int w : f.neighbors(pv))
      if (pos[w] < i) {
        anchor = w;
        break;
      }
    auto try_v = [&](int v) {
      if (used[v]) return;
      if (++nodes > node_budget) throw BudgetExhausted("find_induced_copy: node budget exhausted");
      for (int j = 0; j < i; ++j) {
        int w = order[j];
        if (f.adjacent(pv, w) != g.adjacent(v, img[w])) return;
      }
      img[pv] = v;
      used[v] = 1;
      self(self, i + 1);
      if (found) return;
      used[v] = 0;
      img[pv] = -1;
    };
    if (anchor >= 0) {
      for (int v : g.neighbors(img[anchor])) {
        try_v(v);
        if (found) return;
      }
    } else {
      for (int v = 0; v < g.n() && !found; ++v) try_v(v);
    }
  };
  rec(rec, 0);
  if (!found) return std::nullopt;
  if (!verify_induced_copy(g, f, img)) throw InvariantViolation("find_induced_copy: copy not induced");
  return img;
}

double deletion_threshold(int n, double d, int v0, double delta) { return n * std::pow(d, v0 - 1 - delta); }

InducedGraph delete_copies(const Graph& g, const Graph& f, const DeletionParams& prm, const Ctl& ctl) {
  int v0 = f.n();
  int n = g.n();
  if (v0 > 6) throw PreconditionFailed("delete_copies: pattern has more than 6 vertices");
  if (prm.d <= 0) throw PreconditionFailed("delete_copies: d must be positive");
  bool pre = (!prm.check_eps || prm.eps < prm.delta / 2) && to_double(average_degree(g)) >= prm.d &&
             g.max_degree() <= std::pow(prm.d, 1 + prm.eps);
  if (!pre) {
    if (ctl.strict) throw PreconditionFailed("delete_copies: need eps < delta/2, d(g) >= d, max degree <= d^{1+eps}");
    ctl.note("delete_copies: preconditions relaxed");
  }
  double thr = deletion_threshold(n, prm.d, v0, prm.delta);
  long long lim = static_cast<long long>(std::min(std::ceil(thr), 9e18));
  long long copies = count_copies(g, f, std::max(1LL, lim));
  if (copies >= thr) throw TooManyCopies("delete_copies: " + std::to_string(copies) + " copies reach threshold");
  double p = prm.p > 0 ? prm.p : std::min(1.0, std::pow(prm.d, prm.delta / (5.0 * v0) - 1));
  double target = prm.target > 0 ? prm.target : std::pow(prm.d, prm.delta / (10.0 * v0));
  if (copies == 0) {
    // already F-free: the densest part of g itself is a valid outcome
    auto dp = densest_prefix(g);
    if (dp.graph.n() > 0 && to_double(average_degree(dp.graph)) >= target) {
      ctl.attempted(1);
      return {dp.graph, dp.to_host};
    }
  }

  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "deletion", attempt));
    VertexSet keep;
    for (int v = 0; v < n; ++v)
      if (coin(rng, p)) keep.push_back(v);
    // one vertex per surviving copy, lowest current degree first
    while (true) {
      auto h = induced(g, keep);
      auto c = find_copy(h.graph, f);
      if (!c) break;
      int victim = (*c)[0];
      for (int v : *c)
        if (h.graph.degree(v) < h.graph.degree(victim)) victim = v;
      keep = set_difference(keep, {h.to_host[victim]});
    }
    auto h = induced(g, keep);
    auto dp = densest_prefix(h.graph);
    if (dp.graph.n() == 0) continue;
    if (to_double(average_degree(dp.graph)) >= target) {
      InducedGraph out;
      out.to_host = h.lift(dp.to_host);
      out.graph = induced(g, out.to_host).graph;
      if (find_copy(out.graph, f)) throw InvariantViolation("delete_copies: output still contains the pattern");
      ctl.attempted(attempt + 1);
      return out;
    }
    if (p >= 1) {  // the sample is the whole graph; retrying repeats it
      ctl.attempted(attempt + 1);
      throw BudgetExhausted("delete_copies: deterministic pass missed the degree target");
    }
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("delete_copies: no sample met the degree target");
}

namespace {

Graph c4_graph() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

// C4s through each vertex: sum over w of C(codeg(x,w), 2).
std::vector<long long> c4_per_vertex(const Graph& g) {
  int n = g.n();
  std::vector<long long> out(n, 0);
  std::vector<int> cnt(n, 0), touched;
  for (int x = 0; x < n; ++x) {
    touched.clear();
    for (int v : g.neighbors(x))
      for (int w : g.neighbors(v)) {
        if (w == x) continue;
        if (cnt[w]++ == 0) touched.push_back(w);
      }
    for (int w : touched) {
      long long c = cnt[w];
      out[x] += c * (c - 1) / 2;
      cnt[w] = 0;
    }
  }
  return out;
}

std::optional<DenseOrC4> try_dense(const Graph& g, double d, double eps, const Ctl& ctl) {
  if (g.m() == 0) return std::nullopt;
  auto pv = c4_per_vertex(g);
  int x = static_cast<int>(std::max_element(pv.begin(), pv.end()) - pv.begin());
  if (pv[x] == 0) return std::nullopt;
  int y = -1;
  long long best = -1;
  for (int z : g.neighbors(x)) {
    long long c = c4_through_edge(g, x, z);
    if (c > best) {
      best = c;
      y = z;
    }
  }
  VertexSet v = set_union(g.neighbors(x), g.neighbors(y));
  auto sub = induced(g, v);
  double m = static_cast<double>(v.size());
  double dd = to_double(average_degree(sub.graph));
  bool ok = m >= std::pow(d, 1 - 1.5 * eps) && dd >= std::pow(m, 1 - 5 * eps);
  ctl.note("dense_or_c4free: edge " + std::to_string(x) + "-" + std::to_string(y) + " in " + std::to_string(best) +
           " four-cycles; |V'|=" + std::to_string(v.size()));
  if (!ok) return std::nullopt;
  return DenseOrC4{DenseOrC4::LocallyDense, v};
}

std::optional<DenseOrC4> try_c4free(const Graph& g, double d, double eps, const Ctl& ctl, double target,
                                    double p) {
  DeletionParams prm;
  prm.d = d;
  prm.delta = 2 * eps;
  prm.eps = eps;
  prm.check_eps = false;
  prm.target = target > 0 ? target : std::pow(d, eps / 20);
  prm.p = p;
  Ctl c = ctl;
  c.strict = false;
  try {
    auto out = delete_copies(g, c4_graph(), prm, c);
    return DenseOrC4{DenseOrC4::C4Free, out.to_host};
  } catch (const TooManyCopies&) {
  } catch (const BudgetExhausted&) {
  }
  return std::nullopt;
}

}  // namespace

DenseOrC4 dense_or_c4free(const Graph& g, double d, double eps, const Ctl& ctl, double c4free_target,
                          double deletion_p) {
  if (!(eps > 0 && eps < 0.1)) throw PreconditionFailed("dense_or_c4free: eps must lie in (0, 1/10)");
  if (d <= 0) throw PreconditionFailed("dense_or_c4free: d must be positive");
  if (to_double(average_degree(g)) < d || g.max_degree() > std::pow(d, 1 + eps)) {
    if (ctl.strict) throw PreconditionFailed("dense_or_c4free: need d(g) >= d and max degree <= d^{1+eps}");
    ctl.note("dense_or_c4free: degree preconditions relaxed");
  }
  long long c4 = count_c4(g);
  bool few = c4 <= g.n() * std::pow(d, 3 - 2 * eps);
  // the counting rule picks the branch; if its output fails verification the other branch is tried
  std::optional<DenseOrC4> r;
  if (few) {
    r = try_c4free(g, d, eps, ctl, c4free_target, deletion_p);
    if (!r) {
      ctl.note("dense_or_c4free: deletion branch failed, trying the dense edge");
      r = try_dense(g, d, eps, ctl);
    }
  } else {
    r = try_dense(g, d, eps, ctl);
    if (!r) {
      ctl.note("dense_or_c4free: dense edge failed its inequality, trying deletion");
      r = try_c4free(g, d, eps, ctl, c4free_target, deletion_p);
    }
  }
  if (!r) throw Infeasible("dense_or_c4free: neither outcome verified at this scale");
  return *r;
}

DenseOrC4 independent_or_dense(const Graph& g, double eps, const Ctl& ctl, double c4free_target) {
  if (!(eps > 0 && eps < 0.1)) throw PreconditionFailed("independent_or_dense: eps must lie in (0, 1/10)");
  int n = g.n();
  int want = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  VertexSet ind = greedy_independent_set(g);
  if (static_cast<int>(ind.size()) >= want) return {DenseOrC4::IndependentSet, ind};
  auto h = densest_prefix(g);
  double d0 = to_double(average_degree(h.graph));
  if (d0 <= 0) throw Infeasible("independent_or_dense: no edges");
  double L = std::min(std::pow(2.0, std::pow(d0, eps / 12)), 2.0 * n);
  Ctl c = ctl;
  c.strict = false;
  auto out = dichotomy(h.graph, d0, std::max(L, 2.0), c);
  if (out.kind == DichotomyOutcome::Unbalanced) throw InvariantViolation("independent_or_dense: unbalanced outcome");
  auto star = induced(h.graph, out.cert.subgraph);
  double ds = to_double(average_degree(star.graph));
  auto r = dense_or_c4free(star.graph, ds, eps, c, c4free_target);
  r.vertices = h.lift(star.lift(r.vertices));
  return r;
}

bool drc_precondition(const Graph& g, int s) {
  int n = g.n();
  double thr = std::pow(n, 1 - 1.0 / (100 * s));
  int c = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= thr) ++c;
  return c >= std::sqrt(static_cast<double>(n));
}

VertexSet drc(const Graph& g, int s, const Ctl& ctl, const DrcOptions& opt) {
  int n = g.n();
  if (n == 0 || s < 1) throw PreconditionFailed("drc: empty graph or s < 1");
  if (!drc_precondition(g, s)) {
    if (ctl.strict) throw PreconditionFailed("drc: fewer than sqrt(n) vertices of degree n^{1-1/(100s)}");
    ctl.note("drc: degree precondition relaxed");
  }
  int tuple = opt.tuple > 0 ? opt.tuple : 10 * s;
  int need = std::max(0, static_cast<int>(std::floor(std::pow(n, opt.size_exp) + 1e-9)) - 1);
  double cthr = std::pow(n, opt.common_exp);
  int cap = std::max(s <= 3 ? 64 : 24, need);
  auto good = [&](const std::vector<int>& sub) { return common_neighborhood(g, sub).size() >= cthr; };

  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "drc", attempt));
    VertexSet S = opt.within.empty() ? all_vertices(n) : sorted_unique(opt.within);
    for (int i = 0; i < tuple && !S.empty(); ++i) S = set_intersection(S, g.neighbors(uniform_int(rng, 0, n - 1)));
    std::shuffle(S.begin(), S.end(), rng);
    if (static_cast<int>(S.size()) > cap) S.resize(cap);
    S = sorted_unique(S);
    // delete one vertex from each bad s-tuple
    while (true) {
      int victim = -1;
      for_each_subset(S, s, [&](const std::vector<int>& sub) {
        if (good(sub)) return true;
        victim = sub.back();
        return false;
      });
      if (victim < 0) break;
      S = set_difference(S, {victim});
    }
    if (static_cast<int>(S.size()) < need) continue;
    bool ok = for_each_subset(S, s, good);
    if (!ok) throw InvariantViolation("drc: bad tuple survived");
    ctl.attempted(attempt + 1);
    return S;
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("drc: no sample reached the size bound");
}

SupersatResult supersat_independent(const Graph& g, int s, const VertexSet& within_in, uint64_t seed) {
  VertexSet within = sorted_unique(within_in);
  int n = static_cast<int>(within.size());
  SupersatResult r;
  long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  long long e = edges_within(g, within);
  r.density = pairs == 0 ? Rational(0) : Rational(e, pairs);
  if (r.density > Rational(1, static_cast<long long>(s) * s)) {
    r.dense_escape = true;
    return r;
  }
  auto indep = [&](const std::vector<int>& q) {
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = i + 1; j < q.size(); ++j)
        if (g.adjacent(q[i], q[j])) return false;
    return true;
  };
  long long total = binom_ll(n, s);
  if (total <= 200000) {
    for_each_subset(within, s, [&](const std::vector<int>& q) {
      if (indep(q)) r.sets.push_back(q);
      return true;
    });
    return r;
  }
  // sampling: each uniform s-subset is independent with probability >= 1/2 at this density
  long long want = std::min<long long>((total + 2) / 3, 50000);
  std::set<VertexSet> seen;
  Rng rng(mix_seed(seed, "supersat"));
  long long tries = 0;
  while (static_cast<long long>(seen.size()) < want && tries < 40 * want) {
    ++tries;
    VertexSet q;
    while (static_cast<int>(q.size()) < s) {
      int v = within[uniform_int(rng, 0, n - 1)];
      if (!contains(q, v)) q = sorted_unique(set_union(q, {v}));
    }
    if (indep(q)) seen.insert(q);
  }
  r.sets.assign(seen.begin(), seen.end());
  return r;
}

Witness too_dense(const Graph& g, int s, int t, int k, const Ctl& ctl, const DrcOptions& opt) {
  int n = g.n();
  if (s > t) throw PreconditionFailed("too_dense: need s <= t");
  if (to_double(average_degree(g)) < std::pow(n, 1 - 1.0 / (100 * s))) {
    if (ctl.strict) throw PreconditionFailed("too_dense: need d(g) >= n^{1-1/(100s)}");
    ctl.note("too_dense: density precondition relaxed");
  }
  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Ctl c = ctl.child("too_dense", attempt);
    c.budget = 1;
    c.strict = false;
    VertexSet S;
    try {
      S = drc(g, s, c, opt);
    } catch (const BudgetExhausted&) {
      continue;
    }
    auto r = ramsey_split(g, S, k, s);
    if (r.kind == RamseyResult::Failure) continue;
    Witness w;
    if (r.kind == RamseyResult::Clique) {
      w.kind = WitnessKind::Clique;
      w.vertices = r.set;
      ctl.attempted(attempt + 1);
      return w;
    }
    VertexSet I = r.set;
    auto r2 = ramsey_split(g, common_neighborhood(g, I), k, t);
    if (r2.kind == RamseyResult::Failure) continue;
    ctl.attempted(attempt + 1);
    if (r2.kind == RamseyResult::Clique) {
      w.kind = WitnessKind::Clique;
      w.vertices = r2.set;
      return w;
    }
    w.kind = WitnessKind::InducedKst;
    w.left = I;
    w.right = r2.set;
    if (!verify_witness(g, w).accepted) throw InvariantViolation("too_dense: assembled K_{s,t} is not induced");
    return w;
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("too_dense: no clique or induced K_{s,t} within budget");
}

}  // namespace isub
