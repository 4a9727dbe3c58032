#include "isub/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace isub {

Rational Multihypergraph::average_degree() const {
  if (n == 0) return Rational(0);
  return Rational(static_cast<long long>(s) * static_cast<long long>(edges.size()), n);
}

bool Multihypergraph::valid() const {
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != s || e != sorted_unique(e)) return false;
    for (int v : e)
      if (v < 0 || v >= n) return false;
  }
  return true;
}

Witness to_witness(const OneSubdivision& w) {
  Witness x;
  x.kind = WitnessKind::OneSubdivision;
  x.left = w.a;
  x.right = w.b;
  x.uniformity = w.uniformity;
  return x;
}

OneSubdivision from_witness(const Witness& w) {
  if (w.kind != WitnessKind::OneSubdivision) throw InvariantViolation("from_witness: not a 1-subdivision");
  return {sorted_unique(w.left), sorted_unique(w.right), w.uniformity};
}

Graph one_subdivision_graph(const Multihypergraph& h, OneSubdivision* w) {
  if (!h.valid()) throw InvariantViolation("one_subdivision_graph: malformed hypergraph");
  int n = h.n + static_cast<int>(h.edges.size());
  std::vector<std::pair<int, int>> e;
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i]) e.emplace_back(h.n + static_cast<int>(i), v);
  if (w) {
    w->b = all_vertices(h.n);
    w->a.clear();
    for (size_t i = 0; i < h.edges.size(); ++i) w->a.push_back(h.n + static_cast<int>(i));
    w->uniformity = h.s;
  }
  return Graph::from_edges(n, e);
}

Multihypergraph recover_hypergraph(const Graph& g, const OneSubdivision& w) {
  auto v = verify_witness(g, to_witness(w));
  if (!v.accepted) throw InvariantViolation("recover_hypergraph: " + v.clause);
  VertexSet b = sorted_unique(w.b), a = sorted_unique(w.a);
  Multihypergraph h;
  h.n = static_cast<int>(b.size());
  h.s = w.uniformity;
  for (int x : a) {
    VertexSet e;
    for (int y : set_intersection(g.neighbors(x), b))
      e.push_back(static_cast<int>(std::lower_bound(b.begin(), b.end(), y) - b.begin()));
    h.edges.push_back(e);
  }
  return h;
}

OneSubdivision sub_subdivision(const Graph& g, const OneSubdivision& w, const std::vector<int>& keep_edges,
                               const VertexSet& keep_vertices) {
  auto h = recover_hypergraph(g, w);
  VertexSet kv = sorted_unique(keep_vertices);
  VertexSet a = sorted_unique(w.a), b = sorted_unique(w.b);
  OneSubdivision out;
  out.uniformity = w.uniformity;
  for (int p : kv) {
    if (p < 0 || p >= h.n) throw OutOfRange("sub_subdivision: vertex position out of range");
    out.b.push_back(b[p]);
  }
  for (int e : sorted_unique(keep_edges)) {
    if (e < 0 || e >= static_cast<int>(h.edges.size())) throw OutOfRange("sub_subdivision: edge index out of range");
    bool inside = true;
    for (int v : h.edges[e]) inside = inside && contains(kv, v);
    if (inside) out.a.push_back(a[e]);
  }
  out.a = sorted_unique(out.a);
  auto v = verify_witness(g, to_witness(out));
  if (!v.accepted) throw InvariantViolation("sub_subdivision: " + v.clause);
  return out;
}

std::optional<Witness> find_heavy_multiplicity(const Graph& g, const OneSubdivision& w, int t) {
  VertexSet b = sorted_unique(w.b);
  std::map<VertexSet, VertexSet> by_edge;
  for (int x : sorted_unique(w.a)) by_edge[set_intersection(g.neighbors(x), b)].push_back(x);
  for (auto& [e, xs] : by_edge)
    if (static_cast<int>(xs.size()) >= t) {
      Witness k;
      k.kind = WitnessKind::InducedKst;
      k.left = e;
      k.right = VertexSet(xs.begin(), xs.begin() + t);
      if (verify_witness(g, k).accepted) return k;
    }
  return std::nullopt;
}

namespace {

// Best suffix of min-degree peeling of a hypergraph by s|E|/|V|; returns kept vertices and edge indices.
std::pair<VertexSet, std::vector<int>> densest_hypergraph_part(int n, int s, const std::vector<VertexSet>& edges,
                                                               const VertexSet& verts) {
  std::vector<std::vector<int>> inc(n);
  for (size_t i = 0; i < edges.size(); ++i)
    for (int v : edges[i]) inc[v].push_back(static_cast<int>(i));
  std::vector<int> deg(n, 0);
  std::set<std::pair<int, int>> q;
  for (int v : verts) {
    deg[v] = static_cast<int>(inc[v].size());
    q.emplace(deg[v], v);
  }
  std::vector<char> dead_edge(edges.size(), 0), gone(n, 0);
  long long m = static_cast<long long>(edges.size());
  long long nv = static_cast<long long>(verts.size());
  std::vector<int> order;
  long long best_m = m, best_n = nv;
  size_t best_i = 0;
  while (!q.empty()) {
    int v = q.begin()->second;
    q.erase(q.begin());
    gone[v] = 1;
    order.push_back(v);
    for (int e : inc[v]) {
      if (dead_edge[e]) continue;
      dead_edge[e] = 1;
      --m;
      for (int u : edges[e])
        if (!gone[u]) {
          q.erase({deg[u], u});
          q.emplace(--deg[u], u);
        }
    }
    --nv;
    if (nv > 0 && static_cast<__int128>(m) * best_n > static_cast<__int128>(best_m) * nv) {
      best_m = m;
      best_n = nv;
      best_i = order.size();
    }
  }
  VertexSet keep = verts;
  keep = set_difference(keep, sorted_unique(VertexSet(order.begin(), order.begin() + best_i)));
  std::vector<int> ke;
  for (size_t i = 0; i < edges.size(); ++i) {
    bool in = true;
    for (int v : edges[i]) in = in && contains(keep, v);
    if (in) ke.push_back(static_cast<int>(i));
  }
  (void)s;
  return {keep, ke};
}

}  // namespace

OneSubdivision drop_uniformity(const Graph& g, const OneSubdivision& w, int s, int t, const Ctl& ctl) {
  if (w.uniformity != s) throw PreconditionFailed("drop_uniformity: witness uniformity differs from s");
  auto h = recover_hypergraph(g, w);
  VertexSet a = sorted_unique(w.a), b = sorted_unique(w.b);
  // strip multiplicity down to a simple hypergraph
  std::map<VertexSet, int> first;
  std::map<VertexSet, int> mult;
  for (size_t i = 0; i < h.edges.size(); ++i) {
    if (!first.count(h.edges[i])) first[h.edges[i]] = static_cast<int>(i);
    ++mult[h.edges[i]];
  }
  for (auto& [e, c] : mult)
    if (c > t - 1) throw PreconditionFailed("drop_uniformity: edge multiplicity " + std::to_string(c) + " exceeds t-1");
  std::vector<int> simple;
  for (auto& [e, i] : first) simple.push_back(i);
  std::sort(simple.begin(), simple.end());
  if (s == 2) {
    OneSubdivision out{VertexSet{}, b, 2};
    for (int i : simple) out.a.push_back(a[i]);
    out.a = sorted_unique(out.a);
    return out;
  }
  if (s < 2) throw PreconditionFailed("drop_uniformity: s must be at least 2");

  double d_star = static_cast<double>(s) * simple.size() / std::max(1, h.n);
  double fact = 1;
  for (int i = 2; i <= s; ++i) fact *= i;
  double need = d_star * fact / std::pow(s, s);
  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "drop-uniformity", attempt));
    std::vector<int> part(h.n);
    for (auto& p : part) p = uniform_int(rng, 0, s - 1);
    std::vector<VertexSet> pe;
    std::vector<int> pe_src;
    for (int i : simple) {
      std::vector<char> hit(s, 0);
      bool ok = true;
      for (int v : h.edges[i]) {
        if (hit[part[v]]) ok = false;
        hit[part[v]] = 1;
      }
      if (ok) {
        pe.push_back(h.edges[i]);
        pe_src.push_back(i);
      }
    }
    double dpart = static_cast<double>(s) * pe.size() / std::max(1, h.n);
    if (pe.empty() || dpart < need) continue;
    auto [vkeep, ekeep] = densest_hypergraph_part(h.n, s, pe, all_vertices(h.n));
    if (ekeep.empty()) continue;
    std::vector<VertexSet> parts(s);
    for (int v : vkeep) parts[part[v]].push_back(v);
    int ps = 0;
    for (int i = 1; i < s; ++i)
      if (parts[i].size() > parts[ps].size()) ps = i;
    // pigeonhole the partner part maximizing sum over v in the largest part of |N_i(v)|
    int pi = -1;
    long long best = -1;
    for (int i = 0; i < s; ++i) {
      if (i == ps) continue;
      std::set<std::pair<int, int>> pairs;
      for (int e : ekeep) {
        int xs = -1, xi = -1;
        for (int v : pe[e]) {
          if (part[v] == ps) xs = v;
          if (part[v] == i) xi = v;
        }
        pairs.emplace(xs, xi);
      }
      long long sum = static_cast<long long>(pairs.size());
      if (sum > best) {
        best = sum;
        pi = i;
      }
    }
    OneSubdivision out;
    out.uniformity = 2;
    std::set<std::pair<int, int>> used;
    for (int e : ekeep) {
      int xs = -1, xi = -1;
      for (int v : pe[e]) {
        if (part[v] == ps) xs = v;
        if (part[v] == pi) xi = v;
      }
      if (used.insert({xs, xi}).second) out.a.push_back(a[pe_src[e]]);
    }
    for (int v : parts[ps]) out.b.push_back(b[v]);
    for (int v : parts[pi]) out.b.push_back(b[v]);
    out.a = sorted_unique(out.a);
    out.b = sorted_unique(out.b);
    auto v = verify_witness(g, to_witness(out));
    if (!v.accepted) throw InvariantViolation("drop_uniformity: " + v.clause);
    ctl.attempted(attempt + 1);
    return out;
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("drop_uniformity: no partition kept enough edges");
}

namespace {

struct Budget {
  long long left;
  bool spend() { return --left >= 0; }
};

bool kuhn(int u, const std::vector<VertexSet>& opts, std::vector<int>& match_mid, std::vector<char>& seen,
          std::map<int, int>& mid_of) {
  for (int m : opts[u]) {
    if (seen[mid_of[m]]) continue;
    seen[mid_of[m]] = 1;
    int& owner = match_mid[mid_of[m]];
    if (owner < 0 || kuhn(owner, opts, match_mid, seen, mid_of)) {
      owner = u;
      return true;
    }
  }
  return false;
}

std::optional<BalancedSubdivision> try_length2(const Graph& h, int ht, Budget& bud) {
  std::vector<int> cand;
  for (int v = 0; v < h.n(); ++v)
    if (h.degree(v) >= ht - 1) cand.push_back(v);
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> br;
  std::optional<BalancedSubdivision> out;
  auto finish = [&]() -> bool {
    VertexSet bs = sorted_unique(br);
    std::vector<VertexSet> opts;
    std::vector<std::pair<int, int>> pr;
    std::map<int, int> mid_of;
    for (int i = 0; i < ht; ++i)
      for (int j = i + 1; j < ht; ++j) {
        VertexSet c = set_difference(set_intersection(h.neighbors(br[i]), h.neighbors(br[j])), bs);
        for (int m : c)
          if (!mid_of.count(m)) {
            int id = static_cast<int>(mid_of.size());
            mid_of[m] = id;
          }
        opts.push_back(c);
        pr.emplace_back(i, j);
      }
    std::vector<int> match_mid(mid_of.size(), -1);
    for (size_t u = 0; u < opts.size(); ++u) {
      std::vector<char> seen(mid_of.size(), 0);
      if (!kuhn(static_cast<int>(u), opts, match_mid, seen, mid_of)) return false;
    }
    std::vector<int> mid(opts.size(), -1);
    for (auto& [m, id] : mid_of)
      if (match_mid[id] >= 0) mid[match_mid[id]] = m;
    BalancedSubdivision b;
    b.branch = br;
    b.length = 2;
    for (size_t u = 0; u < pr.size(); ++u) b.paths.push_back({br[pr[u].first], mid[u], br[pr[u].second]});
    out = b;
    return true;
  };
  auto rec = [&](auto&& self, size_t start) -> bool {
    if (static_cast<int>(br.size()) == ht) return finish();
    for (size_t i = start; i < cand.size(); ++i) {
      if (!bud.spend()) return false;
      int v = cand[i];
      bool ok = true;
      for (int u : br)
        if (intersection_size(h.neighbors(u), h.neighbors(v)) == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      br.push_back(v);
      if (self(self, i + 1)) return true;
      br.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

std::optional<BalancedSubdivision> try_routing(const Graph& h, int ht, int len, Budget& bud) {
  std::vector<int> cand;
  for (int v = 0; v < h.n(); ++v)
    if (h.degree(v) >= ht - 1) cand.push_back(v);
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  if (static_cast<int>(cand.size()) < ht) return std::nullopt;
  std::vector<char> used(h.n(), 0);
  std::vector<int> br;
  std::vector<std::pair<int, int>> pr;
  for (int i = 0; i < ht; ++i)
    for (int j = i + 1; j < ht; ++j) pr.emplace_back(i, j);
  std::vector<std::vector<int>> paths(pr.size());
  bool dead = false;

  // route pair index q, then the rest
  auto route = [&](auto&& self, size_t q) -> bool {
    if (q == pr.size()) return true;
    int u = br[pr[q].first], v = br[pr[q].second];
    std::vector<int> path{u};
    auto dfs = [&](auto&& dself, int x, int depth) -> bool {
      if (!bud.spend()) {
        dead = true;
        return false;
      }
      if (depth == len - 1) {
        if (!h.adjacent(x, v)) return false;
        path.push_back(v);
        paths[q] = path;
        if (self(self, q + 1)) return true;
        path.pop_back();
        return false;
      }
      for (int y : h.neighbors(x)) {
        if (used[y]) continue;
        used[y] = 1;
        path.push_back(y);
        bool ok = dself(dself, y, depth + 1);
        if (ok) return true;
        path.pop_back();
        used[y] = 0;
        if (dead) return false;
      }
      return false;
    };
    return dfs(dfs, u, 0);
  };

  auto pick = [&](auto&& self, size_t start) -> bool {
    if (static_cast<int>(br.size()) == ht) return route(route, 0);
    for (size_t i = start; i < cand.size() && !dead; ++i) {
      if (!bud.spend()) {
        dead = true;
        return false;
      }
      br.push_back(cand[i]);
      used[cand[i]] = 1;
      if (self(self, i + 1)) return true;
      used[cand[i]] = 0;
      br.pop_back();
    }
    return false;
  };
  if (!pick(pick, 0)) return std::nullopt;
  BalancedSubdivision b;
  b.branch = br;
  b.paths = paths;
  b.length = len;
  return b;
}

}  // namespace

std::optional<BalancedSubdivision> find_balanced_clique_subdivision(const Graph& h, int h_target,
                                                                    long long node_budget, int max_length) {
  if (h_target < 3) throw PreconditionFailed("find_balanced_clique_subdivision: h_target must be at least 3");
  std::optional<BalancedSubdivision> out;
  VertexSet mc = max_clique(h);
  if (static_cast<int>(mc.size()) >= h_target) {
    BalancedSubdivision b;
    b.branch.assign(mc.begin(), mc.begin() + h_target);
    b.length = 1;
    for (int i = 0; i < h_target; ++i)
      for (int j = i + 1; j < h_target; ++j) b.paths.push_back({b.branch[i], b.branch[j]});
    out = b;
  }
  if (!out) {
    Budget bud{node_budget};
    out = try_length2(h, h_target, bud);
    for (int len = 3; !out && len <= max_length && bud.left > 0; ++len) out = try_routing(h, h_target, len, bud);
  }
  if (out && !verify_subdivision_subgraph(h, out->branch, out->paths).accepted)
    throw InvariantViolation("find_balanced_clique_subdivision: invalid subdivision");
  return out;
}

Witness subdivision_reduction(const Graph& g, const OneSubdivision& w, int s, int t, int h_target, const Ctl& ctl,
                              long long node_budget) {
  auto w2 = drop_uniformity(g, w, s, t, ctl);
  VertexSet b = w2.b;
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> via;
  for (int x : w2.a) {
    VertexSet nb = set_intersection(g.neighbors(x), b);
    int i = static_cast<int>(std::lower_bound(b.begin(), b.end(), nb[0]) - b.begin());
    int j = static_cast<int>(std::lower_bound(b.begin(), b.end(), nb[1]) - b.begin());
    edges.emplace_back(i, j);
    via[{i, j}] = x;
  }
  Graph base = Graph::from_edges(static_cast<int>(b.size()), edges);
  auto bs = find_balanced_clique_subdivision(base, h_target, node_budget);
  if (!bs) throw NotFound("subdivision_reduction: no balanced subdivision of K_" + std::to_string(h_target) +
                          " in the base graph");
  Witness out;
  out.kind = WitnessKind::InducedBalancedSubdivision;
  for (int v : bs->branch) out.branch.push_back(b[v]);
  for (auto& p : bs->paths) {
    std::vector<int> lifted{b[p[0]]};
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      int u = std::min(p[i], p[i + 1]), v = std::max(p[i], p[i + 1]);
      lifted.push_back(via.at({u, v}));
      lifted.push_back(b[p[i + 1]]);
    }
    out.paths.push_back(lifted);
  }
  out.path_length = 2 * bs->length;
  auto v = verify_witness(g, out);
  if (!v.accepted) throw InvariantViolation("subdivision_reduction: lifted witness rejected: " + v.clause);
  return out;
}

VertexSet make_regular(const Graph& g, const BipartitePartition& part, double d, const Ctl& ctl) {
  VertexSet A = sorted_unique(part.a), B = sorted_unique(part.b);
  VertexSet a0;
  for (int x : A) {
    int dx = degree_into(g, x, B);
    if (dx >= d / 20 && dx <= 10 * d) a0.push_back(x);
  }
  if (a0.empty()) throw Infeasible("make_regular: no vertex of A has d_B in [d/20, 10d]");
  auto sub = induced(g, a0);
  auto ord = degeneracy(sub.graph);
  // colour in reverse peeling order: each vertex sees at most degeneracy coloured neighbours
  std::vector<int> color(sub.graph.n(), -1);
  int ncol = 0;
  for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
    std::set<int> taken;
    for (int w : sub.graph.neighbors(*it))
      if (color[w] >= 0) taken.insert(color[w]);
    int c = 0;
    while (taken.count(c)) ++c;
    color[*it] = c;
    ncol = std::max(ncol, c + 1);
  }
  std::vector<int> size(ncol, 0);
  for (int c : color) ++size[c];
  int best = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  VertexSet local;
  for (int v = 0; v < sub.graph.n(); ++v)
    if (color[v] == best) local.push_back(v);
  VertexSet out = sub.lift(local);
  if (!is_independent(g, out)) throw InvariantViolation("make_regular: colour class not independent");
  if (out.size() < A.size() / (40 * d)) ctl.note("make_regular: |A'| below |A|/(40d)");
  return out;
}

OneSubdivision unbalanced_to_subdivision(const Graph& g, const BipartitePartition& part, double d, int s, int k,
                                         const Ctl& ctl, const UnbalancedParams& prm) {
  VertexSet A = sorted_unique(part.a), B = sorted_unique(part.b);
  if (d <= 0 || s < 1) throw PreconditionFailed("unbalanced_to_subdivision: need d > 0 and s >= 1");
  std::vector<std::string> bad;
  if (degeneracy(g).degeneracy > d) bad.push_back("g is not d-degenerate");
  if (edges_between(g, A, B) < d * A.size() / 10) bad.push_back("e(A,B) < d|A|/10");
  if (A.size() <= 40 * std::pow(d, s + 2) * B.size()) bad.push_back("|A| <= 40 d^{s+2} |B|");
  if (static_cast<int>(max_clique(g).size()) > k) bad.push_back("clique number exceeds k");
  if (!bad.empty()) {
    if (ctl.strict) throw PreconditionFailed("unbalanced_to_subdivision: " + bad[0]);
    for (auto& b : bad) ctl.note("unbalanced_to_subdivision: " + b);
  }
  if (d < std::pow(2.0 * (10 + s), s)) ctl.note("unbalanced_to_subdivision: d < (2(10+s))^s");
  if (d / 20 <= binom(s + k, s)) ctl.note("unbalanced_to_subdivision: d/20 <= C(s+k, s)");

  VertexSet a1 = make_regular(g, {A, B}, d, ctl);
  // B ordered so that each vertex has at most degeneracy neighbours to its left
  auto gb = induced(g, B);
  auto ord = degeneracy(gb.graph);
  std::vector<int> rank(gb.graph.n());
  for (int i = 0; i < gb.graph.n(); ++i) rank[ord.order[gb.graph.n() - 1 - i]] = i;
  std::vector<VertexSet> left(gb.graph.n());
  for (int v = 0; v < gb.graph.n(); ++v)
    for (int w : gb.graph.neighbors(v))
      if (rank[w] < rank[v]) left[v].push_back(gb.to_host[w]);
  for (auto& l : left) l = sorted_unique(l);

  double p = prm.p > 0 ? prm.p : 1.0 / (2.0 * (10 + s) * d);
  double target = prm.target > 0 ? prm.target : d;
  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "unbalanced", attempt));
    VertexSet bp;
    std::vector<int> bp_local;
    for (int i = 0; i < gb.graph.n(); ++i)
      if (coin(rng, p)) {
        bp.push_back(gb.to_host[i]);
        bp_local.push_back(i);
      }
    if (bp.empty()) continue;
    VertexSet clean;
    for (int i : bp_local)
      if (intersection_size(left[i], bp) == 0) clean.push_back(gb.to_host[i]);
    clean = sorted_unique(clean);
    VertexSet a2, used;
    for (int x : a1) {
      VertexSet nb = set_intersection(g.neighbors(x), bp);
      if (static_cast<int>(nb.size()) != s) continue;
      if (intersection_size(nb, clean) != s) continue;
      a2.push_back(x);
      used = set_union(used, nb);
    }
    if (a2.empty()) continue;
    bool sum_ineq = a2.size() > d * bp.size();
    if (static_cast<double>(s) * a2.size() < target * used.size()) continue;
    OneSubdivision out{sorted_unique(a2), used, s};
    auto v = verify_witness(g, to_witness(out));
    if (!v.accepted) throw InvariantViolation("unbalanced_to_subdivision: " + v.clause);
    if (!sum_ineq) ctl.note("unbalanced_to_subdivision: sum X(x) <= d|B_p| on the accepted sample");
    ctl.attempted(attempt + 1);
    return out;
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("unbalanced_to_subdivision: no sample reached the target");
}

OneSubdivision almost_regular_to_subdivision(const Graph& g0, int s, int t, int k, const Ctl& ctl,
                                             const AlmostRegularParams& prm) {
  (void)t;
  (void)k;  // K_{s,t}-freeness and the clique bound are caller obligations
  if (s < 1) throw PreconditionFailed("almost_regular_to_subdivision: s must be positive");
  double d0 = to_double(average_degree(g0));
  if (d0 <= 0) throw PreconditionFailed("almost_regular_to_subdivision: no edges");
  double eps0 = 1.0 / (50000.0 * s * s);
  if (g0.max_degree() > std::pow(d0, 1 + eps0)) {
    if (ctl.strict) throw PreconditionFailed("almost_regular_to_subdivision: max degree exceeds d0^{1+eps0}");
    ctl.note("almost_regular_to_subdivision: max degree exceeds d0^{1+eps0}");
  }
  double dd = std::pow(d0, 0.1);
  double pw = prm.cleanup_p > 0 ? prm.cleanup_p : std::pow(d0, -0.9);
  double z1 = 1 + 10 * std::pow(d0, 0.1 + eps0);
  double z2 = 1 + 2 * std::pow(d0, 0.1 - 1.0 / (1000.0 * s));
  double max_deg_cap = 11 * std::pow(d0, 0.1 + eps0);
  double codeg_cap = 3 * std::pow(d0, 0.1 * (1 - 1.0 / (1000.0 * s)));

  // stage one: cleanup
  InducedGraph G;
  bool cleaned = false;
  int used_attempts = 0;
  for (int attempt = 0; attempt < ctl.budget && !cleaned; ++attempt) {
    ++used_attempts;
    Rng rng(mix_seed(ctl.seed, "cleanup", attempt));
    VertexSet W;
    for (int v = 0; v < g0.n(); ++v)
      if (pw >= 1 || coin(rng, pw)) W.push_back(v);
    VertexSet Z;
    for (int x : W) {
      VertexSet nx = set_intersection(g0.neighbors(x), W);
      bool bad = nx.size() > z1;
      for (size_t i = 0; i < nx.size() && !bad; ++i)
        if (intersection_size(set_intersection(nx, g0.neighbors(nx[i])), W) > z2) bad = true;
      if (bad) Z.push_back(x);
    }
    auto cand = induced(g0, set_difference(W, Z));
    const Graph& c = cand.graph;
    bool ok = c.n() > 0 && to_double(average_degree(c)) >= dd / 10 && c.max_degree() <= max_deg_cap;
    for (int x = 0; x < c.n() && ok; ++x)
      for (int y : c.neighbors(x))
        if (y > x && intersection_size(c.neighbors(x), c.neighbors(y)) > codeg_cap) {
          ok = false;
          break;
        }
    if (ok) {
      G = cand;
      cleaned = true;
    }
    if (pw >= 1) break;  // deterministic sample
  }
  if (!cleaned) {
    ctl.attempted(used_attempts);
    throw BudgetExhausted("almost_regular_to_subdivision: cleanup clauses never held");
  }
  // minimum degree at least half the average
  auto dp = densest_prefix(G.graph);
  VertexSet host = G.lift(dp.to_host);
  const Graph& h = dp.graph;
  double d = to_double(average_degree(h));
  double delta = prm.eta / s;
  double p = prm.extraction_p > 0 ? prm.extraction_p : std::pow(d, -1 - delta);

  // stage two: extraction
  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "extraction", attempt));
    std::vector<char> in0(h.n(), 0);
    VertexSet b0;
    for (int v = 0; v < h.n(); ++v)
      if (coin(rng, p)) {
        in0[v] = 1;
        b0.push_back(v);
      }
    VertexSet bset;
    for (int b : b0)
      if (intersection_size(h.neighbors(b), b0) == 0) bset.push_back(b);
    if (bset.empty()) continue;
    VertexSet aset;
    for (int x = 0; x < h.n(); ++x) {
      VertexSet n0 = set_intersection(h.neighbors(x), b0);
      if (static_cast<int>(n0.size()) != s) continue;
      if (intersection_size(n0, bset) != s) continue;
      aset.push_back(x);
    }
    if (aset.empty()) continue;
    auto ga = induced(h, aset);
    VertexSet a2 = ga.lift(greedy_independent_set(ga.graph));
    double dh = static_cast<double>(s) * a2.size() / bset.size();
    if (!(a2.size() > std::pow(d, -delta / 2) * bset.size())) continue;
    if (dh < prm.target) continue;
    OneSubdivision out;
    for (int x : a2) out.a.push_back(host[x]);
    for (int b : bset) out.b.push_back(host[b]);
    out.a = sorted_unique(out.a);
    out.b = sorted_unique(out.b);
    out.uniformity = s;
    auto v = verify_witness(g0, to_witness(out));
    if (!v.accepted) throw InvariantViolation("almost_regular_to_subdivision: " + v.clause);
    ctl.attempted(used_attempts + attempt + 1);
    return out;
  }
  ctl.attempted(used_attempts + ctl.budget);
  throw BudgetExhausted("almost_regular_to_subdivision: extraction never met the target");
}

}  // namespace isub
