// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance [criterion numbers...]   (default: all)

#include "isub/bench.hpp"
#include "isub/generators.hpp"
#include "isub/io.hpp"
#include "isub/pipeline.hpp"
#include "isub/regularize.hpp"
#include "isub/shattering.hpp"
#include "isub/sparsify.hpp"
#include "isub/subdivision.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace isub;

namespace {

struct Result {
  bool pass = true;
  std::string summary;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    pass = false;
    if (problems.size() < 10) problems.push_back(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double avgd(const Graph& g) { return to_double(average_degree(g)); }

// ---------------------------------------------------------------- 1

Result c1_oracle_parity() {
  Result r;
  auto t0 = Clock::now();
  auto rows = bench::oracle_parity(1, 500);
  double secs = seconds_since(t0);
  int cases = 0, bad = 0;
  for (auto& row : rows) {
    cases += row.cases;
    bad += row.mismatches;
    if (row.mismatches) r.fail(row.detector + ": " + std::to_string(row.mismatches) + " mismatches");
    if (row.cases == 0) r.fail(row.detector + ": no cases");
  }
  if (rows.size() < 5) r.fail("expected five detectors, got " + std::to_string(rows.size()));
  if (secs >= 120) r.fail("runtime " + std::to_string(secs) + " s");
  r.summary = std::to_string(rows.size()) + " detectors, " + std::to_string(cases) + " comparisons, " +
              std::to_string(bad) + " mismatches";
  return r;
}

// ---------------------------------------------------------------- 2

// Edges x -> (x*r + j) mod nb cover every residue equally often when nb | na*r.
Graph circulant_biregular(int na, int nb, int r, BipartitePartition& part) {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < na; ++x)
    for (int j = 0; j < r; ++j) e.emplace_back(x, na + (x * r + j) % nb);
  part = {all_vertices(na), {}};
  for (int y = 0; y < nb; ++y) part.b.push_back(na + y);
  return Graph::from_edges(na + nb, e);
}

// A-vertices get degree r or heavy*r (one in `every` of them), neighbours uniform in B.
Graph skewed_bipartite(int na, int nb, int r, int heavy, int every, Rng& rng, BipartitePartition& part) {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < na; ++x) {
    int deg = std::min(nb, x % every == 0 ? heavy * r : r);
    std::vector<int> pool(nb);
    for (int y = 0; y < nb; ++y) pool[y] = y;
    for (int i = 0; i < deg; ++i) {
      int j = i + static_cast<int>(rng() % (nb - i));
      std::swap(pool[i], pool[j]);
      e.emplace_back(x, na + pool[i]);
    }
  }
  part = {all_vertices(na), {}};
  for (int y = 0; y < nb; ++y) part.b.push_back(na + y);
  return Graph::from_edges(na + nb, e);
}

Graph cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b, std::vector<int>* ids) {
  VertexSet all = set_union(a, b);
  std::vector<int> local(g.n(), -1);
  for (size_t i = 0; i < all.size(); ++i) local[all[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (int x : a)
    for (int y : g.neighbors(x))
      if (contains(b, y)) e.emplace_back(std::min(local[x], local[y]), std::max(local[x], local[y]));
  if (ids) *ids = all;
  return Graph::from_edges(static_cast<int>(all.size()), e);
}

Result c2_biregular() {
  Result r;
  const double Ls[3] = {1, 2, 8};
  int verified = 0, generated = 0;
  for (int i = 0; i < 200; ++i) {
    double L = Ls[i % 3];
    Rng rng(mix_seed(2, "c2", i));
    Graph g;
    BipartitePartition part;
    // resample until the instance is L-almost-biregular
    for (int tries = 0;; ++tries) {
      if (tries > 1000) {
        r.fail("instance " + std::to_string(i) + ": could not generate");
        break;
      }
      if (L == 1) {
        int nb = uniform_int(rng, 10, 150);
        int mult = uniform_int(rng, 1, 2);
        int na = std::min(400 - nb, nb * mult);
        int r0 = uniform_int(rng, 2, std::min(nb, 30));
        // keep nb | na*r
        while ((na * r0) % nb) --r0;
        if (r0 < 1) continue;
        g = circulant_biregular(na, nb, r0, part);
      } else if (L == 2) {
        int na = uniform_int(rng, 20, 200), nb = uniform_int(rng, 20, 200);
        g = skewed_bipartite(na, nb, uniform_int(rng, 3, 12), 1, 1, rng, part);
      } else {
        int na = uniform_int(rng, 20, 200), nb = uniform_int(rng, 20, 200);
        g = skewed_bipartite(na, nb, uniform_int(rng, 2, 6), 5, uniform_int(rng, 3, 8), rng, part);
      }
      if (g.m() > 0 && is_almost_biregular(g, part, L)) break;
    }
    ++generated;
    if (g.n() > 400) r.fail("instance " + std::to_string(i) + " exceeds 400 vertices");
    Ctl ctl;
    ctl.seed = mix_seed(2, "run", i);
    ctl.budget = 200;
    try {
      auto out = biregular_to_regular(g, part, L, ctl);
      Graph before = cross_edges(g, part.a, part.b, nullptr);
      Graph after = cross_edges(g, out.a, out.b, nullptr);
      // the sides must come from the input sides
      bool sides_ok = set_difference(out.a, set_union(part.a, part.b)).empty() &&
                      set_difference(out.b, set_union(part.a, part.b)).empty() &&
                      intersection_size(out.a, out.b) == 0;
      Rational d0 = average_degree(before), d1 = average_degree(after);
      bool ok = sides_ok && after.n() > 0 && d1 * 4 >= d0 &&
                Rational(after.max_degree()) <= Rational(24) * Rational(static_cast<long long>(L)) * d1;
      if (ok)
        ++verified;
      else
        r.fail("instance " + std::to_string(i) + ": contract violated (d " + std::to_string(to_double(d0)) + " -> " +
               std::to_string(to_double(d1)) + ", max " + std::to_string(after.max_degree()) + ")");
    } catch (const Error& e) {
      r.fail("instance " + std::to_string(i) + " (L=" + std::to_string(static_cast<int>(L)) + "): " + e.what());
    }
  }
  r.summary = std::to_string(verified) + "/" + std::to_string(generated) + " verified";
  return r;
}

// ---------------------------------------------------------------- 3

// random_degenerate base plus `hubs` vertices adjacent to everything
Graph hub_graph(int n, int r, int hubs, uint64_t seed) {
  Graph base = gen::random_degenerate(n - hubs, r, seed);
  auto e = base.edges();
  for (int h = 0; h < hubs; ++h)
    for (int v = 0; v < n; ++v)
      if (v != n - hubs + h) e.emplace_back(std::min(v, n - hubs + h), std::max(v, n - hubs + h));
  return Graph::from_edges(n, e);
}

Result c3_dichotomy() {
  Result r;
  const double c1 = 28800, c2 = 3200;
  int unb = 0, ar = 0;
  for (int i = 0; i < 500; ++i) {
    Rng rng(mix_seed(3, "c3", i));
    Graph g;
    double d;
    int n = uniform_int(rng, 300, 1000);
    if (i % 2 == 0) {
      int rdeg = uniform_int(rng, 16, 24);
      g = gen::random_degenerate(n, rdeg, mix_seed(3, "g", i));
      d = rdeg;
    } else {
      int hubs = uniform_int(rng, 1, 3), rdeg = uniform_int(rng, 16 - hubs, 20);
      g = hub_graph(n, rdeg, hubs, mix_seed(3, "g", i));
      d = rdeg + hubs;
    }
    double l = uniform_int(rng, 16, 24);
    int dg = degeneracy(g).degeneracy;
    if (d < 16 || avgd(g) < d || dg > d) {
      r.fail("instance " + std::to_string(i) + " misses the preconditions");
      continue;
    }
    Ctl ctl;
    ctl.seed = mix_seed(3, "run", i);
    ctl.budget = 500;
    try {
      auto o = dichotomy(g, d, l, ctl, c1, c2);
      bool ok;
      if (o.kind == DichotomyOutcome::Unbalanced) {
        const auto& A = o.partition.a;
        const auto& B = o.partition.b;
        ok = !B.empty() && set_union(A, B) == all_vertices(g.n()) && intersection_size(A, B) == 0 &&
             edges_between(g, A, B) == o.edges_across && o.edges_across >= g.n() * d / 8 &&
             A.size() >= l * B.size() / 2;
        for (int v : B) ok = ok && g.degree(v) >= l * d;
        for (int v : A) ok = ok && g.degree(v) < l * d;
        ++unb;
      } else {
        double lc = std::max(2 * l, 256.0), lg = std::log2(lc);
        ok = certificate_consistent(g, o.cert) && !o.cert.subgraph.empty() &&
             to_double(o.cert.avg) >= (d / 2) / (c2 * lg * lg) &&
             o.cert.max_deg <= c1 * lg * lg * to_double(o.cert.avg);
        for (int v : o.cert.subgraph) ok = ok && g.degree(v) < l * d;
        ++ar;
      }
      if (!ok) r.fail("instance " + std::to_string(i) + ": outcome failed re-verification");
    } catch (const Error& e) {
      r.fail("instance " + std::to_string(i) + ": " + e.what());
    }
  }
  if (unb < 50) r.fail("Unbalanced exercised only " + std::to_string(unb) + " times");
  if (ar < 50) r.fail("AlmostRegular exercised only " + std::to_string(ar) + " times");
  r.summary = std::to_string(unb) + " Unbalanced, " + std::to_string(ar) + " AlmostRegular";
  return r;
}

// ---------------------------------------------------------------- 4

Result c4_deletion() {
  Result r;
  Graph c4 = gen::cycle(4);
  OracleBudget big{200, 100000};
  int ok_runs = 0, raised = 0, crossed = 0, other = 0;
  for (int i = 0; i < 100; ++i) {
    Rng rng(mix_seed(4, "c4", i));
    Graph g;
    double delta;
    if (i % 4 != 3) {
      // sparse: average degree 3..6
      int n = uniform_int(rng, 60, 120);
      g = gen::gnp(n, uniform_int(rng, 3, 6) / static_cast<double>(n), mix_seed(4, "g", i));
      delta = 0.5;
    } else {
      // small dense instances straddle n d^2
      int n = uniform_int(rng, 30, 40);
      g = gen::gnp(n, 0.4 + 0.02 * uniform_int(rng, 0, 10), mix_seed(4, "g", i));
      delta = 1.0;
    }
    double d = avgd(g);
    if (d <= 0) continue;
    long long count = enumerate_c4_rooted(g);
    if (count != count_c4(g)) r.fail("instance " + std::to_string(i) + ": C4 enumerations disagree");
    bool should_raise = static_cast<double>(count) >= deletion_threshold(g.n(), d, 4, delta);
    crossed += should_raise;
    DeletionParams prm;
    prm.d = d;
    prm.delta = delta;
    prm.eps = delta / 4;
    prm.target = 1;
    Ctl ctl;
    ctl.seed = mix_seed(4, "run", i);
    ctl.strict = false;  // max degree <= d^{1+eps} rarely holds for G(n, p)
    try {
      auto out = delete_copies(g, c4, prm, ctl);
      if (should_raise) r.fail("instance " + std::to_string(i) + ": count above threshold but no TooManyCopies");
      auto host = induced(g, out.to_host);
      bool good = host.graph == out.graph && oracle_count_c4(out.graph, big) == 0 && avgd(out.graph) >= 1;
      if (good)
        ++ok_runs;
      else
        r.fail("instance " + std::to_string(i) + ": output has a C4 or degree below 1");
    } catch (const TooManyCopies&) {
      ++raised;
      if (!should_raise) r.fail("instance " + std::to_string(i) + ": TooManyCopies below threshold");
    } catch (const BudgetExhausted&) {
      ++other;  // not a successful run
    } catch (const Error& e) {
      r.fail("instance " + std::to_string(i) + ": " + e.what());
    }
  }
  if (raised == 0) r.fail("no instance crossed the threshold");
  r.summary = std::to_string(ok_runs) + " verified outputs, " + std::to_string(raised) + " TooManyCopies (" +
              std::to_string(crossed) + " above threshold), " + std::to_string(other) + " budget exhausted";
  return r;
}

// ---------------------------------------------------------------- 5

struct Planted {
  Graph host;
  Witness w;
};

// balanced subdivision of K_h with `ell` internal vertices per edge, relabelled, plus noise vertices
Planted balanced_instance(int h, int ell, Rng& rng) {
  int pairs = h * (h - 1) / 2;
  int payload = h + pairs * ell;
  int noise = uniform_int(rng, 0, 10);
  int n = payload + noise;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> e;
  auto add = [&](int u, int v) { e.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v])); };
  Witness w;
  w.kind = WitnessKind::InducedBalancedSubdivision;
  w.path_length = ell + 1;
  for (int i = 0; i < h; ++i) w.branch.push_back(perm[i]);
  int next = h;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) {
      std::vector<int> p{perm[i]};
      int prev = i;
      for (int q = 0; q < ell; ++q) {
        add(prev, next);
        p.push_back(perm[next]);
        prev = next++;
      }
      add(prev, j);
      p.push_back(perm[j]);
      w.paths.push_back(p);
    }
  // noise vertices may touch anything; only edges inside the payload matter
  for (int x = payload; x < n; ++x)
    for (int y = 0; y < x; ++y)
      if (coin(rng, 0.2)) add(x, y);
  return {Graph::from_edges(n, e), w};
}

Planted hyper_instance(int s, Rng& rng) {
  Multihypergraph hg;
  hg.n = uniform_int(rng, s + 1, 12);
  hg.s = s;
  int m = uniform_int(rng, 2, 15);
  for (int i = 0; i < m; ++i) {
    VertexSet pool = all_vertices(hg.n);
    std::shuffle(pool.begin(), pool.end(), rng);
    hg.edges.push_back(sorted_unique(VertexSet(pool.begin(), pool.begin() + s)));
  }
  OneSubdivision sub;
  Graph base = one_subdivision_graph(hg, &sub);
  // noise vertices
  int noise = uniform_int(rng, 0, 5);
  Graph host = gen::pad_isolated(base, noise);
  auto e = host.edges();
  for (int x = base.n(); x < host.n(); ++x)
    for (int y = 0; y < x; ++y)
      if (coin(rng, 0.3)) e.emplace_back(y, x);
  return {Graph::from_edges(host.n(), e), to_witness(sub)};
}

Graph with_edge(const Graph& g, int u, int v) {
  auto e = g.edges();
  e.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::from_edges(g.n(), e);
}

Result c5_verifier() {
  Result r;
  int accepted = 0, valid = 0, rejected = 0, mutants = 0;
  std::vector<Planted> balanced, hyper;
  for (int i = 0; i < 200; ++i) {
    Rng rng(mix_seed(5, "valid", i));
    Planted p;
    if (i % 2 == 0) {
      p = balanced_instance(uniform_int(rng, 3, 6), 1 + (i / 2) % 3, rng);
      balanced.push_back(p);
    } else {
      p = hyper_instance(2 + (i / 2) % 3, rng);
      hyper.push_back(p);
    }
    ++valid;
    auto v = verify_witness(p.host, p.w);
    if (v.accepted)
      ++accepted;
    else
      r.fail("valid witness " + std::to_string(i) + " rejected: " + v.clause + " " + v.detail);
  }
  auto expect = [&](const Graph& g, const Witness& w, const std::string& clause, const std::string& what) {
    ++mutants;
    auto v = verify_witness(g, w);
    if (!v.accepted && v.clause == clause)
      ++rejected;
    else
      r.fail(what + ": expected " + clause + ", got " + (v.accepted ? "accepted" : v.clause));
  };
  for (int i = 0; i < 200; ++i) {
    Rng rng(mix_seed(5, "mutate", i));
    int kind = i % 4;
    if (kind < 3) {
      const Planted& p = balanced[i % balanced.size()];
      Witness w = p.w;
      if (kind == 0) {
        // chord between two non-adjacent payload vertices
        VertexSet pay(w.branch.begin(), w.branch.end());
        for (auto& q : w.paths) pay.insert(pay.end(), q.begin(), q.end());
        pay = sorted_unique(pay);
        int u, v;
        do {
          u = pay[rng() % pay.size()];
          v = pay[rng() % pay.size()];
        } while (u == v || p.host.adjacent(u, v));
        expect(with_edge(p.host, u, v), w, "induced-violation", "chord " + std::to_string(i));
      } else if (kind == 1) {
        // drop one internal vertex of one path
        size_t j = rng() % w.paths.size();
        auto& q = w.paths[j];
        q.erase(q.begin() + 1 + static_cast<long>(rng() % (q.size() - 2)));
        expect(p.host, w, q.size() < 3 ? "not-proper" : "not-balanced", "shortened " + std::to_string(i));
      } else {
        // reuse an internal vertex of another path
        size_t a = rng() % w.paths.size(), b;
        do b = rng() % w.paths.size();
        while (b == a);
        auto& qa = w.paths[a];
        auto& qb = w.paths[b];
        qb[1 + rng() % (qb.size() - 2)] = qa[1 + rng() % (qa.size() - 2)];
        expect(p.host, w, "not-disjoint", "duplicated " + std::to_string(i));
      }
    } else {
      // chord in a 1-subdivision: inside a, inside b, or a non-incident edge/branch pair
      const Planted& p = hyper[i % hyper.size()];
      const Witness& w = p.w;
      int which = (i / 4) % 3;
      const VertexSet& A = w.left;
      const VertexSet& B = w.right;
      int u = -1, v = -1;
      for (int tries = 0; tries < 1000 && u < 0; ++tries) {
        int x, y;
        if (which == 0) {
          x = A[rng() % A.size()];
          y = A[rng() % A.size()];
        } else if (which == 1) {
          x = B[rng() % B.size()];
          y = B[rng() % B.size()];
        } else {
          x = A[rng() % A.size()];
          y = B[rng() % B.size()];
        }
        if (x != y && !p.host.adjacent(x, y)) u = x, v = y;
      }
      if (u < 0) {
        r.fail("mutation " + std::to_string(i) + ": no free pair");
        continue;
      }
      const char* clause = which == 0 ? "a-not-independent" : which == 1 ? "b-not-independent" : "uniformity";
      expect(with_edge(p.host, u, v), w, clause, "hyper chord " + std::to_string(i));
    }
  }
  r.summary = std::to_string(accepted) + "/" + std::to_string(valid) + " valid accepted, " +
              std::to_string(rejected) + "/" + std::to_string(mutants) + " mutations rejected with the right clause";
  return r;
}

// ---------------------------------------------------------------- 6

Result c6_hk() {
  Result r;
  auto t0 = Clock::now();
  int good = 0;
  for (int k = 2; k <= 16; ++k) {
    Hk hk = construct_hk(k);
    const Graph& g = hk.graph;
    bool ok = enumerate_c4_rooted(g) == 0 && count_c4(g) == 0;
    if (g.n() <= 24 && g.m() <= 400) ok = ok && oracle_count_c4(g) == 0;
    ok = ok && hk.q >= k && hk.q < 2 * k && g.n() <= 8 * k * k;
    for (int v = 0; v < g.n(); ++v) ok = ok && g.degree(v) == hk.q;
    std::set<VertexSet> seen;
    for (int y : hk.sides.b) seen.insert(g.neighbors(y));
    ok = ok && seen.size() == hk.sides.b.size();
    ok = ok && static_cast<int>(hk.sides.a.size() + hk.sides.b.size()) == g.n() &&
         is_independent(g, hk.sides.a) && is_independent(g, hk.sides.b);
    if (ok)
      ++good;
    else
      r.fail("k=" + std::to_string(k) + " failed");
  }
  double secs = seconds_since(t0);
  if (secs >= 10) r.fail("runtime " + std::to_string(secs) + " s");
  r.summary = std::to_string(good) + "/15 values of k, " + std::to_string(secs) + " s";
  return r;
}

// ---------------------------------------------------------------- 7

// straightforward re-implementations, sharing nothing with the library checks
bool shattered_by_hand(const SetFamily& f, const VertexSet& R) {
  for (size_t i = 0; i < R.size(); ++i)
    for (size_t j = i + 1; j < R.size(); ++j) {
      bool hit = false;
      for (auto& F : f.members) {
        int inside = 0;
        for (int x : R) inside += std::find(F.begin(), F.end(), x) != F.end();
        bool hi = std::find(F.begin(), F.end(), R[i]) != F.end();
        bool hj = std::find(F.begin(), F.end(), R[j]) != F.end();
        if (inside == 2 && hi && hj) hit = true;
      }
      if (!hit) return false;
    }
  return true;
}

bool avoider_by_hand(const SetFamily& f, const VertexSet& I) {
  for (auto& F : f.members) {
    int inside = 0;
    for (int x : I) inside += std::find(F.begin(), F.end(), x) != F.end();
    if (inside >= 2) return false;
  }
  return true;
}

bool distinct_in_range(const VertexSet& s, int n, size_t size) {
  if (s.size() != size) return false;
  std::set<int> u(s.begin(), s.end());
  return u.size() == size && *u.begin() >= 0 && *u.rbegin() < n;
}

// returns false when the returned object fails the exhaustive check
bool cross_check(const SetFamily& f, uint64_t seed, int& shattered, int& avoided, int& none) {
  Ctl ctl;
  ctl.seed = seed;
  ctl.strict = false;
  try {
    auto o = shatter_or_avoid(f, 2, 3, 3, ctl);
    if (o.kind == ShatterOutcome::Shattered) {
      ++shattered;
      return distinct_in_range(o.set, f.n, 3) && shattered_by_hand(f, o.set) && outcome_valid(f, o, 3, 3);
    }
    ++avoided;
    return distinct_in_range(o.set, f.n, 3) && avoider_by_hand(f, o.set) && outcome_valid(f, o, 3, 3);
  } catch (const Error&) {
    ++none;
    return true;
  }
}

// does any 3-set work either way? used to audit "none" answers
bool some_outcome_exists(const SetFamily& f) {
  bool found = false;
  for_each_subset(all_vertices(f.n), 3, [&](const std::vector<int>& s) {
    found = shattered_by_hand(f, s) || avoider_by_hand(f, s);
    return !found;
  });
  return found;
}

Result c7_shattering() {
  Result r;
  int sh = 0, av = 0, none = 0, families = 0, none_wrong = 0;
  auto check = [&](const SetFamily& f, uint64_t seed, const std::string& tag) {
    ++families;
    int before = none;
    if (!cross_check(f, seed, sh, av, none)) r.fail(tag + ": returned object fails exhaustive check");
    if (none > before && some_outcome_exists(f)) ++none_wrong;
  };
  // every family of at most 12 distinct subsets of [n] for n = 3, 4
  for (int n = 3; n <= 4; ++n) {
    int subsets = 1 << n;
    for (uint32_t mask = 0; mask < (1u << subsets); ++mask) {
      if (__builtin_popcount(mask) > 12) continue;
      SetFamily f;
      f.n = n;
      for (int s = 0; s < subsets; ++s)
        if (mask >> s & 1) {
          VertexSet m;
          for (int x = 0; x < n; ++x)
            if (s >> x & 1) m.push_back(x);
          f.members.push_back(m);
        }
      check(f, mix_seed(7, "ex", mask), "n=" + std::to_string(n) + " mask " + std::to_string(mask));
    }
  }
  // seeded families for n = 5..10
  for (int i = 0; i < 6000; ++i) {
    Rng rng(mix_seed(7, "small", i));
    SetFamily f;
    f.n = 5 + i % 6;
    int m = uniform_int(rng, 0, 12);
    double p = 0.15 + 0.1 * (i % 7);
    for (int j = 0; j < m; ++j) {
      VertexSet s;
      for (int x = 0; x < f.n; ++x)
        if (coin(rng, p)) s.push_back(x);
      f.members.push_back(s);
    }
    check(f, mix_seed(7, "run", i), "small " + std::to_string(i));
  }
  int exhaustive_sh = sh, exhaustive_av = av, exhaustive_none = none;
  // 1000 larger instances inside the lemma's hypothesis (every member smaller than n / 216), run strict:
  // an outcome must come back, and it is re-verified by the library and by hand
  int lsh = 0, lav = 0, lnone = 0;
  const double delta = std::pow(static_cast<double>(hypergraph_ramsey_bound(2, 3, 3)), -3);
  for (int i = 0; i < 1000; ++i) {
    Rng rng(mix_seed(7, "large", i));
    SetFamily f;
    f.n = uniform_int(rng, 1000, 4000);
    int cap = static_cast<int>(std::ceil(delta * f.n)) - 1;
    // half the instances are crowded: many members of the largest admissible size
    bool crowded = i % 2;
    int m = crowded ? uniform_int(rng, 5000, 30000) : uniform_int(rng, 10, 300);
    for (int j = 0; j < m; ++j) {
      int size = crowded ? cap : uniform_int(rng, 0, cap);
      VertexSet s;
      while (static_cast<int>(s.size()) < size) {
        s.push_back(uniform_int(rng, 0, f.n - 1));
        s = sorted_unique(s);
      }
      f.members.push_back(s);
    }
    Ctl ctl;
    ctl.seed = mix_seed(7, "lrun", i);
    try {
      auto o = shatter_or_avoid(f, 2, 3, 3, ctl);
      bool ok = distinct_in_range(o.set, f.n, 3) && outcome_valid(f, o, 3, 3);
      if (o.kind == ShatterOutcome::Shattered) {
        ++lsh;
        ok = ok && shattered_by_hand(f, o.set);
      } else {
        ++lav;
        ok = ok && avoider_by_hand(f, o.set);
      }
      if (!ok) r.fail("large " + std::to_string(i) + ": re-verification failed");
    } catch (const Error& e) {
      ++lnone;
      if (lnone <= 3) r.fail("large " + std::to_string(i) + ": " + e.what());
    }
  }
  if (lnone) r.fail(std::to_string(lnone) + " larger instances returned neither outcome");
  if (none_wrong) r.fail(std::to_string(none_wrong) + " small families had an outcome the operation missed");
  r.summary = std::to_string(families) + " small families (" + std::to_string(exhaustive_sh) + " shattered, " +
              std::to_string(exhaustive_av) + " avoider, " + std::to_string(exhaustive_none) + " neither); " +
              "1000 larger (" + std::to_string(lsh) + " shattered, " + std::to_string(lav) + " avoider)";
  return r;
}

// ---------------------------------------------------------------- 8

Graph corpus_graph(int i, Rng& rng, std::string& name) {
  switch (i % 10) {
    case 0: {
      int n = uniform_int(rng, 15, 60);
      double p = uniform_int(rng, 1, 9) / 10.0;
      name = "gnp(" + std::to_string(n) + "," + std::to_string(p) + ")";
      return gen::gnp(n, p, rng());
    }
    case 1: {
      int n = uniform_int(rng, 15, 50);
      name = "complement-gnp(" + std::to_string(n) + ")";
      return gen::complement_gnp(n, uniform_int(rng, 1, 5) / 10.0, rng());
    }
    case 2: {
      const int qs[4] = {2, 3, 4, 5};
      int q = qs[rng() % 4];
      name = "incidence-plane(" + std::to_string(q) + ")";
      return gen::incidence_plane(q);
    }
    case 3: {
      int k = uniform_int(rng, 2, 4);
      name = "h_k(" + std::to_string(k) + ")";
      return gen::h_k(k);
    }
    case 4: {
      int h = uniform_int(rng, 3, 7);
      name = "one-subdivision(" + std::to_string(h) + ")";
      return gen::pad_isolated(gen::one_subdivision_of_clique(h), uniform_int(rng, 0, 10));
    }
    case 5: {
      int parts = uniform_int(rng, 2, 5), size = uniform_int(rng, 3, 10);
      name = "multipartite(" + std::to_string(parts) + "," + std::to_string(size) + ")";
      return gen::multipartite(parts, size);
    }
    case 6: {
      int n = uniform_int(rng, 20, 80), d = uniform_int(rng, 1, 4);
      name = "degenerate(" + std::to_string(n) + "," + std::to_string(d) + ")";
      return gen::random_degenerate(n, d, rng());
    }
    case 7: {
      int n = uniform_int(rng, 5, 30);
      name = "cycle(" + std::to_string(n) + ")";
      return gen::cycle(n);
    }
    case 8: {
      int n = uniform_int(rng, 5, 30);
      name = "complete(" + std::to_string(n) + ")";
      return gen::complete(n);
    }
    default: {
      int a = uniform_int(rng, 2, 12), b = uniform_int(rng, 2, 20);
      name = "complete-bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")";
      return gen::complete_bipartite(a, b);
    }
  }
}

Result c8_end_to_end() {
  Result r;
  auto t0 = Clock::now();
  const char* drivers[4] = {"main", "main1", "main2", "base-case"};
  int witnesses = 0, failures = 0, replays = 0;
  std::map<std::string, int> kinds;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(mix_seed(8, "c8", i));
    std::string name;
    Graph g = corpus_graph(i / 4, rng, name);
    std::string drv = drivers[i % 4];
    RunConfig cfg;
    cfg.seed = mix_seed(8, "seed", i);
    int s = uniform_int(rng, 1, 3), t = uniform_int(rng, s, 3), k = uniform_int(rng, 2, 4),
        h = uniform_int(rng, 3, 4);
    std::map<std::string, std::string> prm;
    std::function<DriverResult()> run;
    if (drv == "main") {
      run = [&] { return main_driver(g, s, t, k, cfg); };
      prm = {{"s", std::to_string(s)}, {"t", std::to_string(t)}, {"k", std::to_string(k)}};
    } else if (drv == "main1") {
      s = std::max(s, 2);
      run = [&] { return main1(g, h, s, cfg); };
      prm = {{"h", std::to_string(h)}, {"s", std::to_string(s)}};
    } else if (drv == "main2") {
      k = std::min(k, 3);
      run = [&] { return main2(g, k, s, cfg); };
      prm = {{"k", std::to_string(k)}, {"s", std::to_string(s)}};
    } else {
      k = std::max(k, 3);
      run = [&] { return base_case(g, k, cfg); };
      prm = {{"k", std::to_string(k)}};
    }
    std::string tag = drv + " on " + name + " (run " + std::to_string(i) + ")";
    DriverResult res;
    try {
      res = run();
    } catch (const std::exception& e) {
      r.fail(tag + ": threw " + e.what());
      continue;
    }
    // the same path the CLI takes: serialize graph and document, parse both back, verify
    WitnessDocument doc;
    doc.driver = drv;
    doc.parameters = prm;
    doc.seed = cfg.seed;
    doc.trace = res.trace;
    doc.trace_digest = res.trace.digest();
    doc.witness = res.witness;
    doc.verdict = res.ok();
    doc.clause = res.failure_reason;
    std::istringstream graph_text(emit_edge_list(g));
    Graph g2 = parse_edge_list(graph_text);
    WitnessDocument back = parse_witness_document(witness_document_json(doc));
    if (!(back.trace == res.trace) || back.trace_digest != res.trace.digest())
      r.fail(tag + ": trace lost in serialization");
    if (res.ok()) {
      ++witnesses;
      kinds[kind_name(res.witness->kind)]++;
      if (!back.witness || !(*back.witness == *res.witness)) r.fail(tag + ": witness lost in serialization");
      auto v = verify_witness(g2, *back.witness);
      if (!v.accepted) r.fail(tag + ": witness rejected (" + v.clause + ")");
    } else {
      ++failures;
      if (back.witness) r.fail(tag + ": Failure document carries a witness");
      if (res.trace.entries.empty()) r.fail(tag + ": Failure without trace");
      DriverResult again = run();
      ++replays;
      if (!(again.trace == res.trace) || again.witness || again.failure_reason != res.failure_reason)
        r.fail(tag + ": replay differs");
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 1800) r.fail("runtime " + std::to_string(secs) + " s");
  std::string mix;
  for (auto& [k, c] : kinds) mix += " " + k + "=" + std::to_string(c);
  r.summary = std::to_string(witnesses) + " verified witnesses (" + mix.substr(mix.empty() ? 0 : 1) + "), " +
              std::to_string(failures) + " failures, " + std::to_string(replays) + " replays identical, " +
              std::to_string(static_cast<int>(secs)) + " s";
  return r;
}

// ---------------------------------------------------------------- 9

bool took(const RunTrace& t, const std::string& branch) {
  for (auto& e : t.entries)
    if (e.op == "branch" && e.params == branch) return true;
  return false;
}

Result c9_branches() {
  Result r;
  int covered = 0;
  auto expect = [&](const std::string& label, const Graph& g, const DriverResult& res, bool branch_seen,
                    std::optional<WitnessKind> kind) {
    bool ok = branch_seen && res.witness && verify_witness(g, *res.witness).accepted &&
              res.trace.has("verify", "accepted");
    if (ok && kind) ok = res.witness->kind == *kind;
    if (ok)
      ++covered;
    else
      r.fail(label + " not triggered");
  };

  // clique: dense escape of main on K_100, closed by too_dense
  {
    RunConfig cfg;
    cfg.eps_main = 0.09;
    cfg.c4free_target = 1000;
    Graph g = gen::complete(100);
    auto res = main_driver(g, 2, 2, 5, cfg);
    expect("clique", g, res, took(res.trace, "dense-escape") && res.trace.has("too_dense", "clique"),
           WitnessKind::Clique);
  }
  // induced K_{s,t}: same route on K_{5x10}
  {
    RunConfig cfg;
    cfg.eps_main = 0.09;
    cfg.c4free_target = 1000;
    cfg.drc_tuple = 1;
    Graph g = gen::multipartite(5, 10);
    auto res = main_driver(g, 2, 2, 6, cfg);
    expect("induced K_{s,t}", g, res, took(res.trace, "dense-escape") && res.trace.has("too_dense", "induced-kst"),
           WitnessKind::InducedKst);
  }
  // unbalanced subdivision: base case and main on the 1-subdivision of K_30
  {
    RunConfig cfg;
    cfg.L_base = 6;
    cfg.unbalanced_p = 0.2;
    Graph g = gen::one_subdivision_of_clique(30);
    auto res = base_case(g, 3, cfg);
    expect("unbalanced subdivision (base case)", g, res,
           took(res.trace, "unbalanced") && res.trace.has("unbalanced_to_subdivision", "ok"),
           WitnessKind::InducedBalancedSubdivision);
    RunConfig cm;
    cm.L_main = 6;
    cm.unbalanced_p = 0.2;
    auto rm = main_driver(g, 2, 2, 3, cm);
    expect("unbalanced subdivision (main)", g, rm,
           took(rm.trace, "unbalanced") && rm.trace.has("unbalanced_to_subdivision", "ok"), std::nullopt);
  }
  // almost-regular subdivision: Heawood graph in the base case
  {
    RunConfig cfg;
    Graph g = gen::heawood();
    auto res = base_case(g, 3, cfg);
    expect("almost-regular subdivision", g, res,
           took(res.trace, "almost-regular") && res.trace.has("almost_regular_to_subdivision", "ok"),
           WitnessKind::InducedBalancedSubdivision);
  }
  // dense escape -> one_sided_eh in main1
  {
    RunConfig cfg;
    cfg.eps_main1 = 0.09;
    cfg.c4free_target = 1000;
    cfg.pattern_check_max_h = 2;
    Graph g = gen::gnp(60, 0.25, 3);
    auto res = main1(g, 3, 5, cfg);
    expect("dense escape -> one_sided_eh", g, res,
           took(res.trace, "dense-escape") && took(res.trace, "one-sided-eh") && res.trace.has("one_sided_eh", "ok"),
           WitnessKind::InducedBalancedSubdivision);
  }
  // C4-free escape: main on a padded 1-subdivision of K_6
  {
    RunConfig cfg;
    Graph g = gen::pad_isolated(gen::one_subdivision_of_clique(6), 20);
    auto res = main_driver(g, 2, 2, 3, cfg);
    expect("C4-free escape", g, res, took(res.trace, "c4free-escape"), WitnessKind::InducedBalancedSubdivision);
  }
  // C4-free dense output of main2 through the deletion method
  {
    auto p = gen::incidence_plane(8);
    auto e = p.edges();
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
      int u = static_cast<int>(rng() % p.n()), v = static_cast<int>(rng() % p.n());
      if (u != v) e.emplace_back(std::min(u, v), std::max(u, v));
    }
    Graph g = Graph::from_edges(p.n(), e);
    RunConfig cfg;
    cfg.deletion_p = 1;
    auto res = main2(g, 4, 3, cfg);
    expect("C4-free dense (main2)", g, res,
           res.trace.has("dense_or_c4free", "c4free") && took(res.trace, "c4free-escape"), WitnessKind::C4FreeDense);
  }
  r.summary = std::to_string(covered) + " curated branch instances confirmed by trace";
  return r;
}

// ---------------------------------------------------------------- 10

Result c10_sweep() {
  Result r;
  auto grid = bench::default_sweep_grid();
  if (grid.size() != 9) r.fail("grid has " + std::to_string(grid.size()) + " points");
  auto rows = bench::tightness_sweep(1, {50, 100, 200}, grid, 20, 3);
  std::string detail;
  bool mono = bench::sweep_monotone(rows, &detail);
  if (!mono) r.fail("not monotone: " + detail);
  if (rows.size() != 27) r.fail("expected 27 sweep rows");
  std::string freq;
  for (auto& row : rows)
    if (row.n == 200) freq += " " + std::to_string(row.kss_hits);
  r.summary = std::to_string(rows.size()) + " points, monotone within Wilson noise (n=200 hits:" + freq + ")";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  std::vector<std::pair<int, std::function<Result()>>> all = {
      {1, c1_oracle_parity}, {2, c2_biregular}, {3, c3_dichotomy},   {4, c4_deletion}, {5, c5_verifier},
      {6, c6_hk},            {7, c7_shattering}, {8, c8_end_to_end}, {9, c9_branches}, {10, c10_sweep},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failed = 0;
  for (auto& [id, fn] : all) {
    if (!pick.empty() && !pick.count(id)) continue;
    auto t0 = Clock::now();
    Result res;
    try {
      res = fn();
    } catch (const std::exception& e) {
      res.fail(std::string("uncaught: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f s", seconds_since(t0));
    std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << res.summary << " [" << secs << "]\n";
    for (auto& p : res.problems) std::cout << "    " << p << "\n";
    failed += !res.pass;
  }
  return failed ? 1 : 0;
}
