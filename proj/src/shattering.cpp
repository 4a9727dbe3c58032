#include "isub/shattering.hpp"

#include "isub/oracles.hpp"
#include "isub/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <unordered_set>

namespace isub {

bool SetFamily::valid() const {
  for (auto& f : members) {
    if (f != sorted_unique(f)) return false;
    for (int v : f)
      if (v < 0 || v >= n) return false;
  }
  return n >= 0;
}

bool is_k_shattered(const SetFamily& fam, const VertexSet& r_in, int k) {
  VertexSet r = sorted_unique(r_in);
  if (static_cast<int>(r.size()) < k || k < 0) return false;
  std::set<VertexSet> traces;
  for (auto& f : fam.members) {
    VertexSet t = set_intersection(r, f);
    if (static_cast<int>(t.size()) == k) traces.insert(t);
  }
  return static_cast<long long>(traces.size()) == binom_ll(static_cast<int>(r.size()), k);
}

bool is_avoider(const SetFamily& fam, const VertexSet& i_in, int k) {
  VertexSet i = sorted_unique(i_in);
  for (auto& f : fam.members)
    if (intersection_size(i, f) >= k) return false;
  return true;
}

bool outcome_valid(const SetFamily& fam, const ShatterOutcome& o, int h, int d_cap) {
  VertexSet s = sorted_unique(o.set);
  if (s.size() != o.set.size()) return false;
  for (int v : s)
    if (v < 0 || v >= fam.n) return false;
  if (o.kind == ShatterOutcome::Shattered) return static_cast<int>(s.size()) == h && is_k_shattered(fam, s, o.k);
  return static_cast<int>(s.size()) == d_cap && is_avoider(fam, s, o.k);
}

long long hypergraph_ramsey_bound(int k, int h, int d_cap) {
  constexpr long long sat = 1LL << 50;
  if (h < k && d_cap < k) return std::min(h, d_cap);
  if (h < k) return h;
  if (d_cap < k) return d_cap;
  if (k <= 1) return std::min<long long>(sat, static_cast<long long>(h) + d_cap - 1);
  if (h == k) return d_cap;
  if (d_cap == k) return h;
  if (k == 2) return std::min(sat, binom_ll(h + d_cap - 2, h - 1));
  // R_k(h, D) <= R_{k-1}(R_k(h-1, D), R_k(h, D-1)) + 1; arguments past 200 only ever saturate
  static std::map<std::tuple<int, int, int>, long long> memo;
  auto key = std::make_tuple(k, h, d_cap);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long long a = hypergraph_ramsey_bound(k, h - 1, d_cap);
  long long b = hypergraph_ramsey_bound(k, h, d_cap - 1);
  long long r = sat;
  if (a <= 200 && b <= 200) r = std::min(sat, hypergraph_ramsey_bound(k - 1, static_cast<int>(a), static_cast<int>(b)) + 1);
  memo[key] = r;
  return r;
}

namespace {

// Index of members per element, for cover lookups.
struct FamilyIndex {
  const SetFamily& fam;
  std::vector<std::vector<int>> inc;

  explicit FamilyIndex(const SetFamily& f) : fam(f), inc(f.n) {
    for (size_t i = 0; i < f.members.size(); ++i)
      for (int v : f.members[i]) inc[v].push_back(static_cast<int>(i));
  }
  // Lowest-index member containing the sorted set s, or -1.
  int cover(const VertexSet& s) const {
    if (s.empty()) return fam.members.empty() ? -1 : 0;
    int best = -1;
    size_t pivot = 0;
    for (size_t i = 1; i < s.size(); ++i)
      if (inc[s[i]].size() < inc[s[pivot]].size()) pivot = i;
    for (int m : inc[s[pivot]]) {
      bool all = true;
      for (int v : s) all = all && contains(fam.members[m], v);
      if (all) {
        best = m;
        break;
      }
    }
    return best;
  }
};

// Cover check on all k-subsets by marking those inside members; nullopt if over budget.
std::optional<bool> all_k_subsets_covered(const SetFamily& fam, int k, long long budget) {
  long long total = binom_ll(fam.n, k);
  __int128 work = 0;
  for (auto& f : fam.members) work += binom_ll(static_cast<int>(f.size()), k);
  if (work > budget || total > budget) return std::nullopt;
  long double space = std::pow(static_cast<long double>(std::max(fam.n, 1)), k);
  if (space > 4e18L) return std::nullopt;
  std::unordered_set<uint64_t> seen;
  for (auto& f : fam.members)
    for_each_subset(f, k, [&](const std::vector<int>& s) {
      uint64_t code = 0;
      for (int v : s) code = code * static_cast<uint64_t>(fam.n) + static_cast<uint64_t>(v);
      seen.insert(code);
      return true;
    });
  return static_cast<long long>(seen.size()) == total;
}

// Random r-sample with the bad-event rejection; `cover` returns the assigned superset of a k-set (or nullopt).
template <class Cover>
std::optional<VertexSet> sample_shattered(int n, int k, int r, Rng& rng, Cover&& cover) {
  std::vector<int> xs(r);
  for (auto& x : xs) x = uniform_int(rng, 0, n - 1);
  VertexSet R = sorted_unique(xs);
  if (static_cast<int>(R.size()) != r) return std::nullopt;
  bool ok = for_each_subset(R, k, [&](const std::vector<int>& S) {
    auto f = cover(S);
    if (!f) return false;
    return set_intersection(R, *f) == S;
  });
  if (!ok) return std::nullopt;
  return R;
}

// Backtracking for a `size`-subset of [0, n) whose k-subsets all satisfy `want`.
template <class Pred>
std::optional<VertexSet> monochromatic(int n, int k, int size, Pred&& want) {
  VertexSet cur;
  std::optional<VertexSet> out;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(cur.size()) == size) {
      out = cur;
      return true;
    }
    for (int v = start; v < n; ++v) {
      bool ok = true;
      if (static_cast<int>(cur.size()) >= k - 1 && k >= 1)
        ok = for_each_subset(cur, k - 1, [&](const std::vector<int>& t) {
          VertexSet s = t;
          s.push_back(v);
          return want(s);
        });
      if (!ok) continue;
      cur.push_back(v);
      if (self(self, v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

VertexSet pre_shatter(const SetFamily& fam, int k, int r, const Ctl& ctl, long long cover_check_budget) {
  if (!fam.valid()) throw PreconditionFailed("pre_shatter: malformed family");
  if (r < k || k < 1) throw PreconditionFailed("pre_shatter: need r >= k >= 1");
  std::vector<std::string> bad;
  if (fam.n < 10LL * r * r) bad.push_back("n < 10 r^2");
  double cap = fam.n / std::pow(r, k + 1);
  for (auto& f : fam.members)
    if (f.size() > cap) {
      bad.push_back("member larger than n / r^{k+1}");
      break;
    }
  auto cov = all_k_subsets_covered(fam, k, cover_check_budget);
  if (!cov) ctl.note("pre_shatter: cover check skipped (over budget)");
  else if (!*cov) bad.push_back("some k-subset lies in no member");
  if (!bad.empty()) {
    if (ctl.strict) throw PreconditionFailed("pre_shatter: " + bad[0]);
    for (auto& b : bad) ctl.note("pre_shatter: " + b);
  }
  FamilyIndex idx(fam);
  auto cover = [&](const VertexSet& s) -> std::optional<VertexSet> {
    int m = idx.cover(s);
    if (m < 0) return std::nullopt;
    return fam.members[m];
  };
  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "pre-shatter", attempt));
    auto R = sample_shattered(fam.n, k, r, rng, cover);
    if (!R) continue;
    if (!is_k_shattered(fam, *R, k)) throw InvariantViolation("pre_shatter: sample not shattered");
    ctl.attempted(attempt + 1);
    return *R;
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("pre_shatter: every sample hit a bad event");
}

ShatterOutcome shatter_or_avoid(const SetFamily& fam, int k, int h, int d_cap, const Ctl& ctl) {
  if (!fam.valid()) throw PreconditionFailed("shatter_or_avoid: malformed family");
  if (k < 1 || h < k || d_cap < 1) throw PreconditionFailed("shatter_or_avoid: need h >= k >= 1 and D >= 1");
  int n = fam.n;
  long long N = hypergraph_ramsey_bound(k, h, d_cap);
  bool ramsey_ok = N <= kRamseyCap;
  if (!ramsey_ok) {
    if (ctl.strict) throw PreconditionFailed("shatter_or_avoid: Ramsey bound above the desk-scale cap");
    ctl.note("shatter_or_avoid: Ramsey bound " + std::to_string(N) + " above cap, proof route skipped");
  } else {
    double delta = std::pow(static_cast<double>(N), -(k + 1));
    for (auto& f : fam.members)
      if (!(f.size() < delta * n)) {
        if (ctl.strict) throw PreconditionFailed("shatter_or_avoid: member of size >= delta n");
        ctl.note("shatter_or_avoid: member of size >= delta n");
        break;
      }
  }
  auto done = [&](ShatterOutcome o, int attempts) {
    if (!outcome_valid(fam, o, h, d_cap)) throw InvariantViolation("shatter_or_avoid: outcome failed verification");
    ctl.attempted(attempts);
    return o;
  };

  std::vector<int> universe = all_vertices(n);
  // direct randomized search for an avoider
  if (n >= d_cap) {
    for (int attempt = 0; attempt < ctl.budget; ++attempt) {
      Rng rng(mix_seed(ctl.seed, "avoider", attempt));
      std::vector<int> pool = universe;
      for (int i = 0; i < d_cap; ++i) std::swap(pool[i], pool[uniform_int(rng, i, n - 1)]);
      VertexSet I = sorted_unique(VertexSet(pool.begin(), pool.begin() + d_cap));
      if (is_avoider(fam, I, k)) return done({ShatterOutcome::Avoider, I, k}, attempt + 1);
    }
  }
  int used = ctl.budget;

  // proof route: X shattered by F ∪ G, then a monochromatic set in the red/blue colouring of binom(X, k)
  if (ramsey_ok && n >= N) {
    FamilyIndex idx(fam);
    auto cover = [&](const VertexSet& s) -> std::optional<VertexSet> {
      int m = idx.cover(s);
      if (m < 0) return s;  // s belongs to G
      return fam.members[m];
    };
    for (int attempt = 0; attempt < ctl.budget; ++attempt) {
      Rng rng(mix_seed(ctl.seed, "shatter-route", attempt));
      auto X = sample_shattered(n, k, static_cast<int>(N), rng, cover);
      ++used;
      if (!X) continue;
      std::set<VertexSet> red;
      for (auto& f : fam.members) {
        VertexSet t = set_intersection(*X, f);
        if (static_cast<int>(t.size()) == k) {
          VertexSet pos;
          for (int v : t) pos.push_back(static_cast<int>(std::lower_bound(X->begin(), X->end(), v) - X->begin()));
          red.insert(pos);
        }
      }
      int nx = static_cast<int>(X->size());
      auto R = monochromatic(nx, k, h, [&](const VertexSet& s) { return red.count(s) > 0; });
      if (R) {
        VertexSet out;
        for (int p : *R) out.push_back((*X)[p]);
        return done({ShatterOutcome::Shattered, out, k}, used);
      }
      auto B = monochromatic(nx, k, d_cap, [&](const VertexSet& s) { return red.count(s) == 0; });
      if (!B) throw InvariantViolation("shatter_or_avoid: Ramsey bound violated");
      VertexSet out;
      for (int p : *B) out.push_back((*X)[p]);
      return done({ShatterOutcome::Avoider, out, k}, used);
    }
  }

  // exhaustive fallbacks on small universes
  constexpr long long kExhaustive = 200'000;
  bool avoid_exhausted = binom_ll(n, d_cap) <= kExhaustive;
  bool shatter_exhausted = binom_ll(n, h) <= kExhaustive;
  if (avoid_exhausted) {
    std::optional<VertexSet> hit;
    for_each_subset(universe, d_cap, [&](const std::vector<int>& I) {
      if (!is_avoider(fam, I, k)) return true;
      hit = I;
      return false;
    });
    if (hit) return done({ShatterOutcome::Avoider, *hit, k}, used);
  }
  if (shatter_exhausted) {
    std::optional<VertexSet> hit;
    for_each_subset(universe, h, [&](const std::vector<int>& R) {
      if (!is_k_shattered(fam, R, k)) return true;
      hit = R;
      return false;
    });
    if (hit) return done({ShatterOutcome::Shattered, *hit, k}, used);
  }
  ctl.attempted(used);
  if (avoid_exhausted && shatter_exhausted)
    throw PreconditionFailed("shatter_or_avoid: family has neither outcome (member sizes too large)");
  throw BudgetExhausted("shatter_or_avoid: no outcome within budget");
}

std::vector<int> one_sided_eh(const Graph& g, const Graph& pattern, const BipartitePartition& sides, int s,
                              const Ctl& ctl, long long kss_budget) {
  int n = g.n();
  VertexSet A = sorted_unique(sides.a), B = sorted_unique(sides.b);
  if (static_cast<int>(A.size() + B.size()) != pattern.n() || intersection_size(A, B) != 0)
    throw PreconditionFailed("one_sided_eh: sides do not partition the pattern");
  for (auto [u, v] : pattern.edges())
    if (contains(A, u) == contains(A, v)) throw PreconditionFailed("one_sided_eh: pattern edge inside a side");
  int a = static_cast<int>(A.size());
  if (a > 30) throw PreconditionFailed("one_sided_eh: pattern side A too large");
  if (pattern.n() > n) throw PreconditionFailed("one_sided_eh: pattern larger than host");

  std::vector<std::string> bad;
  try {
    if (find_kss(g, s, kss_budget)) bad.push_back("host contains K_{s,s}");
  } catch (const BudgetExhausted&) {
    ctl.note("one_sided_eh: K_{s,s} check over budget, skipped");
  }
  int delta = std::max(1, pattern.max_degree());
  double eps_h = 1.0 / (100.0 * delta);
  if (to_double(average_degree(g)) < std::pow(n, 1 - eps_h)) bad.push_back("d(g) < n^{1-eps_H}");
  if (!bad.empty()) {
    if (ctl.strict) throw PreconditionFailed("one_sided_eh: " + bad[0]);
    for (auto& b : bad) ctl.note("one_sided_eh: " + b);
  }

  // A': about sqrt(n) vertices of large degree
  std::vector<int> byDeg = all_vertices(n);
  std::stable_sort(byDeg.begin(), byDeg.end(), [&](int x, int y) { return g.degree(x) > g.degree(y); });
  int root = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  double thr = std::pow(n, 1 - 2 * eps_h);
  VertexSet a1;
  for (int v : byDeg)
    if (static_cast<int>(a1.size()) < root && g.degree(v) >= thr) a1.push_back(v);
  if (a1.empty()) {
    ctl.note("one_sided_eh: no vertex reaches n^{1-2eps_H}, using top degrees");
    a1.assign(byDeg.begin(), byDeg.begin() + std::min(root, n));
  }
  a1 = sorted_unique(a1);
  int need_codeg = 1;
  for (int b : B) need_codeg = std::max(need_codeg, pattern.degree(b));
  VertexSet astar;
  try {
    Ctl c = ctl.child("one-sided-drc");
    c.strict = false;
    c.budget = std::min(ctl.budget, 50);
    DrcOptions opt;
    opt.tuple = 1;
    opt.within = a1;
    astar = drc(g, need_codeg, c, opt);
  } catch (const BudgetExhausted&) {
    ctl.note("one_sided_eh: DRC step failed, using A'");
    astar = a1;
  }
  if (astar.empty()) astar = a1;

  std::vector<uint32_t> want(B.size(), 0);
  for (size_t j = 0; j < B.size(); ++j)
    for (int u : pattern.neighbors(B[j]))
      want[j] |= 1u << (std::lower_bound(A.begin(), A.end(), u) - A.begin());

  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "one-sided-eh", attempt));
    std::vector<int> xs(a);
    for (auto& x : xs) x = astar[uniform_int(rng, 0, static_cast<int>(astar.size()) - 1)];
    VertexSet xset = sorted_unique(xs);
    if (static_cast<int>(xset.size()) != a || !is_independent(g, xset)) continue;
    // trace of every other vertex on x_1..x_a
    std::map<uint32_t, std::vector<int>> Y;
    std::vector<uint32_t> trace(n, 0);
    for (int i = 0; i < a; ++i)
      for (int y : g.neighbors(xs[i])) trace[y] |= 1u << i;
    for (int y = 0; y < n; ++y)
      if (!contains(xset, y)) Y[trace[y]].push_back(y);
    bool feasible = true;
    for (auto m : want) feasible = feasible && Y.count(m) && !Y[m].empty();
    if (!feasible) continue;
    for (int inner = 0; inner < 200; ++inner) {
      std::vector<int> ys;
      bool ok = true;
      for (size_t j = 0; j < B.size() && ok; ++j) {
        auto& pool = Y[want[j]];
        int y = pool[uniform_int(rng, 0, static_cast<int>(pool.size()) - 1)];
        for (int z : ys)
          if (z == y || g.adjacent(z, y)) ok = false;
        ys.push_back(y);
      }
      if (!ok) continue;
      std::vector<int> image(pattern.n());
      for (int i = 0; i < a; ++i) image[A[i]] = xs[i];
      for (size_t j = 0; j < B.size(); ++j) image[B[j]] = ys[j];
      if (!verify_induced_copy(g, pattern, image)) throw InvariantViolation("one_sided_eh: copy not induced");
      ctl.attempted(attempt + 1);
      return image;
    }
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("one_sided_eh: no induced copy within budget");
}

namespace {

struct Gf2m {
  int q, poly;
  int mul(int x, int y) const {
    int r = 0;
    while (y) {
      if (y & 1) r ^= x;
      y >>= 1;
      x <<= 1;
      if (x & q) x ^= poly;
    }
    return r;
  }
};

}  // namespace

Hk construct_hk(int k) {
  if (k < 2) throw PreconditionFailed("construct_hk: k must be at least 2");
  int q = 1;
  while (q < k) q <<= 1;
  // irreducible polynomials of degree 1..10
  static const int polys[] = {0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0b100011101,
                              0b1000010001, 0b10000001001};
  int m = 0;
  while ((1 << m) < q) ++m;
  if (m > 10) throw PreconditionFailed("construct_hk: k too large");
  Gf2m f{q, polys[m]};
  int qq = q * q;
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < q; ++x)
    for (int slope = 0; slope < q; ++slope)
      for (int c = 0; c < q; ++c) {
        int y = f.mul(slope, x) ^ c;
        e.emplace_back(x * q + y, qq + slope * q + c);
      }
  Hk h;
  h.graph = Graph::from_edges(2 * qq, e);
  h.q = q;
  for (int v = 0; v < qq; ++v) h.sides.a.push_back(v);
  for (int v = qq; v < 2 * qq; ++v) h.sides.b.push_back(v);
  const Graph& g = h.graph;
  if (g.min_degree() != q || g.max_degree() != q) throw InvariantViolation("construct_hk: not q-regular");
  if (enumerate_c4_rooted(g) != 0 || count_c4(g) != 0) throw InvariantViolation("construct_hk: contains a C4");
  if (g.n() > 8 * k * k) throw InvariantViolation("construct_hk: too many vertices");
  std::set<VertexSet> nb;
  for (int b : h.sides.b) nb.insert(g.neighbors(b));
  if (static_cast<int>(nb.size()) != qq) throw InvariantViolation("construct_hk: repeated B-side neighbourhood");
  return h;
}

OneSubdivision clean_unbalanced(const Graph& g, const CleanInput& in, double d, int d_cap, int k, const Ctl& ctl,
                                const CleanParams& prm) {
  VertexSet A = sorted_unique(in.a), B = sorted_unique(in.b);
  if (d <= 0 || d_cap < 1 || k < 1) throw PreconditionFailed("clean_unbalanced: need d > 0, D >= 1, k >= 1");
  if (intersection_size(A, B) != 0) throw PreconditionFailed("clean_unbalanced: A and B overlap");
  std::vector<std::string> bad;
  if (!(A.size() > std::pow(d, d_cap + 1) * B.size())) bad.push_back("|A| <= d^{D+1}|B|");
  if (!is_independent(g, A)) bad.push_back("G[A] has edges");
  for (int x : A)
    if (g.degree(x) > 100 * d) {
      bad.push_back("some x in A has degree above 100d");
      break;
    }
  if (!bad.empty()) {
    if (ctl.strict) throw PreconditionFailed("clean_unbalanced: " + bad[0]);
    for (auto& b : bad) ctl.note("clean_unbalanced: " + b);
  }
  // I_x: independent D-subsets of N(x) ∩ B with |I_x ∩ N(x')| < k for x' != x (full scan)
  std::vector<int> pos_a(g.n(), -1);
  for (size_t i = 0; i < A.size(); ++i) pos_a[A[i]] = static_cast<int>(i);
  for (int x : A) {
    auto it = in.i_map.find(x);
    if (it == in.i_map.end()) throw PreconditionFailed("clean_unbalanced: missing I_x");
    VertexSet I = sorted_unique(it->second);
    if (static_cast<int>(I.size()) != d_cap || static_cast<int>(it->second.size()) != d_cap)
      throw PreconditionFailed("clean_unbalanced: I_x is not a D-set");
    if (intersection_size(I, set_intersection(g.neighbors(x), B)) != d_cap)
      throw PreconditionFailed("clean_unbalanced: I_x not inside N(x) ∩ B");
    if (!is_independent(g, I)) throw PreconditionFailed("clean_unbalanced: I_x not independent");
    std::map<int, int> cnt;
    for (int y : I)
      for (int z : g.neighbors(y))
        if (z != x && pos_a[z] >= 0) ++cnt[z];
    for (auto& [z, c] : cnt)
      if (c >= k) throw PreconditionFailed("clean_unbalanced: |I_x ∩ N(x')| >= k for some x'");
  }

  // orient G[B] along the peeling order: out-neighbours are those peeled later
  auto gb = induced(g, B);
  auto ord = degeneracy(gb.graph);
  if (ord.degeneracy > d) ctl.note("clean_unbalanced: G[B] not d-degenerate");
  std::vector<int> rank(gb.graph.n());
  for (int i = 0; i < gb.graph.n(); ++i) rank[ord.order[i]] = i;
  std::vector<int> host_rank(g.n(), -1);
  for (int i = 0; i < gb.graph.n(); ++i) host_rank[gb.to_host[i]] = rank[i];
  auto out_nbrs = [&](int y) {
    VertexSet o;
    int ly = static_cast<int>(std::lower_bound(B.begin(), B.end(), y) - B.begin());
    for (int w : gb.graph.neighbors(ly))
      if (rank[w] > rank[ly]) o.push_back(gb.to_host[w]);
    return sorted_unique(o);
  };

  double p = prm.p > 0 ? prm.p : 1.0 / (1000.0 * d_cap * d);
  double target = prm.target > 0 ? prm.target : d;
  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "clean-unbalanced", attempt));
    VertexSet b1;
    for (int y : B)
      if (coin(rng, p)) b1.push_back(y);
    if (b1.empty()) continue;
    VertexSet a1;
    for (int x : A)
      if (set_intersection(g.neighbors(x), b1) == sorted_unique(in.i_map.at(x))) a1.push_back(x);
    if (a1.empty()) continue;
    VertexSet b2;
    for (int y : b1)
      if (intersection_size(out_nbrs(y), b1) == 0) b2.push_back(y);
    VertexSet a2, used;
    for (int x : a1) {
      VertexSet nb = set_intersection(g.neighbors(x), b1);
      if (intersection_size(nb, b2) != static_cast<int>(nb.size())) continue;
      a2.push_back(x);
    }
    if (a2.empty()) continue;
    if (!is_independent(g, a2)) {
      auto ga = induced(g, a2);
      a2 = ga.lift(greedy_independent_set(ga.graph));
    }
    for (int x : a2) used = set_union(used, set_intersection(g.neighbors(x), b2));
    if (static_cast<double>(d_cap) * a2.size() < target * used.size()) continue;
    OneSubdivision out{sorted_unique(a2), used, d_cap};
    auto v = verify_witness(g, to_witness(out));
    if (!v.accepted) throw InvariantViolation("clean_unbalanced: " + v.clause);
    // pairwise codegrees below k, counted through the b-side
    std::map<std::pair<int, int>, int> co;
    for (int y : used) {
      VertexSet ys = set_intersection(g.neighbors(y), out.a);
      for (size_t i = 0; i < ys.size(); ++i)
        for (size_t j = i + 1; j < ys.size(); ++j)
          if (++co[{ys[i], ys[j]}] >= k) throw InvariantViolation("clean_unbalanced: codegree reached k");
    }
    ctl.attempted(attempt + 1);
    return out;
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("clean_unbalanced: no sample reached the target");
}

const char* escape_name(Escape::Kind k) {
  switch (k) {
    case Escape::Subdivision: return "subdivision";
    case Escape::Dense: return "dense";
    case Escape::C4Free: return "c4free";
  }
  return "?";
}

bool verify_escape(const Graph& g, const Escape& e, double eps, double c4free_target) {
  if (e.kind == Escape::Subdivision) return verify_witness(g, e.witness).accepted;
  VertexSet v = sorted_unique(e.vertices);
  if (v.size() < 2 || v.size() != e.vertices.size() || v.back() >= g.n() || v.front() < 0) return false;
  auto sub = induced(g, v);
  double avg = to_double(average_degree(sub.graph));
  if (e.kind == Escape::Dense) return avg >= std::pow(static_cast<double>(v.size()), 1 - 5 * eps);
  return count_c4(sub.graph) == 0 && avg > 0 && avg >= c4free_target;
}

IxOutcome find_ix(const Graph& g, int x, const VertexSet& a_prime_in, const VertexSet& b, double d, int d_cap, int k,
                  int h, double eps, const Ctl& ctl, double c4free_target) {
  VertexSet a_prime = sorted_unique(a_prime_in);
  if (!contains(a_prime, x)) throw PreconditionFailed("find_ix: x not in A'");
  IxOutcome out;
  VertexSet nx = set_intersection(g.neighbors(x), sorted_unique(b));
  if (static_cast<int>(nx.size()) < d_cap) throw PreconditionFailed("find_ix: |N_B(x)| < D");

  // J: an independent subset of N(x), or one of the density escapes
  auto local = induced(g, nx);
  auto iod = independent_or_dense(local.graph, eps, ctl.child("find-ix-iod", x), c4free_target);
  if (iod.kind != DenseOrC4::IndependentSet) {
    Escape e;
    e.kind = iod.kind == DenseOrC4::LocallyDense ? Escape::Dense : Escape::C4Free;
    e.vertices = local.lift(iod.vertices);
    if (!verify_escape(g, e, eps, c4free_target)) throw InvariantViolation("find_ix: escape failed verification");
    out.escape = e;
    return out;
  }
  VertexSet J = local.lift(iod.vertices);
  if (static_cast<int>(J.size()) < d_cap) throw PreconditionFailed("find_ix: independent set smaller than D");

  // heavy correlators S
  double heavy = std::pow(static_cast<double>(J.size()), 1 - eps);
  VertexSet S, rest;
  for (int z : a_prime) {
    if (z == x) continue;
    (degree_into(g, z, J) >= heavy ? S : rest).push_back(z);
  }
  if (S.size() >= J.size()) {
    Escape e;
    e.kind = Escape::Dense;
    e.vertices = set_union(J, VertexSet(S.begin(), S.begin() + J.size()));
    if (verify_escape(g, e, eps, c4free_target)) {
      out.escape = e;
      return out;
    }
    if (ctl.strict) throw PreconditionFailed("find_ix: |S| >= |J| but G[J ∪ S] misses the density bound (|J| too small)");
    ctl.note("find_ix: |S| >= |J| without a density escape");
  }

  // F = traces of the remaining x' on J
  SetFamily fam;
  fam.n = static_cast<int>(J.size());
  std::map<VertexSet, int> owner;
  for (int z : rest) {
    VertexSet t;
    for (int y : set_intersection(g.neighbors(z), J))
      t.push_back(static_cast<int>(std::lower_bound(J.begin(), J.end(), y) - J.begin()));
    if (static_cast<int>(t.size()) < k) continue;
    if (owner.emplace(t, z).second) fam.members.push_back(t);
  }
  Ctl sc = ctl.child("find-ix-shatter", x);
  auto so = shatter_or_avoid(fam, k, h, d_cap, sc);
  if (so.kind == ShatterOutcome::Avoider) {
    VertexSet I;
    for (int p : so.set) I.push_back(J[p]);
    int corr = 0;
    for (int z : a_prime)
      if (z != x && intersection_size(g.neighbors(z), I) >= k) ++corr;
    if (corr >= d) throw BudgetExhausted("find_ix: I_x has too many heavy correlators");
    out.ix = I;
    out.correlators = corr;
    return out;
  }
  // shattered h-set: the induced 1-subdivision of K_h^{(k)}
  VertexSet R;
  for (int p : so.set) R.push_back(J[p]);
  OneSubdivision sub;
  sub.b = R;
  sub.uniformity = k;
  for_each_subset(so.set, k, [&](const std::vector<int>& e) {
    for (auto& f : fam.members)
      if (set_intersection(f, so.set) == e) {
        sub.a.push_back(owner.at(f));
        break;
      }
    return true;
  });
  sub.a = sorted_unique(sub.a);
  Escape e;
  e.kind = Escape::Subdivision;
  e.witness = to_witness(sub);
  if (static_cast<long long>(sub.a.size()) != binom_ll(h, k) || !verify_escape(g, e, eps, c4free_target))
    throw PreconditionFailed("find_ix: shattered set does not give an induced 1-subdivision (A' or J not independent)");
  out.escape = e;
  return out;
}

MessyOutcome messy_unbalanced(const Graph& g, const VertexSet& a0_in, const VertexSet& b_in, double d, int h, int k,
                              int d_cap, double eps, const Ctl& ctl, double c4free_target) {
  VertexSet a0 = sorted_unique(a0_in), b = sorted_unique(b_in);
  if (d <= 0) throw PreconditionFailed("messy_unbalanced: d must be positive");
  std::vector<std::string> bad;
  if (!(a0.size() > 100 * std::pow(d, d_cap + 3) * b.size())) bad.push_back("|A0| <= 100 d^{D+3} |B|");
  if (!(edges_between(g, a0, b) >= g.n() * d / 10)) bad.push_back("e(A0, B) < nd/10");
  if (!bad.empty()) {
    if (ctl.strict) throw PreconditionFailed("messy_unbalanced: " + bad[0]);
    for (auto& s : bad) ctl.note("messy_unbalanced: " + s);
  }
  VertexSet a1 = make_regular(g, {a0, b}, d, ctl);
  MessyOutcome out;
  std::map<int, VertexSet> ix;
  for (int x : a1) {
    auto r = find_ix(g, x, a1, b, d, d_cap, k, h, eps, ctl.child("find-ix", x), c4free_target);
    if (r.escape) {
      out.escape = r.escape;
      return out;
    }
    ix[x] = *r.ix;
  }
  // conflict graph: x ~ x' when either I-set meets the other's neighbourhood in >= k vertices
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < a1.size(); ++i) pos[a1[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> conflict;
  for (int x : a1) {
    std::map<int, int> cnt;
    for (int y : ix[x])
      for (int z : g.neighbors(y))
        if (z != x && pos[z] >= 0) ++cnt[z];
    for (auto& [z, c] : cnt)
      if (c >= k) conflict.emplace_back(std::min(pos[x], pos[z]), std::max(pos[x], pos[z]));
  }
  Graph aux = Graph::from_edges(static_cast<int>(a1.size()), conflict);
  VertexSet keep = greedy_independent_set(aux);
  if (keep.size() * 3 * d < a1.size()) ctl.note("messy_unbalanced: |A| < |A'|/(3d)");
  CleanInput ci;
  for (int i : keep) {
    ci.a.push_back(a1[i]);
    ci.i_map[a1[i]] = ix[a1[i]];
  }
  ci.a = sorted_unique(ci.a);
  ci.b = b;
  out.clean = ci;
  return out;
}

}  // namespace isub
