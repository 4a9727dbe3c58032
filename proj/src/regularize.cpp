#include "isub/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace isub {

AlmostRegularCertificate make_certificate(const Graph& g, const VertexSet& s) {
  auto sub = induced(g, s);
  AlmostRegularCertificate c;
  c.subgraph = sub.to_host;
  c.avg = average_degree(sub.graph);
  c.max_deg = sub.graph.max_degree();
  c.slack = c.avg == Rational(0) ? Rational(0) : Rational(c.max_deg) / c.avg;
  return c;
}

bool certificate_consistent(const Graph& g, const AlmostRegularCertificate& c) {
  if (c.subgraph != sorted_unique(c.subgraph)) return false;
  auto r = make_certificate(g, c.subgraph);
  return r.avg == c.avg && r.max_deg == c.max_deg && r.slack == c.slack && c.avg > Rational(0) && Rational(c.max_deg) >= c.avg;
}

bool is_almost_biregular(const Graph& g, const BipartitePartition& part, double l) {
  long long e = edges_between(g, part.a, part.b);
  if (e == 0) return true;
  for (int a : part.a)
    if (degree_into(g, a, part.b) > l * e / part.a.size()) return false;
  for (int b : part.b)
    if (degree_into(g, b, part.a) > l * e / part.b.size()) return false;
  return true;
}

BipartitePartition biregular_to_regular(const Graph& g, const BipartitePartition& part, double l, const Ctl& ctl) {
  VertexSet A = sorted_unique(part.a), B = sorted_unique(part.b);
  if (intersection_size(A, B) != 0) throw PreconditionFailed("biregular_to_regular: sides overlap");
  long long E = edges_between(g, A, B);
  if (E == 0) return {A, B};
  if (!is_almost_biregular(g, {A, B}, l)) {
    if (ctl.strict) throw PreconditionFailed("biregular_to_regular: not L-almost-biregular");
    ctl.note("biregular_to_regular: input not L-almost-biregular");
  }
  bool swapped = A.size() > B.size();
  if (swapped) std::swap(A, B);
  double p = static_cast<double>(A.size()) / B.size();
  std::vector<int> degA(A.size());
  for (size_t i = 0; i < A.size(); ++i) degA[i] = degree_into(g, A[i], B);
  long long na = A.size(), nb = B.size();

  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "biregular", attempt));
    VertexSet b1;
    for (int b : B)
      if (coin(rng, p)) b1.push_back(b);
    VertexSet a1;
    for (size_t i = 0; i < A.size(); ++i)
      if (degree_into(g, A[i], b1) <= 1 + 2 * p * (degA[i] - 1)) a1.push_back(A[i]);
    long long e1 = edges_between(g, a1, b1);
    long long n1 = static_cast<long long>(a1.size() + b1.size());
    if (e1 == 0) continue;
    int delta = 0;
    for (int a : a1) delta = std::max(delta, degree_into(g, a, b1));
    for (int b : b1) delta = std::max(delta, degree_into(g, b, a1));
    // d' >= d/4  <=>  2e1/n1 >= 2E/(4(na+nb));  Δ' <= 24 l d'
    bool ok1 = static_cast<__int128>(4) * e1 * (na + nb) >= static_cast<__int128>(E) * n1;
    bool ok2 = static_cast<double>(delta) * n1 <= 24.0 * l * 2.0 * e1;
    if (ok1 && ok2) {
      ctl.attempted(attempt + 1);
      if (swapped) return {b1, a1};
      return {a1, b1};
    }
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("biregular_to_regular: no verified sample within budget");
}

namespace {

// One pass of the bootstrap construction inside h (local ids). Returns the candidate vertex sets to test.
std::vector<VertexSet> bootstrap_candidates(const Graph& h, double d, double logL, const VertexSet& vi, Rng& rng,
                                            const Ctl& ctl, int attempt) {
  int n = h.n();
  std::vector<char> inF(n, 0);
  for (int v : vi)
    if (coin(rng, 0.5)) inF[v] = 1;
  std::vector<char> inF1(n, 0);
  for (int v : vi) {
    if (!inF[v]) continue;
    int out = 0;
    for (int w : h.neighbors(v))
      if (!inF[w]) ++out;
    if (2 * out >= h.degree(v)) inF1[v] = 1;
  }
  VertexSet f2;
  std::vector<char> inF2(n, 0);
  for (int v : vi) {
    if (!inF1[v]) continue;
    int inside = 0;
    for (int w : h.neighbors(v))
      if (inF1[w]) ++inside;
    if (inside <= 4 * d) {
      f2.push_back(v);
      inF2[v] = 1;
    }
  }
  if (f2.empty()) return {};
  int ell = static_cast<int>(std::floor(logL + std::log2(logL))) + 7;
  double unit = d / (100.0 * logL);
  std::vector<VertexSet> U(ell + 1);
  std::vector<long long> eU(ell + 1, 0);
  for (int x = 0; x < n; ++x) {
    if (inF2[x]) continue;
    int dx = 0;
    for (int w : h.neighbors(x))
      if (inF2[w]) ++dx;
    if (dx == 0) continue;
    // unit 2^{j-1} <= dx < unit 2^j
    for (int j = 0; j <= ell; ++j)
      if (dx >= unit * std::ldexp(1.0, j - 1) && dx < unit * std::ldexp(1.0, j)) {
        U[j].push_back(x);
        eU[j] += dx;
        break;
      }
  }
  int jbest = 0;
  for (int j = 1; j <= ell; ++j)
    if (eU[j] > eU[jbest]) jbest = j;
  if (eU[jbest] == 0) return {};
  const VertexSet& uj = U[jbest];
  VertexSet uj1;
  for (int x : uj)
    if (intersection_size(h.neighbors(x), uj) <= 4 * d) uj1.push_back(x);
  if (uj1.empty()) return {};
  std::vector<VertexSet> out;
  double M = 1200.0 * logL;
  Ctl sub = ctl.child("bootstrap-biregular", attempt);
  sub.strict = false;
  sub.budget = std::min(ctl.budget, 20);
  try {
    auto p = biregular_to_regular(h, {f2, uj1}, M, sub);
    out.push_back(set_union(p.a, p.b));
  } catch (const BudgetExhausted&) {
  }
  out.push_back(set_union(f2, uj1));
  return out;
}

}  // namespace

AlmostRegularCertificate bootstrap_almost_regular(const Graph& g, double d, double l, const Ctl& ctl, double c1,
                                                  double c2) {
  if (d <= 0) throw PreconditionFailed("bootstrap: d must be positive");
  if (l < 2) throw PreconditionFailed("bootstrap: l must be at least 2");
  bool pre_ok = to_double(average_degree(g)) >= d && g.max_degree() <= l * d;
  if (!pre_ok) {
    if (ctl.strict) throw PreconditionFailed("bootstrap: need d(g) >= d and max degree <= l d");
    ctl.note("bootstrap: degree preconditions not met");
  }
  double lc = std::max(l, 256.0);
  double logL = std::log2(lc);
  double lower = d / (c2 * logL * logL);
  double slack_cap = c1 * logL * logL;

  auto h0 = densest_prefix(g);
  const Graph& h = h0.graph;
  double d0 = std::max(d, to_double(average_degree(h)));
  int nb = static_cast<int>(std::floor(logL)) + 1;
  // heaviest degree bucket 2^{i-2} d0 <= deg < 2^{i-1} d0; ties to the lowest index
  std::vector<VertexSet> V(nb + 1);
  std::vector<long long> sum(nb + 1, 0);
  for (int v = 0; v < h.n(); ++v)
    for (int i = 1; i <= nb; ++i)
      if (h.degree(v) >= std::ldexp(d0, i - 2) && h.degree(v) < std::ldexp(d0, i - 1)) {
        V[i].push_back(v);
        sum[i] += h.degree(v);
        break;
      }
  int ib = 1;
  for (int i = 2; i <= nb; ++i)
    if (sum[i] > sum[ib]) ib = i;

  auto accept = [&](const VertexSet& local) -> std::optional<AlmostRegularCertificate> {
    if (local.empty()) return std::nullopt;
    auto c = make_certificate(g, h0.lift(local));
    double avg = to_double(c.avg);
    if (avg <= 0 || avg < lower) return std::nullopt;
    if (c.max_deg > slack_cap * avg) return std::nullopt;
    return c;
  };

  // the prefix itself is the cheapest candidate
  if (auto c = accept(all_vertices(h.n()))) {
    ctl.attempted(1);
    return *c;
  }
  for (int attempt = 0; attempt < ctl.budget; ++attempt) {
    Rng rng(mix_seed(ctl.seed, "bootstrap", attempt));
    for (auto& cand : bootstrap_candidates(h, d0, logL, V[ib], rng, ctl, attempt))
      if (auto c = accept(cand)) {
        ctl.attempted(attempt + 1);
        return *c;
      }
  }
  ctl.attempted(ctl.budget);
  throw BudgetExhausted("bootstrap: no certified subgraph within budget");
}

DichotomyOutcome dichotomy(const Graph& g, double d, double l, const Ctl& ctl, double c1, double c2) {
  int n = g.n();
  if (d < 16 || l < 16 || to_double(average_degree(g)) < d || degeneracy(g).degeneracy > d) {
    if (ctl.strict) throw PreconditionFailed("dichotomy: need d(g) >= d >= 16, l >= 16, g d-degenerate");
    ctl.note("dichotomy: preconditions relaxed");
  }
  if (d <= 0) throw PreconditionFailed("dichotomy: d must be positive");
  VertexSet heavy, light;
  for (int v = 0; v < n; ++v) (g.degree(v) >= l * d ? heavy : light).push_back(v);
  long long across = edges_between(g, light, heavy);
  if (!heavy.empty() && across >= n * d / 8 && light.size() >= l * heavy.size() / 2) {
    DichotomyOutcome o;
    o.kind = DichotomyOutcome::Unbalanced;
    o.partition = {light, heavy};
    o.edges_across = across;
    return o;
  }
  auto sub = induced(g, light);
  Ctl c = ctl;
  c.strict = false;
  auto cert = bootstrap_almost_regular(sub.graph, d / 2, 2 * l, c, c1, c2);
  cert = make_certificate(g, sub.lift(cert.subgraph));
  DichotomyOutcome o;
  o.kind = DichotomyOutcome::AlmostRegular;
  o.cert = cert;
  return o;
}

}  // namespace isub
