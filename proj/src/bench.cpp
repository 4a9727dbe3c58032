#include "isub/bench.hpp"

#include "isub/detectors.hpp"
#include "isub/generators.hpp"
#include "isub/oracles.hpp"
#include "isub/pipeline.hpp"
#include "isub/regularize.hpp"
#include "isub/shattering.hpp"
#include "isub/sparsify.hpp"
#include "isub/subdivision.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace isub::bench {

std::vector<ParityRow> oracle_parity(uint64_t seed, int graphs) {
  std::map<std::string, ParityRow> rows;
  auto tally = [&](const std::string& name, bool ok) {
    auto& r = rows[name];
    r.detector = name;
    ++r.cases;
    if (!ok) ++r.mismatches;
  };
  for (int i = 0; i < graphs; ++i) {
    double p = 0.1 * (1 + i % 9);
    Graph g = gen::gnp(12, p, mix_seed(seed, "parity", i));
    tally("count_c4", count_c4(g) == oracle_count_c4(g));
    VertexSet mc = max_clique(g);
    tally("max_clique", is_clique(g, mc) && mc.size() == oracle_max_clique(g).size());
    for (int s = 1; s <= 3; ++s) {
      auto f = find_kss(g, s);
      bool fast_ok = !f || verify_witness(g, Witness{WitnessKind::KssSubgraph, {}, f->left, f->right, {}, {}, {}, 0, 0})
                               .accepted;
      tally("find_kss", fast_ok && f.has_value() == oracle_find_kss(g, s).has_value());
    }
    for (auto [s, t] : {std::pair{1, 2}, {2, 2}, {2, 3}, {1, 4}}) {
      auto f = find_induced_kst(g, s, t);
      bool fast_ok = !f || verify_witness(g, Witness{WitnessKind::InducedKst, {}, f->left, f->right, {}, {}, {}, 0, 0})
                               .accepted;
      tally("find_induced_kst", fast_ok && f.has_value() == oracle_find_induced_kst(g, s, t).has_value());
    }
    VertexSet all = all_vertices(g.n());
    for (int s = 2; s <= 4; ++s)
      tally("count_independent_sets", count_independent_sets(g, s, all) == oracle_independent_sets(g, s, all));
  }
  std::vector<ParityRow> out;
  for (auto& [k, r] : rows) out.push_back(r);
  return out;
}

namespace {

void run_lemma(std::vector<LemmaRow>& out, const std::string& name, int runs,
               const std::function<void(int, const Ctl&)>& body) {
  LemmaRow row;
  row.lemma = name;
  long long att = 0;
  for (int i = 0; i < runs; ++i) {
    OpStats st;
    Ctl c;
    c.seed = mix_seed(0x5eed, name, i);
    c.budget = 200;
    c.strict = false;
    c.stats = &st;
    ++row.runs;
    try {
      body(i, c);
      ++row.successes;
      att += std::max(1, st.attempts);
    } catch (const Error&) {
    }
  }
  row.mean_attempts = row.successes ? static_cast<double>(att) / row.successes : 0;
  out.push_back(row);
}

}  // namespace

std::vector<LemmaRow> lemma_success_rates(uint64_t seed, int runs) {
  std::vector<LemmaRow> out;
  auto sd = [&](const char* tag, int i) { return mix_seed(seed, tag, i); };

  run_lemma(out, "biregular_to_regular", runs, [&](int i, const Ctl& c) {
    Rng rng(sd("bireg", i));
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < 60; ++a)
      for (int b = 60; b < 180; ++b)
        if (coin(rng, 0.1)) e.emplace_back(a, b);
    Graph g = Graph::from_edges(180, e);
    biregular_to_regular(g, {all_vertices(60), [] {
                               VertexSet b;
                               for (int v = 60; v < 180; ++v) b.push_back(v);
                               return b;
                             }()},
                         8, c);
  });
  run_lemma(out, "dichotomy", runs, [&](int i, const Ctl& c) {
    Graph g = gen::random_degenerate(200, 20, sd("dich", i));
    double d = to_double(average_degree(g));
    dichotomy(g, d, 16, c);
  });
  run_lemma(out, "delete_copies", runs, [&](int i, const Ctl& c) {
    Graph g = gen::gnp(100, 0.05, sd("del", i));
    DeletionParams prm;
    prm.d = to_double(average_degree(g));
    prm.check_eps = false;
    prm.target = 1;
    delete_copies(g, Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), prm, c);
  });
  run_lemma(out, "dense_or_c4free", runs, [&](int i, const Ctl& c) {
    Graph g = gen::gnp(80, 0.1, sd("doc", i));
    dense_or_c4free(g, to_double(average_degree(g)), 0.05, c, 1);
  });
  run_lemma(out, "too_dense", runs, [&](int, const Ctl& c) {
    DrcOptions opt;
    opt.tuple = 1;
    too_dense(gen::multipartite(5, 10), 2, 2, 6, c, opt);
  });
  run_lemma(out, "unbalanced_to_subdivision", runs, [&](int, const Ctl& c) {
    int h = 30;
    Graph g = gen::one_subdivision_of_clique(h);
    BipartitePartition part;
    for (int v = 0; v < g.n(); ++v) (v < h ? part.b : part.a).push_back(v);
    UnbalancedParams up;
    up.p = 0.2;
    unbalanced_to_subdivision(g, part, to_double(average_degree(g)), 2, 3, c, up);
  });
  run_lemma(out, "almost_regular_to_subdivision", runs, [&](int i, const Ctl& c) {
    almost_regular_to_subdivision(gen::incidence_plane(i % 2 ? 3 : 2), 2, 2, 3, c);
  });
  run_lemma(out, "shatter_or_avoid", runs, [&](int i, const Ctl& c) {
    Rng rng(sd("shat", i));
    SetFamily fam;
    fam.n = 10;
    for (int m = 0; m < 8; ++m) {
      VertexSet f;
      for (int v = 0; v < 10; ++v)
        if (coin(rng, 0.4)) f.push_back(v);
      fam.members.push_back(f);
    }
    auto o = shatter_or_avoid(fam, 2, 3, 3, c);
    if (!outcome_valid(fam, o, 3, 3)) throw InvariantViolation("shatter_or_avoid: invalid outcome");
  });
  run_lemma(out, "one_sided_eh", runs, [&](int i, const Ctl& c) {
    int h = 3;
    Graph pat = clique_one_subdivision(h);
    BipartitePartition sides;
    for (int v = 0; v < pat.n(); ++v) (v < h ? sides.a : sides.b).push_back(v);
    one_sided_eh(gen::gnp(60, 0.25, sd("ose", i)), pat, sides, 5, c);
  });
  run_lemma(out, "construct_hk", runs, [&](int i, const Ctl&) { construct_hk(2 + i % 15); });
  return out;
}

std::vector<double> default_sweep_grid() { return {0.02, 0.04, 0.06, 0.08, 0.10, 0.12, 0.15, 0.20, 0.30}; }

std::vector<SweepRow> tightness_sweep(uint64_t seed, const std::vector<int>& ns, const std::vector<double>& ps,
                                      int seeds_per_point, int s) {
  std::vector<SweepRow> rows;
  for (int n : ns)
    for (double p : ps) {
      SweepRow r;
      r.n = n;
      r.p = p;
      r.s = s;
      for (int i = 0; i < seeds_per_point; ++i) {
        // the graph seed ignores p, so instances are coupled across the grid
        Graph g = gen::gnp(n, p, mix_seed(seed, "sweep", static_cast<uint64_t>(n) * 100000 + i));
        ++r.seeds;
        if (find_kss(g, s)) ++r.kss_hits;
        auto dp = densest_prefix(g);
        double d = to_double(average_degree(dp.graph));
        if (d <= 0) continue;
        Ctl c;
        c.seed = mix_seed(seed, "sweep-dichotomy", i);
        c.budget = 50;
        c.strict = false;
        try {
          auto o = dichotomy(dp.graph, d, std::pow(d, 6), c);
          ++(o.kind == DichotomyOutcome::Unbalanced ? r.unbalanced : r.almost_regular);
        } catch (const Error&) {
        }
      }
      rows.push_back(r);
    }
  return rows;
}

std::pair<double, double> wilson_interval(int hits, int trials, double z) {
  if (trials == 0) return {0, 1};
  double n = trials, ph = hits / n, z2 = z * z;
  double centre = (ph + z2 / (2 * n)) / (1 + z2 / n);
  double half = z * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

bool sweep_monotone(const std::vector<SweepRow>& rows, std::string* detail) {
  bool ok = true;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    if (a.n != b.n || b.p <= a.p) continue;
    double fa = static_cast<double>(a.kss_hits) / a.seeds, fb = static_cast<double>(b.kss_hits) / b.seeds;
    if (fb >= fa) continue;
    auto ia = wilson_interval(a.kss_hits, a.seeds), ib = wilson_interval(b.kss_hits, b.seeds);
    if (ib.second >= ia.first) continue;  // overlapping intervals: within noise
    ok = false;
    if (detail) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "n=%d: frequency drops from %.3f (p=%.3g) to %.3f (p=%.3g)\n", a.n, fa, a.p, fb,
                    b.p);
      *detail += buf;
    }
  }
  return ok;
}

std::string parity_table(const std::vector<ParityRow>& rows) {
  std::string out = "detector                  cases  mismatches  status\n";
  char buf[160];
  for (auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-24s %6d  %10d  %s\n", r.detector.c_str(), r.cases, r.mismatches,
                  r.mismatches ? "FAIL" : "pass");
    out += buf;
  }
  return out;
}

std::string lemma_table(const std::vector<LemmaRow>& rows) {
  std::string out = "lemma                           runs  successes  mean_attempts\n";
  char buf[160];
  for (auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-30s %5d  %9d  %13.2f\n", r.lemma.c_str(), r.runs, r.successes, r.mean_attempts);
    out += buf;
  }
  return out;
}

std::string sweep_table(const std::vector<SweepRow>& rows) {
  std::string out = "   n      p  s  seeds  kss_freq  unbalanced  almost_regular\n";
  char buf[160];
  for (auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%4d  %5.3f  %d  %5d  %8.3f  %10d  %14d\n", r.n, r.p, r.s, r.seeds,
                  static_cast<double>(r.kss_hits) / std::max(1, r.seeds), r.unbalanced, r.almost_regular);
    out += buf;
  }
  return out;
}

std::string parity_csv(const std::vector<ParityRow>& rows) {
  std::string out = "detector,cases,mismatches\n";
  for (auto& r : rows) out += r.detector + "," + std::to_string(r.cases) + "," + std::to_string(r.mismatches) + "\n";
  return out;
}

std::string lemma_csv(const std::vector<LemmaRow>& rows) {
  std::string out = "lemma,runs,successes,mean_attempts\n";
  char buf[64];
  for (auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.4f", r.mean_attempts);
    out += r.lemma + "," + std::to_string(r.runs) + "," + std::to_string(r.successes) + "," + buf + "\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "n,p,s,seeds,kss_hits,kss_freq,unbalanced,almost_regular\n";
  char buf[200];
  for (auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.4g,%d,%d,%d,%.4f,%d,%d\n", r.n, r.p, r.s, r.seeds, r.kss_hits,
                  static_cast<double>(r.kss_hits) / std::max(1, r.seeds), r.unbalanced, r.almost_regular);
    out += buf;
  }
  return out;
}

}  // namespace isub::bench
