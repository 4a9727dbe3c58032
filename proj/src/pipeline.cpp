#include "isub/pipeline.hpp"

#include "isub/regularize.hpp"
#include "isub/shattering.hpp"
#include "isub/sparsify.hpp"
#include "isub/subdivision.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <type_traits>

namespace isub {

Graph clique_one_subdivision(int h) {
  Multihypergraph k;
  k.n = h;
  k.s = 2;
  for_each_subset(all_vertices(h), 2, [&](const std::vector<int>& e) {
    k.edges.push_back(e);
    return true;
  });
  return one_subdivision_graph(k);
}

namespace {

std::string fmt(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.6g", x);
  return b;
}

const char* error_kind(const Error& e) {
  if (dynamic_cast<const BudgetExhausted*>(&e)) return "BudgetExhausted";
  if (dynamic_cast<const PreconditionFailed*>(&e)) return "PreconditionFailed";
  if (dynamic_cast<const TooManyCopies*>(&e)) return "TooManyCopies";
  if (dynamic_cast<const NotFound*>(&e)) return "NotFound";
  if (dynamic_cast<const Infeasible*>(&e)) return "Infeasible";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "InvariantViolation";
  if (dynamic_cast<const OracleBudgetExceeded*>(&e)) return "OracleBudgetExceeded";
  return "Error";
}

// Induced subgraph of the input graph, with the map back to input ids (increasing).
struct View {
  Graph graph;
  std::vector<int> to_host;
};

View whole(const Graph& g) { return {g, all_vertices(g.n())}; }

View sub_view(const View& v, const VertexSet& local) {
  auto s = induced(v.graph, local);
  View out{s.graph, {}};
  for (int x : s.to_host) out.to_host.push_back(v.to_host[x]);
  return out;
}

View prefix_view(const View& v) {
  auto d = densest_prefix(v.graph);
  View out{d.graph, {}};
  for (int x : d.to_host) out.to_host.push_back(v.to_host[x]);
  return out;
}

Witness lift(const View& v, Witness w) {
  auto map = [&](std::vector<int>& xs) {
    for (int& x : xs) x = v.to_host[x];
  };
  map(w.vertices);
  map(w.left);
  map(w.right);
  map(w.branch);
  for (auto& p : w.paths) map(p);
  return w;
}

double avg(const Graph& g) { return to_double(average_degree(g)); }

struct Run {
  const Graph& host;
  RunConfig cfg;
  RunTrace trace;
  std::string reason;
  uint64_t counter = 0;

  Run(const Graph& g, const RunConfig& c) : host(g), cfg(c) {}

  Ctl ctl(const std::string& tag) {
    Ctl c;
    c.seed = mix_seed(cfg.seed, tag, counter++);
    c.budget = cfg.retry_budget;
    c.strict = cfg.strict;
    return c;
  }
  void label(const std::string& outcome) { trace.entries.back().outcome = outcome; }
  void branch(const std::string& name) { trace.add("branch", name, 0, "taken"); }
};

// Runs one lemma call, records (op, params, attempts, outcome) and converts library errors into nullopt.
template <class F>
auto step(Run& run, const std::string& op, const std::string& params, F&& f)
    -> std::optional<std::invoke_result_t<F, const Ctl&>> {
  OpStats st;
  Ctl c = run.ctl(op);
  c.stats = &st;
  try {
    auto r = f(static_cast<const Ctl&>(c));
    run.trace.add(op, params, st.attempts, "ok");
    return r;
  } catch (const Error& e) {
    run.trace.add(op, params, st.attempts, error_kind(e));
    run.reason = op + ": " + e.what();
    return std::nullopt;
  }
}

DriverResult conclude(Run& run, std::optional<Witness> w) {
  DriverResult r;
  if (w) {
    auto v = verify_witness(run.host, *w, run.cfg);
    if (v.accepted) {
      run.trace.add("verify", kind_name(w->kind), 0, "accepted");
      r.witness = std::move(w);
    } else {
      run.trace.add("verify", kind_name(w->kind), 0, "rejected:" + v.clause);
      run.reason = "witness rejected: " + v.clause;
    }
  }
  r.trace = run.trace;
  if (!r.witness) r.failure_reason = run.reason.empty() ? "no outcome" : run.reason;
  return r;
}

Witness clique_witness(VertexSet c) {
  Witness w;
  w.kind = WitnessKind::Clique;
  w.vertices = sorted_unique(c);
  return w;
}

Witness biclique_witness(const Biclique& b, WitnessKind kind) {
  Witness w;
  w.kind = kind;
  w.left = sorted_unique(b.left);
  w.right = sorted_unique(b.right);
  return w;
}

Witness c4free_witness(const Graph& g, VertexSet vs) {
  Witness w;
  w.kind = WitnessKind::C4FreeDense;
  w.vertices = sorted_unique(vs);
  w.claimed_degree = average_degree(induced(g, w.vertices).graph);
  return w;
}

// image of clique_one_subdivision(h) -> balanced subdivision witness with paths of length 2
Witness subdivision_from_image(int h, const std::vector<int>& image) {
  Witness w;
  w.kind = WitnessKind::InducedBalancedSubdivision;
  w.path_length = 2;
  w.branch.assign(image.begin(), image.begin() + h);
  int e = 0;
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j, ++e) w.paths.push_back({image[i], image[h + e], image[j]});
  return w;
}

// One-subdivision of K_h (uniformity 2, complete) -> balanced subdivision witness
std::optional<Witness> subdivision_from_one(const Graph& g, const Witness& one) {
  if (one.uniformity != 2) return std::nullopt;
  VertexSet b = sorted_unique(one.right);
  std::map<std::pair<int, int>, int> mid;
  for (int x : one.left) {
    VertexSet nb = set_intersection(g.neighbors(x), b);
    if (nb.size() == 2) mid[{nb[0], nb[1]}] = x;
  }
  Witness w;
  w.kind = WitnessKind::InducedBalancedSubdivision;
  w.path_length = 2;
  w.branch = b;
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) {
      auto it = mid.find({b[i], b[j]});
      if (it == mid.end()) return std::nullopt;
      w.paths.push_back({b[i], it->second, b[j]});
    }
  return w;
}

std::optional<Witness> via_subdivision(Run& run, const View& v, const OneSubdivision& w, int s, int t, int h_target) {
  if (auto heavy = find_heavy_multiplicity(v.graph, w, t)) {
    run.trace.add("heavy_multiplicity", "t=" + std::to_string(t), 0, "induced-kst");
    return lift(v, *heavy);
  }
  auto r = step(run, "subdivision_reduction", "s=" + std::to_string(s) + ",h=" + std::to_string(h_target),
                [&](const Ctl& c) {
                  return subdivision_reduction(v.graph, w, s, t, h_target, c, run.cfg.search_nodes);
                });
  if (!r) return std::nullopt;
  return lift(v, *r);
}

// ---------------------------------------------------------------- base case

std::optional<Witness> base_case_route(Run& run, const View& v, int k, int h_target) {
  if (count_c4(v.graph) > 0) {
    run.trace.add("c4_check", "", 0, "rejected");
    run.reason = "precondition: input contains a C4";
    return std::nullopt;
  }
  if (k >= 1 && k <= 3) {
    VertexSet mc = max_clique(v.graph);
    if (static_cast<int>(mc.size()) >= k) {
      run.trace.add("clique_check", "k=" + std::to_string(k), 0, "clique");
      return lift(v, clique_witness(VertexSet(mc.begin(), mc.begin() + k)));
    }
  }
  View p = prefix_view(v);
  double d = avg(p.graph);
  run.trace.add("densest_prefix", "n=" + std::to_string(p.graph.n()) + ",d=" + fmt(d), 0, "ok");
  if (d <= 0) {
    run.reason = "no edges";
    return std::nullopt;
  }
  double L = run.cfg.L_base > 0 ? run.cfg.L_base : 80 * std::pow(d, 4);
  auto dich = step(run, "dichotomy", "d=" + fmt(d) + ",L=" + fmt(L),
                   [&](const Ctl& c) { return dichotomy(p.graph, d, L, c, run.cfg.c1, run.cfg.c2); });
  if (!dich) return std::nullopt;
  if (dich->kind == DichotomyOutcome::Unbalanced) {
    run.label("unbalanced");
    run.branch("unbalanced");
    UnbalancedParams up;
    up.p = run.cfg.unbalanced_p;
    auto w = step(run, "unbalanced_to_subdivision", "s=2,d=" + fmt(d), [&](const Ctl& c) {
      return unbalanced_to_subdivision(p.graph, dich->partition, d, 2, std::max(k, 3), c, up);
    });
    if (!w) return std::nullopt;
    return via_subdivision(run, p, *w, 2, 2, h_target);
  }
  run.label("almost-regular");
  run.branch("almost-regular");
  View c = sub_view(p, dich->cert.subgraph);
  AlmostRegularParams ap;
  ap.cleanup_p = run.cfg.cleanup_p;
  ap.extraction_p = run.cfg.extraction_p;
  ap.target = run.cfg.subdivision_target;
  auto w = step(run, "almost_regular_to_subdivision", "s=2,d=" + fmt(avg(c.graph)), [&](const Ctl& cc) {
    return almost_regular_to_subdivision(c.graph, 2, 2, std::max(k, 3), cc, ap);
  });
  if (!w) return std::nullopt;
  return via_subdivision(run, c, *w, 2, 2, h_target);
}

// ---------------------------------------------------------------- main

std::optional<Witness> fallback_clique(Run& run, const View& v, int k) {
  VertexSet mc = max_clique(v.graph);
  bool hit = static_cast<int>(mc.size()) >= k;
  run.trace.add("fallback_clique", "k=" + std::to_string(k), 0, hit ? "clique" : "none");
  if (!hit) return std::nullopt;
  return lift(v, clique_witness(VertexSet(mc.begin(), mc.begin() + k)));
}

std::optional<Witness> fallback_kst(Run& run, const View& v, int s, int t) {
  auto r = step(run, "fallback_kst", "s=" + std::to_string(s) + ",t=" + std::to_string(t),
                [&](const Ctl&) { return find_induced_kst(v.graph, s, t, run.cfg.search_nodes); });
  if (!r || !*r) {
    if (r) run.label("none");
    return std::nullopt;
  }
  run.label("induced-kst");
  return lift(v, biclique_witness(**r, WitnessKind::InducedKst));
}

std::optional<Witness> fallback_kss(Run& run, const View& v, int s) {
  auto r = step(run, "fallback_kss", "s=" + std::to_string(s),
                [&](const Ctl&) { return find_kss(v.graph, s, run.cfg.search_nodes); });
  if (!r || !*r) {
    if (r) run.label("none");
    return std::nullopt;
  }
  run.label("kss");
  return lift(v, biclique_witness(**r, WitnessKind::KssSubgraph));
}

std::optional<Witness> main_route(Run& run, const View& v, int s, int t, int k) {
  View p = prefix_view(v);
  double d = avg(p.graph);
  run.trace.add("densest_prefix", "n=" + std::to_string(p.graph.n()) + ",d=" + fmt(d), 0, "ok");
  if (d <= 0) {
    run.reason = "no edges";
    return std::nullopt;
  }
  double L = run.cfg.L_main > 0 ? run.cfg.L_main : std::pow(d, s + 3);
  double eps = run.cfg.eps_main > 0 ? run.cfg.eps_main : 1.0 / (500.0 * s);
  auto dich = step(run, "dichotomy", "d=" + fmt(d) + ",L=" + fmt(L),
                   [&](const Ctl& c) { return dichotomy(p.graph, d, L, c, run.cfg.c1, run.cfg.c2); });
  if (!dich) return std::nullopt;
  if (dich->kind == DichotomyOutcome::Unbalanced) {
    run.label("unbalanced");
    run.branch("unbalanced");
    UnbalancedParams up;
    up.p = run.cfg.unbalanced_p;
    auto w = step(run, "unbalanced_to_subdivision", "s=" + std::to_string(s) + ",d=" + fmt(d),
                  [&](const Ctl& c) { return unbalanced_to_subdivision(p.graph, dich->partition, d, s, k, c, up); });
    if (!w) return std::nullopt;
    return via_subdivision(run, p, *w, s, t, run.cfg.h_target);
  }
  run.label("almost-regular");
  run.branch("almost-regular");
  View c = sub_view(p, dich->cert.subgraph);
  double dstar = avg(c.graph);
  auto r = step(run, "dense_or_c4free", "d=" + fmt(dstar) + ",eps=" + fmt(eps),
                [&](const Ctl& cc) {
                  return dense_or_c4free(c.graph, dstar, eps, cc, run.cfg.c4free_target, run.cfg.deletion_p);
                });
  if (!r) return std::nullopt;
  View sub = sub_view(c, r->vertices);
  if (r->kind == DenseOrC4::LocallyDense) {
    run.label("dense");
    run.branch("dense-escape");
    DrcOptions opt;
    opt.tuple = run.cfg.drc_tuple;
    auto w = step(run, "too_dense", "s=" + std::to_string(s) + ",t=" + std::to_string(t) + ",k=" + std::to_string(k),
                  [&](const Ctl& cc) { return too_dense(sub.graph, s, t, k, cc, opt); });
    if (!w) return std::nullopt;
    run.label(w->kind == WitnessKind::Clique ? "clique" : "induced-kst");
    return lift(sub, *w);
  }
  run.label("c4free");
  run.branch("c4free-escape");
  return base_case_route(run, sub, k, run.cfg.h_target);
}

// ---------------------------------------------------------------- main1

std::optional<Witness> direct_pattern(Run& run, const View& v, const Graph& pattern, const std::string& op) {
  auto r = step(run, op, "n=" + std::to_string(pattern.n()),
                [&](const Ctl&) { return find_induced_copy(v.graph, pattern, run.cfg.search_nodes); });
  if (!r) return std::nullopt;
  if (!*r) {
    run.label("none");
    return std::nullopt;
  }
  run.label("found");
  std::vector<int> img = **r;
  for (int& x : img) x = v.to_host[x];
  Witness w;
  w.vertices = img;  // caller converts
  return w;
}

// exact search for an induced 1-subdivision of K_h, largest h first
std::optional<Witness> fallback_subdivision(Run& run, const View& v, int h_min, int h_max) {
  for (int h = h_max; h >= std::max(h_min, 3); --h) {
    if (auto img = direct_pattern(run, v, clique_one_subdivision(h), "fallback_subdivision"))
      return subdivision_from_image(h, img->vertices);
  }
  return std::nullopt;
}

std::optional<Witness> main1_dense(Run& run, const View& v, int h, int s) {
  if (auto w = fallback_kss(run, v, s)) return w;
  Graph pat = clique_one_subdivision(h);
  BipartitePartition sides;
  for (int i = 0; i < pat.n(); ++i) (i < h ? sides.a : sides.b).push_back(i);
  run.branch("one-sided-eh");
  auto img = step(run, "one_sided_eh", "h=" + std::to_string(h) + ",s=" + std::to_string(s),
                  [&](const Ctl& c) { return one_sided_eh(v.graph, pat, sides, s, c, run.cfg.search_nodes); });
  if (!img) return std::nullopt;
  std::vector<int> host_img = *img;
  for (int& x : host_img) x = v.to_host[x];
  return subdivision_from_image(h, host_img);
}

std::optional<Witness> main1_route(Run& run, const View& v, int h, int s) {
  View p = prefix_view(v);
  double d = avg(p.graph);
  run.trace.add("densest_prefix", "n=" + std::to_string(p.graph.n()) + ",d=" + fmt(d), 0, "ok");
  if (d <= 0) {
    run.reason = "no edges";
    return std::nullopt;
  }
  double L = run.cfg.L_main1 > 0 ? run.cfg.L_main1 : std::pow(d, 6);
  double eps = run.cfg.eps_main1 > 0 ? run.cfg.eps_main1 : 1.0 / (500.0 * h);
  auto dich = step(run, "dichotomy", "d=" + fmt(d) + ",L=" + fmt(L),
                   [&](const Ctl& c) { return dichotomy(p.graph, d, L, c, run.cfg.c1, run.cfg.c2); });
  if (!dich) return std::nullopt;
  auto c4free_escape = [&](const View& w) -> std::optional<Witness> {
    run.branch("c4free-escape");
    return base_case_route(run, w, 4, h);
  };
  if (dich->kind == DichotomyOutcome::Unbalanced) {
    run.label("unbalanced");
    run.branch("unbalanced");
    auto m = step(run, "messy_unbalanced", "h=" + std::to_string(h) + ",k=2,D=2", [&](const Ctl& c) {
      return messy_unbalanced(p.graph, dich->partition.a, dich->partition.b, d, h, 2, 2, eps, c,
                              run.cfg.c4free_target);
    });
    if (!m) return std::nullopt;
    if (m->escape) {
      const Escape& e = *m->escape;
      run.label(std::string("escape-") + escape_name(e.kind));
      if (e.kind == Escape::Subdivision) {
        auto w = subdivision_from_one(p.graph, e.witness);
        if (!w) return std::nullopt;
        return lift(p, *w);
      }
      View ev = sub_view(p, e.vertices);
      if (e.kind == Escape::Dense) {
        run.branch("dense-escape");
        return main1_dense(run, ev, h, s);
      }
      return c4free_escape(ev);
    }
    CleanParams cp;
    cp.p = run.cfg.clean_p;
    cp.target = run.cfg.subdivision_target;
    auto w = step(run, "clean_unbalanced", "D=2,k=2",
                  [&](const Ctl& c) { return clean_unbalanced(p.graph, *m->clean, d, 2, 2, c, cp); });
    if (!w) return std::nullopt;
    return via_subdivision(run, p, *w, 2, 2, h);
  }
  run.label("almost-regular");
  run.branch("almost-regular");
  View c = sub_view(p, dich->cert.subgraph);
  double dstar = avg(c.graph);
  auto r = step(run, "dense_or_c4free", "d=" + fmt(dstar) + ",eps=" + fmt(eps),
                [&](const Ctl& cc) {
                  return dense_or_c4free(c.graph, dstar, eps, cc, run.cfg.c4free_target, run.cfg.deletion_p);
                });
  if (!r) return std::nullopt;
  View sub = sub_view(c, r->vertices);
  if (r->kind == DenseOrC4::LocallyDense) {
    run.label("dense");
    run.branch("dense-escape");
    return main1_dense(run, sub, h, s);
  }
  run.label("c4free");
  return c4free_escape(sub);
}

// ---------------------------------------------------------------- main2

struct Main2 {
  Run& run;
  int k, s;
  Hk hk;
  double eps;

  std::optional<Witness> c4free_ok(const View& v) {
    if (count_c4(v.graph) != 0 || avg(v.graph) < k) return std::nullopt;
    return c4free_witness(run.host, v.to_host);
  }

  std::optional<Witness> dense(const View& v, int depth) {
    if (auto w = fallback_kss(run, v, s)) return w;
    run.branch("one-sided-eh");
    auto img = step(run, "one_sided_eh", "pattern=H_k,q=" + std::to_string(hk.q), [&](const Ctl& c) {
      return one_sided_eh(v.graph, hk.graph, hk.sides, s, c, run.cfg.search_nodes);
    });
    if (img) {
      VertexSet vs;
      for (int x : *img) vs.push_back(v.to_host[x]);
      return c4free_witness(run.host, vs);
    }
    return sparsify(v, depth + 1);
  }

  // stand-in for the degree-bounded step: repeated dense-or-C4-free passes, at most main2_depth_cap deep
  std::optional<Witness> sparsify(const View& v0, int depth) {
    View v = prefix_view(v0);
    if (auto w = c4free_ok(v)) {
      run.trace.add("c4free_check", "depth=" + std::to_string(depth), 0, "found");
      return w;
    }
    if (depth >= run.cfg.main2_depth_cap) {
      run.trace.add("sparsify", "depth=" + std::to_string(depth), 0, "depth-cap");
      run.reason = "main2: sparsification depth cap reached";
      return std::nullopt;
    }
    double d = avg(v.graph);
    if (d <= 0) return std::nullopt;
    auto r = step(run, "dense_or_c4free", "depth=" + std::to_string(depth) + ",d=" + fmt(d) + ",eps=" + fmt(eps),
                  [&](const Ctl& c) {
                    return dense_or_c4free(v.graph, d, eps, c, std::max<double>(run.cfg.c4free_target, k),
                                           run.cfg.deletion_p);
                  });
    if (!r) return std::nullopt;
    View sub = sub_view(v, r->vertices);
    if (r->kind == DenseOrC4::LocallyDense) {
      run.label("dense");
      run.branch("dense-escape");
      return dense(sub, depth);
    }
    run.label("c4free");
    run.branch("c4free-escape");
    if (auto w = c4free_ok(sub)) return w;
    run.reason = "main2: C4-free output below k";
    return std::nullopt;
  }

  std::optional<Witness> route(const View& v) {
    View p = prefix_view(v);
    double d = avg(p.graph);
    run.trace.add("densest_prefix", "n=" + std::to_string(p.graph.n()) + ",d=" + fmt(d), 0, "ok");
    if (auto w = c4free_ok(p)) {
      run.trace.add("c4free_check", "depth=0", 0, "found");
      return w;
    }
    if (d <= 0) {
      run.reason = "no edges";
      return std::nullopt;
    }
    int D = run.cfg.D;
    double L = run.cfg.L_main2 > 0 ? run.cfg.L_main2 : 4 * std::pow(d, D + 3);
    auto dich = step(run, "dichotomy", "d=" + fmt(d) + ",L=" + fmt(L),
                     [&](const Ctl& c) { return dichotomy(p.graph, d, L, c, run.cfg.c1, run.cfg.c2); });
    if (!dich) return std::nullopt;
    if (dich->kind == DichotomyOutcome::AlmostRegular) {
      run.label("almost-regular");
      run.branch("almost-regular");
      return sparsify(sub_view(p, dich->cert.subgraph), 0);
    }
    run.label("unbalanced");
    run.branch("unbalanced");
    int h = 8 * k * k;
    auto m = step(run, "messy_unbalanced",
                  "h=" + std::to_string(h) + ",k=" + std::to_string(2 * k) + ",D=" + std::to_string(D),
                  [&](const Ctl& c) {
                    return messy_unbalanced(p.graph, dich->partition.a, dich->partition.b, d, h, 2 * k, D, eps, c,
                                            run.cfg.c4free_target);
                  });
    if (!m) return std::nullopt;
    if (m->escape) {
      const Escape& e = *m->escape;
      run.label(std::string("escape-") + escape_name(e.kind));
      if (e.kind == Escape::Subdivision) {
        VertexSet vs = set_union(e.witness.left, e.witness.right);
        if (auto w = direct_pattern(run, sub_view(p, vs), hk.graph, "hk_in_escape"))
          return c4free_witness(run.host, w->vertices);
        return std::nullopt;
      }
      View ev = sub_view(p, e.vertices);
      if (e.kind == Escape::Dense) {
        run.branch("dense-escape");
        return dense(ev, 0);
      }
      run.branch("c4free-escape");
      if (auto w = c4free_ok(ev)) return w;
      return sparsify(ev, 1);
    }
    CleanParams cp;
    cp.p = run.cfg.clean_p;
    cp.target = run.cfg.subdivision_target;
    auto w = step(run, "clean_unbalanced", "D=" + std::to_string(D) + ",k=" + std::to_string(2 * k),
                  [&](const Ctl& c) { return clean_unbalanced(p.graph, *m->clean, d, D, 2 * k, c, cp); });
    if (!w) return std::nullopt;
    return sparsify(sub_view(p, set_union(w->a, w->b)), 0);
  }
};

// biclique K_{a,b} (not induced) by backtracking over the a-side; b-side is the common neighbourhood
std::optional<Biclique> find_kab(const Graph& g, int a, long long b, long long budget) {
  if (b > g.n()) return std::nullopt;
  std::vector<int> cand;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) >= b) cand.push_back(v);
  std::vector<int> cur;
  long long nodes = 0;
  std::optional<Biclique> out;
  auto rec = [&](auto&& self, size_t start, const VertexSet& common) -> bool {
    if (static_cast<int>(cur.size()) == a) {
      VertexSet right = set_difference(common, sorted_unique(cur));
      if (static_cast<long long>(right.size()) < b) return false;
      out = Biclique{sorted_unique(cur), VertexSet(right.begin(), right.begin() + b)};
      return true;
    }
    for (size_t i = start; i < cand.size(); ++i) {
      if (++nodes > budget) throw BudgetExhausted("find_kab: node budget exhausted");
      VertexSet c2 = cur.empty() ? g.neighbors(cand[i]) : set_intersection(common, g.neighbors(cand[i]));
      if (static_cast<long long>(c2.size()) < b) continue;
      cur.push_back(cand[i]);
      if (self(self, i + 1, c2)) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(rec, 0, {});
  return out;
}

}  // namespace

DriverResult base_case(const Graph& g, int k, const RunConfig& cfg) {
  Run run(g, cfg);
  View v = whole(g);
  auto w = base_case_route(run, v, k, cfg.h_target);
  if (!w && !run.trace.has("c4_check", "rejected"))
    w = fallback_subdivision(run, v, cfg.h_target, cfg.pattern_check_max_h);
  return conclude(run, w);
}

DriverResult main_driver(const Graph& g, int s, int t, int k, const RunConfig& cfg) {
  Run run(g, cfg);
  if (s > t || s < 1 || k < 1) {
    run.trace.add("precondition", "s<=t", 0, "rejected");
    run.reason = "precondition: need 1 <= s <= t and k >= 1";
    return conclude(run, std::nullopt);
  }
  View v = whole(g);
  auto w = main_route(run, v, s, t, k);
  if (!w) w = fallback_clique(run, v, k);
  if (!w) w = fallback_kst(run, v, s, t);
  if (!w) w = fallback_subdivision(run, v, cfg.h_target, cfg.pattern_check_max_h);
  return conclude(run, w);
}

DriverResult main1(const Graph& g, int h, int s, const RunConfig& cfg) {
  Run run(g, cfg);
  if (h < 3 || s < 1) {
    run.trace.add("precondition", "h>=3,s>=1", 0, "rejected");
    run.reason = "precondition: need h >= 3 and s >= 1";
    return conclude(run, std::nullopt);
  }
  View v = whole(g);
  std::optional<Witness> w;
  if (h <= cfg.pattern_check_max_h) {
    if (auto img = direct_pattern(run, v, clique_one_subdivision(h), "direct_subdivision"))
      w = subdivision_from_image(h, img->vertices);
  } else {
    run.trace.add("direct_subdivision", "h=" + std::to_string(h), 0, "skipped");
  }
  if (!w) w = main1_route(run, v, h, s);
  if (!w) w = fallback_kss(run, v, s);
  return conclude(run, w);
}

DriverResult main2(const Graph& g, int k, int s, const RunConfig& cfg) {
  Run run(g, cfg);
  if (k < 2 || s < 1) {
    run.trace.add("precondition", "k>=2,s>=1", 0, "rejected");
    run.reason = "precondition: need k >= 2 and s >= 1";
    return conclude(run, std::nullopt);
  }
  auto hk = step(run, "construct_hk", "k=" + std::to_string(k), [&](const Ctl&) { return construct_hk(k); });
  if (!hk) return conclude(run, std::nullopt);
  double eps = cfg.eps_main2 > 0 ? cfg.eps_main2 : 1.0 / (1000.0 * k);
  Main2 m2{run, k, s, *hk, eps};
  View v = whole(g);
  std::optional<Witness> w;
  if (k <= cfg.hk_check_max_k) {
    if (auto img = direct_pattern(run, v, hk->graph, "direct_hk")) w = c4free_witness(g, img->vertices);
  } else {
    run.trace.add("direct_hk", "k=" + std::to_string(k), 0, "skipped");
  }
  if (!w) w = m2.route(v);
  if (!w) w = fallback_kss(run, v, s);
  return conclude(run, w);
}

DriverResult davies_corollary(const Graph& g, int t, const RunConfig& cfg) {
  Run run(g, cfg);
  if (t < 1) {
    run.trace.add("precondition", "t>=1", 0, "rejected");
    run.reason = "precondition: need t >= 1";
    return conclude(run, std::nullopt);
  }
  VertexSet mc = max_clique(g);
  int omega = static_cast<int>(mc.size());
  run.trace.add("clique_number", "", 0, std::to_string(omega));
  // K_{omega+1, (t omega)^t}: a non-edge on the small side plus an independent t-set on the large side
  long double big = std::pow(static_cast<long double>(t) * std::max(omega, 1), t);
  if (big <= g.n() && omega >= 1) {
    long long b = static_cast<long long>(big);
    auto kab = step(run, "davies_biclique", "a=" + std::to_string(omega + 1) + ",b=" + std::to_string(b),
                    [&](const Ctl&) { return find_kab(g, omega + 1, b, cfg.search_nodes); });
    if (kab && *kab) {
      auto& L = (*kab)->left;
      std::optional<std::pair<int, int>> non_edge;
      for (size_t i = 0; i < L.size() && !non_edge; ++i)
        for (size_t j = i + 1; j < L.size() && !non_edge; ++j)
          if (!g.adjacent(L[i], L[j])) non_edge = std::make_pair(L[i], L[j]);
      if (non_edge) {
        auto rs = ramsey_split(g, (*kab)->right, omega + 1, t);
        if (rs.kind == RamseyResult::Independent) {
          Witness w;
          w.kind = WitnessKind::InducedKst;
          w.left = {non_edge->first, non_edge->second};
          w.right = VertexSet(rs.set.begin(), rs.set.begin() + t);
          w.right = sorted_unique(w.right);
          run.label("induced-kst");
          return conclude(run, w);
        }
      }
      run.label("no-split");
    }
  } else {
    run.trace.add("davies_biclique", "b>n", 0, "skipped");
  }
  if (omega >= t + 1) {
    run.trace.add("clique_escape", "omega>=t+1", 0, "clique");
    return conclude(run, clique_witness(mc));
  }
  DriverResult r = main_driver(g, 2, std::max(t, 2), t + 1, cfg);
  run.trace.entries.insert(run.trace.entries.end(), r.trace.entries.begin(), r.trace.entries.end());
  run.reason = r.failure_reason;
  return conclude(run, r.witness);
}

}  // namespace isub
