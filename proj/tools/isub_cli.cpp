#include "isub/bench.hpp"
#include "isub/generators.hpp"
#include "isub/io.hpp"
#include "isub/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace isub;

namespace {

// exit codes: 0 success, 1 input error, 2 negative outcome (Failure or rejected witness)
constexpr int kInputError = 1;
constexpr int kNegative = 2;

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& p : raw) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw OutOfRange("--param expects key=value, got '" + p + "'");
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

long long int_param(const std::map<std::string, std::string>& m, const std::string& key, long long dflt) {
  auto it = m.find(key);
  if (it == m.end()) return dflt;
  try {
    size_t pos = 0;
    long long v = std::stoll(it->second, &pos);
    if (pos == it->second.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw OutOfRange("parameter " + key + " must be an integer");
}

double real_param(const std::map<std::string, std::string>& m, const std::string& key, double dflt) {
  auto it = m.find(key);
  if (it == m.end()) return dflt;
  try {
    size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos == it->second.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw OutOfRange("parameter " + key + " must be a number");
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file_atomic(out, text);
}

Graph generate(const std::string& name, const std::map<std::string, std::string>& prm, uint64_t seed) {
  auto need = [&](std::initializer_list<const char*> keys) {
    for (auto& [k, v] : prm) {
      bool known = false;
      for (auto* key : keys) known = known || k == key;
      if (!known) throw OutOfRange(name + ": unknown parameter " + k);
    }
  };
  auto positive = [&](const char* key, long long dflt) {
    long long v = int_param(prm, key, dflt);
    if (v < 1 || v > 100000) throw OutOfRange(name + ": " + key + " out of range");
    return static_cast<int>(v);
  };
  if (name == "gnp" || name == "complement-gnp") {
    need({"n", "p"});
    int n = positive("n", 100);
    double p = real_param(prm, "p", 0.5);
    return name == "gnp" ? gen::gnp(n, p, seed) : gen::complement_gnp(n, p, seed);
  }
  if (name == "incidence-plane") {
    need({"q"});
    return gen::incidence_plane(positive("q", 2));
  }
  if (name == "h_k") {
    need({"k"});
    return gen::h_k(positive("k", 2));
  }
  if (name == "one-subdivision-of-clique") {
    need({"h"});
    return gen::one_subdivision_of_clique(positive("h", 4));
  }
  if (name == "multipartite") {
    need({"parts", "size"});
    return gen::multipartite(positive("parts", 3), positive("size", 10));
  }
  throw OutOfRange("unknown generator: " + name);
}

int analyze(const std::string& file, const std::string& driver, const std::map<std::string, std::string>& prm,
            uint64_t seed, int budget, const std::string& config_file, const std::string& out) {
  Graph g = read_edge_list(file);
  RunConfig cfg;
  if (!config_file.empty()) apply_config_json(cfg, read_file(config_file));
  cfg.seed = seed;
  if (budget > 0) cfg.retry_budget = budget;
  std::map<std::string, std::string> recorded;
  for (auto& [k, v] : prm) {
    recorded[k] = v;
    if (k == "k" || k == "s" || k == "t" || k == "h" || k == "eps") continue;
    if (!set_config_field(cfg, k, v)) throw OutOfRange("unknown parameter " + k);
  }
  int k = static_cast<int>(int_param(prm, "k", 3));
  int s = static_cast<int>(int_param(prm, "s", 2));
  int t = static_cast<int>(int_param(prm, "t", std::max(2, s)));
  int h = static_cast<int>(int_param(prm, "h", 3));
  double eps = real_param(prm, "eps", 0);
  if (k < 1 || s < 1 || t < 1 || h < 1) throw OutOfRange("k, s, t, h must be positive");
  if (eps < 0 || eps >= 0.1) throw OutOfRange("eps must lie in [0, 0.1)");
  validate_config(cfg);

  DriverResult r;
  if (driver == "main") {
    if (eps > 0) cfg.eps_main = eps;
    r = main_driver(g, s, t, k, cfg);
  } else if (driver == "main1") {
    if (eps > 0) cfg.eps_main1 = eps;
    r = main1(g, h, s, cfg);
  } else if (driver == "main2") {
    if (eps > 0) cfg.eps_main2 = eps;
    r = main2(g, k, s, cfg);
  } else if (driver == "base-case") {
    r = base_case(g, k, cfg);
  } else if (driver == "davies") {
    r = davies_corollary(g, t, cfg);
  } else {
    throw OutOfRange("unknown driver: " + driver);
  }

  WitnessDocument doc;
  doc.driver = driver;
  doc.parameters = recorded;
  doc.parameters["retry_budget"] = std::to_string(cfg.retry_budget);
  doc.seed = seed;
  doc.trace = r.trace;
  doc.trace_digest = r.trace.digest();
  doc.witness = r.witness;
  if (r.witness) {
    auto v = verify_witness(g, *r.witness, cfg);
    doc.verdict = v.accepted;
    doc.clause = v.clause;
  } else {
    doc.verdict = false;
    doc.clause = r.failure_reason;
  }
  emit(out, witness_document_json(doc));
  return doc.witness && doc.verdict ? 0 : kNegative;
}

int verify(const std::string& graph_file, const std::string& doc_file) {
  Graph g = read_edge_list(graph_file);
  WitnessDocument doc = parse_witness_document(read_file(doc_file));
  if (!doc.witness) {
    std::cout << "rejected: document carries no witness (Failure)\n";
    return kNegative;
  }
  auto v = verify_witness(g, *doc.witness);
  if (v.accepted) {
    std::cout << "accepted: " << kind_name(doc.witness->kind) << "\n";
    return 0;
  }
  std::cout << "rejected: " << v.clause << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
  return kNegative;
}

int run_bench(const std::string& suite, uint64_t seed, const std::string& out) {
  std::string table, csv;
  bool ok = true;
  if (suite == "oracle-parity") {
    auto rows = bench::oracle_parity(seed);
    table = bench::parity_table(rows);
    csv = bench::parity_csv(rows);
    for (auto& r : rows) ok = ok && r.mismatches == 0;
  } else if (suite == "lemma-success-rates") {
    auto rows = bench::lemma_success_rates(seed);
    table = bench::lemma_table(rows);
    csv = bench::lemma_csv(rows);
  } else if (suite == "tightness-sweep") {
    auto rows = bench::tightness_sweep(seed, {50, 100, 200}, bench::default_sweep_grid(), 20, 3);
    table = bench::sweep_table(rows);
    csv = bench::sweep_csv(rows);
    std::string detail;
    ok = bench::sweep_monotone(rows, &detail);
    table += ok ? "monotone within Wilson-interval noise\n" : "NOT monotone:\n" + detail;
  } else {
    throw OutOfRange("unknown suite: " + suite);
  }
  std::cout << table;
  if (!out.empty()) write_file_atomic(out, csv);
  return ok ? 0 : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isub: witness-producing induced-subgraph pipeline"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  int budget = 0;
  std::vector<std::string> params;
  std::string out, driver = "main", config_file;

  auto* gen_cmd = app.add_subcommand("generate", "write a generated instance as an edge list");
  std::string gen_name;
  gen_cmd->add_option("generator", gen_name,
                      "gnp | complement-gnp | incidence-plane | h_k | one-subdivision-of-clique | multipartite")
      ->required();
  gen_cmd->add_option("--param", params, "generator parameters key=value");
  gen_cmd->add_option("--seed", seed, "seed");
  gen_cmd->add_option("--out", out, "output file (default stdout)");

  auto* an_cmd = app.add_subcommand("analyze", "run a driver and emit a witness document");
  std::string graph_file;
  an_cmd->add_option("file", graph_file, "edge-list file")->required();
  an_cmd->add_option("--driver", driver, "main | main1 | main2 | base-case | davies");
  an_cmd->add_option("--param", params, "k= s= t= h= eps= or any config field");
  an_cmd->add_option("--seed", seed, "seed");
  an_cmd->add_option("--budget", budget, "retry budget per lemma call");
  an_cmd->add_option("--config", config_file, "JSON config file (flags win)");
  an_cmd->add_option("--out", out, "witness document path (default stdout)");

  auto* ver_cmd = app.add_subcommand("verify", "check a witness document against a graph");
  std::string doc_file;
  ver_cmd->add_option("graph", graph_file, "edge-list file")->required();
  ver_cmd->add_option("witness", doc_file, "witness document")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
  std::string suite;
  bench_cmd->add_option("suite", suite, "lemma-success-rates | tightness-sweep | oracle-parity")->required();
  bench_cmd->add_option("--seed", seed, "seed");
  bench_cmd->add_option("--out", out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*gen_cmd) {
      Graph g = generate(gen_name, parse_params(params), seed);
      emit(out, emit_edge_list(g));
      return 0;
    }
    if (*an_cmd) return analyze(graph_file, driver, parse_params(params), seed, budget, config_file, out);
    if (*ver_cmd) return verify(graph_file, doc_file);
    if (*bench_cmd) return run_bench(suite, seed, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
