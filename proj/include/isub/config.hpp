#pragma once

#include "isub/oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isub {

// Tunables for the drivers. A value of 0 for an L, eps or probability field selects the
// formula the corresponding proof uses.
struct RunConfig {
  uint64_t seed = 1;
  int retry_budget = 200;
  bool strict = false;  // enforce every lemma precondition instead of recording it in the trace
  OracleBudget oracle;

  int pattern_check_max_h = 5;  // direct induced 1-subdivision of K_h search
  int hk_check_max_k = 4;       // direct induced H_k search

  double L_base = 0;   // 80 d^4
  double L_main = 0;   // d^{s+3}
  double L_main1 = 0;  // d^6
  double L_main2 = 0;  // 4 d^{D+3}

  int D = 2;
  int main2_depth_cap = 3;
  int h_target = 3;

  double eps_main = 0;   // 1/(500 s)
  double eps_main1 = 0;  // 1/(500 h)
  double eps_main2 = 0;  // 1/(1000 k)

  double unbalanced_p = 0;  // 1/(2(10+s)d)
  double cleanup_p = 1.0;   // proof value d0^{-9/10}; 0 selects it
  double extraction_p = 0;  // d^{-1-eta/s}
  double clean_p = 0;       // 1/(1000 D d)
  double deletion_p = 0;    // d^{delta/(5 v(F)) - 1}
  int drc_tuple = 0;        // tuple size in dependent random choice; 0 means 10s

  double c1 = 28800;  // max degree slack in the bootstrap certificate
  double c2 = 3200;   // average degree loss in the bootstrap certificate

  double c4free_target = 1;      // required average degree of deletion-method outputs
  double subdivision_target = 1;  // required d(H) of extracted 1-subdivisions (almost-regular regime)
  long long search_nodes = 4'000'000;
};

// Sets a RunConfig field by name from its text value; returns false for an unknown name.
// Throws OutOfRange for a malformed or out-of-range value.
bool set_config_field(RunConfig& cfg, const std::string& name, const std::string& value);
// Flat JSON object of field names to numbers/booleans; throws ParseError.
void apply_config_json(RunConfig& cfg, const std::string& text);
// Rejects non-positive budgets and degree targets below 1.
void validate_config(const RunConfig& cfg);

struct TraceEntry {
  std::string op;
  std::string params;
  int attempts = 0;
  std::string outcome;

  bool operator==(const TraceEntry& o) const {
    return op == o.op && params == o.params && attempts == o.attempts && outcome == o.outcome;
  }
};

struct RunTrace {
  std::vector<TraceEntry> entries;

  void add(std::string op, std::string params, int attempts, std::string outcome) {
    entries.push_back({std::move(op), std::move(params), attempts, std::move(outcome)});
  }
  bool has(const std::string& op, const std::string& outcome = "") const;
  std::string digest() const;  // FNV-1a over all fields, hex

  bool operator==(const RunTrace& o) const { return entries == o.entries; }
};

}  // namespace isub
