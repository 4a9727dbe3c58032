#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isub::bench {

struct ParityRow {
  std::string detector;
  int cases = 0;
  int mismatches = 0;
};

// Fast detectors against brute-force oracles on `graphs` seeded G(12, p) graphs, p cycling over 0.1..0.9.
std::vector<ParityRow> oracle_parity(uint64_t seed, int graphs = 500);

struct LemmaRow {
  std::string lemma;
  int runs = 0;
  int successes = 0;
  double mean_attempts = 0;  // over successful runs
};

std::vector<LemmaRow> lemma_success_rates(uint64_t seed, int runs_per_lemma = 20);

struct SweepRow {
  int n = 0;
  double p = 0;
  int s = 0;
  int seeds = 0;
  int kss_hits = 0;
  int unbalanced = 0;      // dichotomy branch at the main1 choice of L
  int almost_regular = 0;
};

std::vector<double> default_sweep_grid();
std::vector<SweepRow> tightness_sweep(uint64_t seed, const std::vector<int>& ns, const std::vector<double>& ps,
                                      int seeds_per_point, int s);

// Wilson score interval at ~95% (z = 1.96).
std::pair<double, double> wilson_interval(int hits, int trials, double z = 1.96);
// Per n, frequencies must be non-decreasing in p unless consecutive Wilson intervals overlap.
bool sweep_monotone(const std::vector<SweepRow>& rows, std::string* detail = nullptr);

std::string parity_table(const std::vector<ParityRow>& rows);
std::string lemma_table(const std::vector<LemmaRow>& rows);
std::string sweep_table(const std::vector<SweepRow>& rows);
std::string parity_csv(const std::vector<ParityRow>& rows);
std::string lemma_csv(const std::vector<LemmaRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace isub::bench
