#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isub {

using Rational = boost::rational<long long>;
using VertexSet = std::vector<int>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExhausted : Error {
  using Error::Error;
};
struct PreconditionFailed : Error {
  using Error::Error;
};
struct TooManyCopies : Error {
  using Error::Error;
};
struct NotFound : Error {
  using Error::Error;
};
struct Infeasible : Error {
  using Error::Error;
};
struct InvariantViolation : Error {
  using Error::Error;
};
struct OracleBudgetExceeded : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};

using Rng = std::mt19937_64;

// Derive an independent stream from (seed, tag, index); splitmix64 finalizer over an FNV hash of the tag.
uint64_t mix_seed(uint64_t seed, std::string_view tag, uint64_t index = 0);

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline bool coin(Rng& rng, double p) { return uniform01(rng) < p; }
int uniform_int(Rng& rng, int lo, int hi);  // inclusive

// Las Vegas control block: seed, retry budget, whether lemma preconditions are enforced, and usage stats.
struct OpStats {
  int attempts = 0;
  std::vector<std::string> notes;
};

struct Ctl {
  uint64_t seed = 1;
  int budget = 200;
  bool strict = true;
  OpStats* stats = nullptr;

  Ctl child(std::string_view tag, uint64_t index = 0) const {
    Ctl c = *this;
    c.seed = mix_seed(seed, tag, index);
    c.stats = nullptr;
    return c;
  }
  void note(const std::string& s) const {
    if (stats) stats->notes.push_back(s);
  }
  void attempted(int n) const {
    if (stats) stats->attempts += n;
  }
};

double binom(int n, int k);
long long binom_ll(int n, int k);  // saturates at LLONG_MAX

VertexSet sorted_unique(VertexSet v);
bool contains(const VertexSet& sorted, int v);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
int intersection_size(const VertexSet& a, const VertexSet& b);

// Calls f(subset) for each k-subset of `items` in lexicographic order; f returns false to stop. Returns false if stopped.
template <class F>
bool for_each_subset(const std::vector<int>& items, int k, F&& f) {
  int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> cur(k);
  while (true) {
    for (int i = 0; i < k; ++i) cur[i] = items[idx[i]];
    if (!f(cur)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string join_ints(const std::vector<int>& v);

}  // namespace isub
