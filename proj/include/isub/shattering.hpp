#pragma once

#include "isub/detectors.hpp"
#include "isub/graph.hpp"
#include "isub/subdivision.hpp"

#include <map>
#include <optional>
#include <vector>

namespace isub {

struct SetFamily {
  int n = 0;
  std::vector<VertexSet> members;  // each sorted, inside [0, n)

  bool valid() const;
};

struct ShatterOutcome {
  enum Kind { Shattered, Avoider } kind = Avoider;
  VertexSet set;  // the shattered h-set or the avoiding D-set
  int k = 0;
};

bool is_k_shattered(const SetFamily& fam, const VertexSet& r, int k);
bool is_avoider(const SetFamily& fam, const VertexSet& i, int k);  // |i ∩ F| < k for all F
bool outcome_valid(const SetFamily& fam, const ShatterOutcome& o, int h, int d_cap);

// Erdős–Rado style upper bound for the 2-colour Ramsey number of K_h^{(k)} versus K_D^{(k)}; saturates.
long long hypergraph_ramsey_bound(int k, int h, int d_cap);
constexpr long long kRamseyCap = 64;

VertexSet pre_shatter(const SetFamily& fam, int k, int r, const Ctl& ctl, long long cover_check_budget = 5'000'000);

ShatterOutcome shatter_or_avoid(const SetFamily& fam, int k, int h, int d_cap, const Ctl& ctl);

// Returns image[v] = host vertex of pattern vertex v; the copy is verified induced.
std::vector<int> one_sided_eh(const Graph& g, const Graph& pattern, const BipartitePartition& sides, int s,
                              const Ctl& ctl, long long kss_budget = 20'000'000);

struct Hk {
  Graph graph;
  int q = 0;
  BipartitePartition sides;  // a: points x*q+y, b: lines q*q + m*q + c
};

Hk construct_hk(int k);

struct CleanInput {
  VertexSet a;
  VertexSet b;
  std::map<int, VertexSet> i_map;
};

struct CleanParams {
  double p = 0;       // 0 selects 1/(1000 D d)
  double target = 0;  // required d(H); 0 selects d
};

OneSubdivision clean_unbalanced(const Graph& g, const CleanInput& in, double d, int d_cap, int k, const Ctl& ctl,
                                const CleanParams& prm = {});

struct Escape {
  enum Kind { Subdivision, Dense, C4Free } kind = Dense;
  Witness witness;     // Subdivision: induced 1-subdivision of K_h^{(k)}
  VertexSet vertices;  // Dense, C4Free: host vertex set
};
const char* escape_name(Escape::Kind k);

struct IxOutcome {
  std::optional<VertexSet> ix;
  std::optional<Escape> escape;
  int correlators = 0;
};

// Searches inside N(x) ∩ b. eps drives both the density escapes and the heavy-correlator cut.
IxOutcome find_ix(const Graph& g, int x, const VertexSet& a_prime, const VertexSet& b, double d, int d_cap, int k, int h,
                  double eps, const Ctl& ctl, double c4free_target = 0);

bool verify_escape(const Graph& g, const Escape& e, double eps, double c4free_target);

struct MessyOutcome {
  std::optional<CleanInput> clean;
  std::optional<Escape> escape;
};

MessyOutcome messy_unbalanced(const Graph& g, const VertexSet& a0, const VertexSet& b, double d, int h, int k,
                              int d_cap, double eps, const Ctl& ctl, double c4free_target = 0);

}  // namespace isub
