#pragma once

#include "isub/config.hpp"
#include "isub/detectors.hpp"
#include "isub/graph.hpp"

#include <optional>
#include <string>

namespace isub {

// A driver either returns a witness that verify_witness accepted on the input graph, or a failure with its trace.
struct DriverResult {
  std::optional<Witness> witness;
  RunTrace trace;
  std::string failure_reason;

  bool ok() const { return witness.has_value(); }
};

DriverResult base_case(const Graph& g, int k, const RunConfig& cfg);
DriverResult main_driver(const Graph& g, int s, int t, int k, const RunConfig& cfg);
DriverResult main1(const Graph& g, int h, int s, const RunConfig& cfg);
DriverResult main2(const Graph& g, int k, int s, const RunConfig& cfg);
DriverResult davies_corollary(const Graph& g, int t, const RunConfig& cfg);

// Pattern graph of the 1-subdivision of K_h: branch vertices 0..h-1, then one vertex per pair in lexicographic order.
Graph clique_one_subdivision(int h);

}  // namespace isub
