#pragma once

#include "isub/config.hpp"
#include "isub/detectors.hpp"
#include "isub/graph.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace isub {

// Edge-list text: header "n m", then m lines "u v" with 0 <= u < v < n, no duplicates.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
std::string emit_edge_list(const Graph& g);

// Writes to a temporary sibling and renames over `path`.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

struct WitnessDocument {
  std::optional<Witness> witness;  // empty for a Failure document
  std::string driver;
  std::map<std::string, std::string> parameters;
  uint64_t seed = 0;
  std::string trace_digest;
  RunTrace trace;
  bool verdict = false;
  std::string clause;  // violated clause, or the failure reason
};

std::string witness_document_json(const WitnessDocument& doc);
WitnessDocument parse_witness_document(const std::string& text);  // throws ParseError

}  // namespace isub
