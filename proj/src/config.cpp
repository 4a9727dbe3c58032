#include "isub/config.hpp"

#include <json.hpp>

#include <cstdio>
#include <map>
#include <type_traits>

namespace isub {

bool RunTrace::has(const std::string& op, const std::string& outcome) const {
  for (auto& e : entries)
    if (e.op == op && (outcome.empty() || e.outcome == outcome)) return true;
  return false;
}

std::string RunTrace::digest() const {
  uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (auto& e : entries) {
    feed(e.op);
    feed(e.params);
    feed(std::to_string(e.attempts));
    feed(e.outcome);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

template <class T>
T parse_num(const std::string& name, const std::string& v) {
  try {
    size_t pos = 0;
    T out;
    if constexpr (std::is_same_v<T, double>)
      out = std::stod(v, &pos);
    else if constexpr (std::is_same_v<T, uint64_t>)
      out = std::stoull(v, &pos);
    else
      out = static_cast<T>(std::stoll(v, &pos));
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::logic_error&) {
    throw OutOfRange("config: bad value for " + name + ": '" + v + "'");
  }
}

}  // namespace

bool set_config_field(RunConfig& c, const std::string& name, const std::string& v) {
  std::map<std::string, double*> dbl = {
      {"L_base", &c.L_base},         {"L_main", &c.L_main},
      {"L_main1", &c.L_main1},       {"L_main2", &c.L_main2},
      {"eps_main", &c.eps_main},     {"eps_main1", &c.eps_main1},
      {"eps_main2", &c.eps_main2},   {"unbalanced_p", &c.unbalanced_p},
      {"cleanup_p", &c.cleanup_p},   {"extraction_p", &c.extraction_p},
      {"clean_p", &c.clean_p},       {"deletion_p", &c.deletion_p},
      {"c1", &c.c1},                 {"c2", &c.c2},
      {"c4free_target", &c.c4free_target}, {"subdivision_target", &c.subdivision_target},
  };
  std::map<std::string, int*> ints = {
      {"retry_budget", &c.retry_budget}, {"pattern_check_max_h", &c.pattern_check_max_h},
      {"hk_check_max_k", &c.hk_check_max_k}, {"D", &c.D},
      {"main2_depth_cap", &c.main2_depth_cap}, {"h_target", &c.h_target},
      {"drc_tuple", &c.drc_tuple}, {"oracle_max_vertices", &c.oracle.max_vertices},
  };
  if (auto it = dbl.find(name); it != dbl.end()) {
    *it->second = parse_num<double>(name, v);
  } else if (auto jt = ints.find(name); jt != ints.end()) {
    *jt->second = parse_num<int>(name, v);
  } else if (name == "seed") {
    c.seed = parse_num<uint64_t>(name, v);
  } else if (name == "search_nodes") {
    c.search_nodes = parse_num<long long>(name, v);
  } else if (name == "oracle_max_edges") {
    c.oracle.max_edges = parse_num<long long>(name, v);
  } else if (name == "strict") {
    if (v == "true" || v == "1")
      c.strict = true;
    else if (v == "false" || v == "0")
      c.strict = false;
    else
      throw OutOfRange("config: strict must be true or false");
  } else {
    return false;
  }
  return true;
}

void apply_config_json(RunConfig& cfg, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  for (auto& [k, v] : j.items()) {
    std::string val;
    if (v.is_boolean())
      val = v.get<bool>() ? "true" : "false";
    else if (v.is_number_integer())
      val = std::to_string(v.get<long long>());
    else if (v.is_number())
      val = v.dump();
    else
      throw ParseError("config: field " + k + " must be a number or boolean");
    if (!set_config_field(cfg, k, val)) throw ParseError("config: unknown field " + k);
  }
}

void validate_config(const RunConfig& c) {
  if (c.retry_budget < 1) throw OutOfRange("config: retry_budget must be positive");
  if (c.search_nodes < 1) throw OutOfRange("config: search_nodes must be positive");
  if (c.c4free_target < 1 || c.subdivision_target < 1) throw OutOfRange("config: degree targets must be at least 1");
  if (c.D < 1 || c.main2_depth_cap < 0 || c.h_target < 3) throw OutOfRange("config: need D >= 1, depth cap >= 0, h_target >= 3");
}

}  // namespace isub
