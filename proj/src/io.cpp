#include "isub/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace isub {

using nlohmann::json;

namespace {

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Parses exactly `count` non-negative integers from a line; anything else is an error.
std::vector<long long> ints_on_line(const std::string& s, int count, int line) {
  std::istringstream is(s);
  std::vector<long long> out;
  std::string tok;
  while (is >> tok) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      fail_at(line, "not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) fail_at(line, "not an integer: '" + tok + "'");
    if (v < 0) fail_at(line, "negative value");
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) != count)
    fail_at(line, "expected " + std::to_string(count) + " integers, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string s;
  int line = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, s)) {
      ++line;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      if (s.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next()) throw ParseError("line 1: missing header \"n m\"");
  auto hdr = ints_on_line(s, 2, line);
  if (hdr[0] > 50'000'000) fail_at(line, "n too large");
  int n = static_cast<int>(hdr[0]);
  long long m = hdr[1];
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!next()) fail_at(line + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    auto e = ints_on_line(s, 2, line);
    if (e[0] >= e[1]) fail_at(line, "need u < v");
    if (e[1] >= n) fail_at(line, "vertex out of range");
    std::pair<int, int> p{static_cast<int>(e[0]), static_cast<int>(e[1])};
    if (!seen.insert(p).second) fail_at(line, "duplicate edge");
    edges.push_back(p);
  }
  if (next()) fail_at(line, "trailing content after " + std::to_string(m) + " edges");
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return parse_edge_list(f);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + tmp);
    f << contents;
    if (!f.flush()) throw Error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("rename failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

namespace {

json payload_json(const Witness& w) {
  json p = json::object();
  switch (w.kind) {
    case WitnessKind::Clique:
      p["vertices"] = w.vertices;
      break;
    case WitnessKind::C4FreeDense:
      p["vertices"] = w.vertices;
      p["claimed_degree"] = std::to_string(w.claimed_degree.numerator()) + "/" +
                            std::to_string(w.claimed_degree.denominator());
      break;
    case WitnessKind::KssSubgraph:
    case WitnessKind::InducedKst:
      p["left"] = w.left;
      p["right"] = w.right;
      break;
    case WitnessKind::InducedBalancedSubdivision:
      p["branch"] = w.branch;
      p["paths"] = w.paths;
      p["path_length"] = w.path_length;
      break;
    case WitnessKind::OneSubdivision:
      p["edge_vertices"] = w.left;
      p["branch_vertices"] = w.right;
      p["uniformity"] = w.uniformity;
      break;
  }
  return p;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in claimed_degree");
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw ParseError("bad claimed_degree: " + s);
  }
}

Witness witness_from_json(const std::string& kind, const json& p) {
  auto k = kind_from_name(kind);
  if (!k) throw ParseError("unknown witness kind: " + kind);
  Witness w;
  w.kind = *k;
  auto ints = [&](const char* key) {
    if (!p.contains(key)) throw ParseError(std::string("payload missing '") + key + "'");
    return p.at(key).get<std::vector<int>>();
  };
  switch (w.kind) {
    case WitnessKind::Clique:
      w.vertices = ints("vertices");
      break;
    case WitnessKind::C4FreeDense:
      w.vertices = ints("vertices");
      if (!p.contains("claimed_degree")) throw ParseError("payload missing 'claimed_degree'");
      w.claimed_degree = parse_rational(p.at("claimed_degree").get<std::string>());
      break;
    case WitnessKind::KssSubgraph:
    case WitnessKind::InducedKst:
      w.left = ints("left");
      w.right = ints("right");
      break;
    case WitnessKind::InducedBalancedSubdivision:
      w.branch = ints("branch");
      if (!p.contains("paths")) throw ParseError("payload missing 'paths'");
      w.paths = p.at("paths").get<std::vector<std::vector<int>>>();
      w.path_length = p.value("path_length", 0);
      break;
    case WitnessKind::OneSubdivision:
      w.left = ints("edge_vertices");
      w.right = ints("branch_vertices");
      w.uniformity = p.value("uniformity", 0);
      break;
  }
  return w;
}

}  // namespace

std::string witness_document_json(const WitnessDocument& doc) {
  json j;
  j["kind"] = doc.witness ? kind_name(doc.witness->kind) : "Failure";
  j["payload"] = doc.witness ? payload_json(*doc.witness) : json::object();
  j["driver"] = doc.driver;
  j["parameters"] = doc.parameters;
  j["seed"] = doc.seed;
  j["trace_digest"] = doc.trace_digest;
  json tr = json::array();
  for (const auto& e : doc.trace.entries)
    tr.push_back({{"op", e.op}, {"params", e.params}, {"attempts", e.attempts}, {"outcome", e.outcome}});
  j["trace"] = tr;
  j["verdict"] = {{"accepted", doc.verdict}, {"clause", doc.clause}};
  return j.dump(2) + "\n";
}

WitnessDocument parse_witness_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("witness document: ") + e.what());
  }
  try {
    WitnessDocument doc;
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "Failure") doc.witness = witness_from_json(kind, j.at("payload"));
    doc.driver = j.value("driver", "");
    if (j.contains("parameters")) doc.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    doc.seed = j.at("seed").get<uint64_t>();
    doc.trace_digest = j.value("trace_digest", "");
    if (j.contains("trace"))
      for (const auto& e : j.at("trace"))
        doc.trace.add(e.at("op").get<std::string>(), e.at("params").get<std::string>(), e.at("attempts").get<int>(),
                      e.at("outcome").get<std::string>());
    if (j.contains("verdict")) {
      doc.verdict = j.at("verdict").value("accepted", false);
      doc.clause = j.at("verdict").value("clause", "");
    }
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness document: ") + e.what());
  }
}

}  // namespace isub
