#include "fixtures.hpp"

#include "isub/config.hpp"
#include "isub/generators.hpp"
#include "isub/io.hpp"
#include "isub/pipeline.hpp"

#include <doctest.h>

#include <sstream>

using namespace isub;

namespace {

Graph parse(const std::string& s) {
  std::istringstream in(s);
  return parse_edge_list(in);
}

std::string parse_error(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("edge list parse and emit") {
  auto g = parse("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(emit_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");
  CHECK(parse("3 0\n").n() == 3);
}

TEST_CASE("edge list round trip over generated instances") {
  std::vector<Graph> corpus = {gen::gnp(100, 0.5, 7), gen::heawood(), gen::h_k(3), gen::one_subdivision_of_clique(5),
                               gen::multipartite(3, 4), gen::complement_gnp(30, 0.7, 2), Graph(0), Graph(5)};
  for (auto& g : corpus) CHECK(parse(emit_edge_list(g)) == g);
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK(parse_error("").find("line 1") != std::string::npos);
  CHECK(parse_error("3 2\n0 1\n1 1\n").find("line 3") != std::string::npos);
  CHECK(parse_error("3 2\n0 1\n0 1\n").find("duplicate") != std::string::npos);
  CHECK(parse_error("3 1\n0 3\n").find("out of range") != std::string::npos);
  CHECK(parse_error("3 1\n2 1\n").find("u < v") != std::string::npos);
  CHECK(parse_error("3 2\n0 1\n").find("expected 2 edges") != std::string::npos);
  CHECK(parse_error("3 1\n0 1\n1 2\n").find("trailing") != std::string::npos);
  CHECK(parse_error("3 1\n0 x\n").find("line 2") != std::string::npos);
  CHECK(parse_error("3 1\n0 1 2\n").find("line 2") != std::string::npos);
}

TEST_CASE("h_k generator gives C8 for k = 2") {
  auto g = gen::h_k(2);
  CHECK(g.n() == 8);
  CHECK(g.m() == 8);
  CHECK(g.min_degree() == 2);
  CHECK(g.max_degree() == 2);
  CHECK(oracle_count_c4(g) == 0);
  CHECK(oracle_max_clique(g).size() == 2);
}

TEST_CASE("witness document round trip") {
  auto g = gen::complete(50);
  RunConfig cfg;
  auto r = main_driver(g, 2, 2, 10, cfg);
  REQUIRE(r.witness);
  WitnessDocument doc;
  doc.witness = r.witness;
  doc.driver = "main";
  doc.parameters = {{"k", "10"}};
  doc.seed = 1;
  doc.trace = r.trace;
  doc.trace_digest = r.trace.digest();
  doc.verdict = true;
  auto text = witness_document_json(doc);
  auto back = parse_witness_document(text);
  CHECK(back.witness == doc.witness);
  CHECK(back.trace == doc.trace);
  CHECK(back.parameters == doc.parameters);
  CHECK(back.seed == 1);
  CHECK(back.trace_digest == doc.trace_digest);
  CHECK(witness_document_json(back) == text);
  CHECK(verify_witness(g, *back.witness).accepted);
}

TEST_CASE("witness documents for every kind round trip") {
  std::vector<Witness> ws(6);
  ws[0].kind = WitnessKind::Clique;
  ws[0].vertices = {1, 2};
  ws[1].kind = WitnessKind::KssSubgraph;
  ws[1].left = {0};
  ws[1].right = {3};
  ws[2].kind = WitnessKind::InducedKst;
  ws[2].left = {0};
  ws[2].right = {3, 4};
  ws[3].kind = WitnessKind::C4FreeDense;
  ws[3].vertices = {0, 1, 2};
  ws[3].claimed_degree = Rational(4, 3);
  ws[4].kind = WitnessKind::InducedBalancedSubdivision;
  ws[4].branch = {0, 1, 2};
  ws[4].paths = {{0, 3, 1}, {0, 4, 2}, {1, 5, 2}};
  ws[4].path_length = 2;
  ws[5].kind = WitnessKind::OneSubdivision;
  ws[5].left = {3, 4};
  ws[5].right = {0, 1, 2};
  ws[5].uniformity = 2;
  for (auto& w : ws) {
    WitnessDocument d;
    d.witness = w;
    d.seed = 5;
    auto back = parse_witness_document(witness_document_json(d));
    CHECK(back.witness == w);
  }
  WitnessDocument fail;
  fail.seed = 3;
  fail.clause = "no edges";
  auto back = parse_witness_document(witness_document_json(fail));
  CHECK_FALSE(back.witness);
  CHECK(back.clause == "no edges");
}

TEST_CASE("malformed witness documents") {
  CHECK_THROWS_AS(parse_witness_document("{"), ParseError);
  CHECK_THROWS_AS(parse_witness_document(R"({"kind":"Nonsense","payload":{},"seed":1})"), ParseError);
  CHECK_THROWS_AS(parse_witness_document(R"({"kind":"Clique","payload":{},"seed":1})"), ParseError);
  CHECK_THROWS_AS(parse_witness_document(R"({"kind":"Clique","payload":{"vertices":[1]}})"), ParseError);
}

TEST_CASE("config fields and validation") {
  RunConfig cfg;
  CHECK(set_config_field(cfg, "retry_budget", "50"));
  CHECK(cfg.retry_budget == 50);
  CHECK(set_config_field(cfg, "deletion_p", "1"));
  CHECK(cfg.deletion_p == 1);
  CHECK_FALSE(set_config_field(cfg, "no_such_field", "1"));
  CHECK_THROWS_AS(set_config_field(cfg, "retry_budget", "many"), OutOfRange);
  apply_config_json(cfg, R"({"D": 3, "strict": true, "c4free_target": 2.5})");
  CHECK(cfg.D == 3);
  CHECK(cfg.strict);
  CHECK(cfg.c4free_target == 2.5);
  CHECK_THROWS_AS(apply_config_json(cfg, "[1]"), ParseError);
  CHECK_NOTHROW(validate_config(cfg));
  cfg.retry_budget = 0;
  CHECK_THROWS(validate_config(cfg));
  cfg.retry_budget = 10;
  cfg.c4free_target = 0.5;
  CHECK_THROWS(validate_config(cfg));
}

TEST_CASE("trace digest depends on every field") {
  RunTrace a, b;
  a.add("op", "x=1", 2, "ok");
  b.add("op", "x=1", 3, "ok");
  CHECK(a.digest() != b.digest());
  RunTrace c = a;
  CHECK(a.digest() == c.digest());
  CHECK(a.has("op"));
  CHECK(a.has("op", "ok"));
  CHECK_FALSE(a.has("op", "fail"));
}
