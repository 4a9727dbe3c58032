#include "fixtures.hpp"

#include "isub/generators.hpp"
#include "isub/graph.hpp"

#include <doctest.h>

using namespace isub;

TEST_CASE("average degree of small graphs") {
  CHECK(average_degree(gen::complete(4)) == Rational(3));
  CHECK(average_degree(Graph(5)) == Rational(0));
  CHECK(average_degree(fix::path(3)) == Rational(4, 3));
  CHECK(average_degree(Graph(0)) == Rational(0));
}

TEST_CASE("from_edges merges duplicates and rejects loops") {
  auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.m() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), OutOfRange);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), OutOfRange);
}

TEST_CASE("degeneracy values") {
  CHECK(degeneracy(gen::cycle(5)).degeneracy == 2);
  CHECK(degeneracy(fix::tree(40, 3)).degeneracy == 1);
  CHECK(degeneracy(gen::complete(5)).degeneracy == 4);
  CHECK(degeneracy(Graph(4)).degeneracy == 0);
}

TEST_CASE("degeneracy ordering re-verifies on random graphs") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 10 + static_cast<int>(seed * 7 % 90);
    double p = 0.02 + 0.01 * static_cast<double>(seed % 30);
    auto g = gen::gnp(n, p, seed);
    auto ord = degeneracy(g);
    REQUIRE(static_cast<int>(ord.order.size()) == n);
    CHECK(verify_degeneracy(g, ord));
    auto bad = ord;
    bad.degeneracy = std::max(0, ord.degeneracy - 1);
    if (ord.degeneracy > 0) CHECK_FALSE(verify_degeneracy(g, bad));
  }
}

TEST_CASE("densest prefix of K5 with a pendant is the K5") {
  auto e = gen::complete(5).edges();
  e.emplace_back(4, 5);
  auto g = Graph::from_edges(6, e);
  auto dp = densest_prefix(g);
  CHECK(dp.to_host == VertexSet{0, 1, 2, 3, 4});
  CHECK(average_degree(dp.graph) == Rational(4));
}

TEST_CASE("densest prefix never loses density") {
  // property over 1000 seeded G(n,p), n <= 200
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    int n = 1 + static_cast<int>(mix_seed(seed, "n") % 200);
    double p = static_cast<double>(mix_seed(seed, "p") % 1000) / 4000.0;
    auto g = gen::gnp(n, p, seed);
    auto dp = densest_prefix(g);
    REQUIRE_FALSE(dp.to_host.empty());
    CHECK(average_degree(dp.graph) >= average_degree(g));
    CHECK(dp.graph == induced(g, dp.to_host).graph);
  }
}

TEST_CASE("induced subgraph of C5 on three consecutive vertices is P3") {
  auto sub = induced(gen::cycle(5), {0, 1, 2});
  CHECK(sub.graph == fix::path(3));
  CHECK(sub.lift({0, 2}) == VertexSet{0, 2});
  auto far = induced(gen::cycle(5), {1, 3, 4});
  CHECK(far.graph.m() == 1);
  CHECK(far.lift({1, 2}) == VertexSet{3, 4});
}

TEST_CASE("edge counting helpers") {
  auto g = gen::complete_bipartite(3, 4);
  VertexSet a{0, 1, 2}, b{3, 4, 5, 6};
  CHECK(edges_within(g, a) == 0);
  CHECK(edges_between(g, a, b) == 12);
  CHECK(degree_into(g, 0, b) == 4);
  CHECK(common_neighborhood(g, {0, 1}) == b);
  CHECK(is_independent(g, a));
  CHECK_FALSE(is_clique(g, {0, 3, 4}));
  CHECK(is_clique(g, {0, 3}));
}

TEST_CASE("greedy independent set is independent and deterministic") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = gen::gnp(80, 0.1, seed);
    auto s = greedy_independent_set(g);
    CHECK(is_independent(g, s));
    CHECK(s == greedy_independent_set(g));
  }
  CHECK(greedy_independent_set(Graph(25)).size() == 25);
}

TEST_CASE("seed mixing separates tags and indices") {
  CHECK(mix_seed(1, "a") != mix_seed(1, "b"));
  CHECK(mix_seed(1, "a", 0) != mix_seed(1, "a", 1));
  CHECK(mix_seed(7, "gnp") == mix_seed(7, "gnp"));
}

TEST_CASE("generators") {
  auto g = gen::gnp(100, 0.5, 7);
  CHECK(g.n() == 100);
  CHECK(g.m() > 2200);
  CHECK(g.m() < 2750);
  CHECK(gen::gnp(100, 0.5, 7) == g);
  auto s4 = gen::one_subdivision_of_clique(4);
  CHECK(s4.n() == 10);
  CHECK(s4.m() == 12);
  auto hw = gen::heawood();
  CHECK(hw.n() == 14);
  CHECK(hw.min_degree() == 3);
  CHECK(hw.max_degree() == 3);
  auto pg8 = gen::incidence_plane(8);
  CHECK(pg8.n() == 146);
  CHECK(pg8.min_degree() == 9);
  CHECK(pg8.max_degree() == 9);
  CHECK_THROWS_AS(gen::incidence_plane(6), OutOfRange);
  CHECK(gen::complement(gen::complete(6)).m() == 0);
  CHECK(gen::multipartite(3, 30).m() == 3 * 900);
}
