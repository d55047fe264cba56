#include <doctest.h>

#include "helpers.hpp"
#include "splitcolor/graph.hpp"

using namespace splitcolor;
using sc_test::complete;
using sc_test::path;
using sc_test::random_graph;
using sc_test::star;

TEST_CASE("max_degree on fixed graphs") {
  DegreeReport r = max_degree(complete(4));
  CHECK(r.delta == 3);
  CHECK(r.witnesses == std::vector<int>{0, 1, 2, 3});

  r = max_degree(Graph(1));
  CHECK(r.delta == 0);
  CHECK(r.witnesses == std::vector<int>{0});

  Graph k4p = sc_test::extend(complete(4), {{0}});
  r = max_degree(k4p);
  CHECK(r.delta == 4);
  CHECK(r.witnesses == std::vector<int>{0});

  CHECK_THROWS_AS(max_degree(Graph(0)), std::invalid_argument);
}

TEST_CASE("complement on fixed graphs") {
  CHECK(complement(complete(4)).m() == 0);
  CHECK(complement(Graph(3)) == complete(3));
  Graph p3c = complement(path(3));
  CHECK(p3c.m() == 1);
  CHECK(p3c.has_edge(0, 2));
}

TEST_CASE("complement is an involution") {
  for (uint64_t seed = 1; seed <= 60; seed++) {
    Graph g = random_graph(3 + seed % 8, 40, seed);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("handshake: degree sum is twice the edge count") {
  for (uint64_t seed = 1; seed <= 60; seed++) {
    Graph g = random_graph(2 + seed % 9, 50, seed * 17);
    long long sum = 0;
    for (int v = 0; v < g.n(); v++) sum += g.degree(v);
    CHECK(sum == 2LL * g.m());
  }
}

TEST_CASE("induced subgraphs") {
  InducedSubgraph s = induced_subgraph(complete(4), {0, 1, 2});
  CHECK(s.graph == complete(3));
  CHECK(s.to_original == std::vector<int>{0, 1, 2});

  s = induced_subgraph(star(3), {1, 2, 3});
  CHECK(s.graph.n() == 3);
  CHECK(s.graph.m() == 0);

  CHECK_THROWS_AS(induced_subgraph(complete(3), {}), std::invalid_argument);
}

TEST_CASE("induced closed neighborhood by direct enumeration") {
  // K7 plus a cross vertex adjacent to {0,1}
  Graph g = sc_test::extend(complete(7), {{0, 1}});
  std::vector<int> closed{0};
  for (int w : g.neighbors(0)) closed.push_back(w);
  CHECK(static_cast<int>(closed.size()) == g.degree(0) + 1);
  InducedSubgraph s = induced_subgraph(g, closed);
  CHECK(s.graph.n() == 8);  // all of K7 plus the cross vertex
  CHECK(s.from_original[7] >= 0);
}

TEST_CASE("induced on the full vertex set is the identity") {
  for (uint64_t seed = 1; seed <= 20; seed++) {
    Graph g = random_graph(2 + seed % 7, 50, seed * 31);
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); v++) all[v] = v;
    InducedSubgraph s = induced_subgraph(g, all);
    CHECK(s.graph == g);
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete(4)));
  CHECK(is_connected(Graph(1)));
  Graph two_edges(4, {Edge(0, 1), Edge(2, 3)});
  CHECK_FALSE(is_connected(two_edges));
}

TEST_CASE("graph constructor rejects loops, collapses duplicates") {
  CHECK_THROWS_AS(Graph(2, {Edge(1, 1)}), std::invalid_argument);
  Graph g(3, {Edge(0, 1), Edge(1, 0), Edge(0, 1)});
  CHECK(g.m() == 1);
  CHECK_THROWS_AS(Graph(2, {Edge(0, 5)}), std::invalid_argument);
}
