#include <doctest.h>

#include "helpers.hpp"
#include "splitcolor/generator.hpp"
#include "splitcolor/oracle.hpp"
#include "splitcolor/split.hpp"

using namespace splitcolor;
using sc_test::complete;
using sc_test::cycle;
using sc_test::extend;
using sc_test::path;
using sc_test::star;

namespace {

void check_partition(const Graph& g, const SplitPartition& sp) {
  for (size_t i = 0; i < sp.clique.size(); i++)
    for (size_t j = i + 1; j < sp.clique.size(); j++)
      CHECK(g.has_edge(sp.clique[i], sp.clique[j]));
  for (size_t i = 0; i < sp.independent.size(); i++)
    for (size_t j = i + 1; j < sp.independent.size(); j++)
      CHECK_FALSE(g.has_edge(sp.independent[i], sp.independent[j]));
  CHECK(sp.clique.size() + sp.independent.size() == static_cast<size_t>(g.n()));
  // maximality: no independent vertex sees all of X
  for (int y : sp.independent) {
    size_t seen = 0;
    for (int w : g.neighbors(y))
      seen += std::count(sp.clique.begin(), sp.clique.end(), w);
    CHECK(seen < sp.clique.size());
  }
}

}  // namespace

TEST_CASE("split recognition on fixed graphs") {
  SplitRecognition r = recognize_split(cycle(4));
  CHECK_FALSE(r.is_split());
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->kind == NotSplit::Kind::C4);

  r = recognize_split(complete(4));
  REQUIRE(r.is_split());
  CHECK(r.partition->clique == std::vector<int>{0, 1, 2, 3});
  CHECK(r.partition->independent.empty());

  Graph g = extend(complete(3), {{0, 1}});
  r = recognize_split(g);
  REQUIRE(r.is_split());
  check_partition(g, *r.partition);
  CHECK(r.partition->clique == std::vector<int>{0, 1, 2});
  CHECK(r.partition->independent == std::vector<int>{3});
}

TEST_CASE("non-split certificates are genuine forbidden subgraphs") {
  Graph twok2(4, {Edge(0, 1), Edge(2, 3)});
  SplitRecognition r = recognize_split(twok2);
  REQUIRE_FALSE(r.is_split());
  CHECK(r.certificate->kind == NotSplit::Kind::TwoK2);

  r = recognize_split(cycle(5));
  REQUIRE_FALSE(r.is_split());
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->kind == NotSplit::Kind::C5);
  const auto& c = r.certificate->vertices;
  REQUIRE(c.size() == 5);
  for (size_t i = 0; i < 5; i++) {
    CHECK(cycle(5).has_edge(c[i], c[(i + 1) % 5]));
    CHECK_FALSE(cycle(5).has_edge(c[i], c[(i + 2) % 5]));
  }
}

TEST_CASE("recognized partitions are maximal on generated split graphs") {
  for (uint64_t seed = 1; seed <= 80; seed++) {
    GeneratorParams p;
    p.clique_size = 2 + seed % 6;
    p.independent_count = seed % 4;
    p.pendant_count = seed % 3;
    p.seed = seed;
    GeneratedGraph gg = random_split_graph(p);
    check_partition(gg.graph, gg.partition);
  }
}

TEST_CASE("pendant decomposition") {
  PendantDecomposition pd = pendant_decomposition(star(4));
  CHECK(pd.pendants == std::vector<int>{1, 2, 3, 4});
  CHECK(pd.core.graph.n() == 1);

  pd = pendant_decomposition(complete(4));
  CHECK(pd.pendants.empty());
  CHECK(pd.core.graph == complete(4));

  Graph g = extend(complete(4), {{0}});
  pd = pendant_decomposition(g);
  CHECK(pd.pendants == std::vector<int>{4});
  CHECK(pd.pendant_attach[4] == 0);
  CHECK(pd.core.graph == complete(4));

  CHECK_THROWS_AS(pendant_decomposition(Graph(1)), std::invalid_argument);

  // K2: both endpoints count as pendants, core is empty
  pd = pendant_decomposition(complete(2));
  CHECK(pd.pendants == std::vector<int>{0, 1});
  CHECK(pd.core.graph.n() == 0);
}

TEST_CASE("universal vertex") {
  CHECK(universal_vertex(complete(5)) == 0);
  CHECK_FALSE(universal_vertex(path(4)).has_value());
  CHECK(universal_vertex(extend(complete(3), {{0, 1}})) == 0);
}

TEST_CASE("stretch classification on fixed graphs") {
  auto classify = [](const Graph& g) {
    SplitRecognition r = recognize_split(g);
    REQUIRE(r.is_split());
    return stretch_class(g, *r.partition);
  };

  CHECK(classify(star(3)).sigma == 1);

  StretchClass s = classify(extend(complete(3), {{0, 1}}));
  CHECK(s.sigma == 2);
  CHECK(s.sigma == oracle::stretch_index_exact(extend(complete(3), {{0, 1}})));

  Graph witness3 = named_instance("sigma3witness");
  s = classify(witness3);
  CHECK(s.sigma == 3);
  CHECK_FALSE(s.witness.has_value());
  CHECK(oracle::stretch_index_exact(witness3) == 3);

  CHECK_THROWS_AS(stretch_class(Graph(3, {Edge(0, 1)}), SplitPartition{}),
                  std::invalid_argument);
}

TEST_CASE("stretch witnesses are spanning trees with stretch at most 2") {
  for (uint64_t seed = 1; seed <= 60; seed++) {
    GeneratorParams p;
    p.clique_size = 1 + seed % 6;
    p.independent_count = (p.clique_size > 1) ? seed % 4 : 0;
    p.pendant_count = seed % 4;
    p.seed = seed * 3;
    GeneratedGraph gg = random_split_graph(p);
    if (gg.graph.n() < 2) continue;
    StretchClass s = stretch_class(gg.graph, gg.partition);
    if (s.sigma > 2) continue;
    REQUIRE(s.witness.has_value());
    int tree_edges = 0;
    for (int v = 0; v < gg.graph.n(); v++)
      if (s.witness->parent[v] >= 0) {
        tree_edges++;
        CHECK(gg.graph.has_edge(v, s.witness->parent[v]));
      }
    CHECK(tree_edges == gg.graph.n() - 1);
  }
}

TEST_CASE("tree_2_spanner fixed cases") {
  Graph g = extend(complete(3), {{0, 1}});
  SpanningTree t = tree_2_spanner(g, 0);
  CHECK(t.parent[1] == 0);
  CHECK(t.parent[2] == 0);
  CHECK(t.parent[3] == 0);

  // a tree comes back as itself
  SpanningTree pt = tree_2_spanner(path(4), 2);
  std::vector<Edge> edges = pt.edges();
  CHECK(edges.size() == 3);
  for (const Edge& e : edges) CHECK(path(4).has_edge(e.u, e.v));

  SpanningTree k5 = tree_2_spanner(complete(5), 0);
  for (int v = 1; v < 5; v++) CHECK(k5.parent[v] == 0);
}

TEST_CASE("stretch classification agrees with the oracle on small split graphs") {
  int checked = 0;
  for (uint64_t seed = 1; checked < 150; seed++) {
    GeneratorParams p;
    p.clique_size = 1 + seed % 6;
    p.independent_count = (p.clique_size > 1) ? seed % 4 : 0;
    p.pendant_count = seed % 3;
    p.seed = seed * 7919;
    GeneratedGraph gg = random_split_graph(p);
    if (gg.graph.n() > 8 || gg.graph.n() < 2) continue;
    checked++;
    CHECK(stretch_class(gg.graph, gg.partition).sigma ==
          oracle::stretch_index_exact(gg.graph));
  }
}

TEST_CASE("pendants of sigma=2 graphs live in the independent side") {
  int checked = 0;
  for (uint64_t seed = 1; checked < 80; seed++) {
    GeneratorParams p;
    p.clique_size = 3 + seed % 5;
    p.independent_count = seed % 4;
    p.pendant_count = 1 + seed % 3;
    p.seed = seed * 131;
    GeneratedGraph gg = random_split_graph(p);
    StretchClass s = stretch_class(gg.graph, gg.partition);
    if (s.sigma != 2 || gg.partition.clique.size() < 2) continue;
    checked++;
    PendantDecomposition pd = pendant_decomposition(gg.graph);
    for (int pendant : pd.pendants) {
      bool in_y = std::count(gg.partition.independent.begin(), gg.partition.independent.end(),
                             pendant) > 0;
      CHECK(in_y);
    }
  }
}
