#ifndef SPLITCOLOR_TEST_HELPERS_HPP
#define SPLITCOLOR_TEST_HELPERS_HPP

#include <vector>

#include "splitcolor/graph.hpp"
#include "splitcolor/rng.hpp"

namespace sc_test {

using splitcolor::Edge;
using splitcolor::Graph;

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; i++) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; i++) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; i++) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

// center extended by extra vertices, each adjacent to the listed vertices
inline Graph extend(const Graph& base, const std::vector<std::vector<int>>& attach) {
  std::vector<Edge> e = base.edges();
  int next = base.n();
  for (const auto& nbrs : attach) {
    for (int w : nbrs) e.emplace_back(next, w);
    next++;
  }
  return Graph(next, e);
}

// Erdos-Renyi-ish random graph for algebraic properties.
inline Graph random_graph(int n, int percent, uint64_t seed) {
  splitcolor::SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (rng.below(100) < static_cast<uint64_t>(percent)) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace sc_test

#endif
