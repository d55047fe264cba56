#ifndef SPLITCOLOR_COLORERS_HPP
#define SPLITCOLOR_COLORERS_HPP

#include "splitcolor/coloring.hpp"
#include "splitcolor/graph.hpp"

namespace splitcolor {

struct SearchLimits {
  long long max_nodes = 10'000'000;  // per exact-search call
};

enum class SearchStatus { Colored, Infeasible, NodeCapExceeded };

struct EdgeColorSearch {
  SearchStatus status = SearchStatus::Infeasible;
  EdgeColoring coloring;  // valid iff status == Colored
  long long nodes = 0;
};

struct TotalColorSearch {
  SearchStatus status = SearchStatus::Infeasible;
  TotalColoring coloring;
  long long nodes = 0;
};

// Proper edge coloring with at most Delta+1 colors: fan rotation with
// alternating-path recoloring. Deterministic.
EdgeColoring edge_color_delta_plus_one(const Graph& g);

// Delta-edge-coloring for even-order graphs with a universal vertex:
// round-robin 1-factorization of the complete graph restricted to E(G),
// palette compacted to the used colors. Throws if the preconditions fail.
EdgeColoring edge_color_universal_even(const Graph& g);

// Proper edge coloring within `budget` colors, or a proof that none
// exists. Budgets below Delta are trivially infeasible. A node-cap hit is
// reported as NodeCapExceeded, never as Infeasible.
EdgeColorSearch edge_color_exact(const Graph& g, int budget, SearchLimits limits = {});

// Proper total coloring within `budget` colors, or Infeasible.
// Budgets below Delta+1 are trivially infeasible.
TotalColorSearch total_color_budget(const Graph& g, int budget, SearchLimits limits = {});

}  // namespace splitcolor

#endif
