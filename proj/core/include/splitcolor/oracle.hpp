#ifndef SPLITCOLOR_ORACLE_HPP
#define SPLITCOLOR_ORACLE_HPP

#include "splitcolor/graph.hpp"

namespace splitcolor {
namespace oracle {

// Ground-truth brute force, implemented apart from the production
// colorers: different search shape, its own pruning, its own RNG. Used
// by the test suites and the CLI verify/fuzz paths.

struct OracleLimits {
  int max_n = 14;                     // chromatic searches
  long long max_nodes = 400'000'000;  // exhaustive search guard
};

// Exact chromatic index. Decides Delta-colorability exhaustively; a
// negative answer is Delta+1 by Vizing's bound, no second search needed.
int chromatic_index_exact(const Graph& g, OracleLimits limits = {});

// Exact total chromatic number. Budgets are tried upward from Delta+1.
// For split inputs a failed Delta+1 settles the answer at Delta+2 (split
// graphs satisfy the total coloring conjecture); otherwise the climb is
// capped by the rotation bound chi'' <= n+1.
int total_chromatic_exact(const Graph& g, OracleLimits limits = {});

// Exact stretch index by spanning-tree enumeration (guarded to n <= 9).
int stretch_index_exact(const Graph& g, int max_n = 9);

// Exact matching number by include/exclude recursion (guarded to m <= 24).
int max_matching_brute(const Graph& g, int max_m = 24);

enum class OverfullScan {
  Auto,         // full subsets when n <= 10, neighborhoods up to 14
  FullSubsets,  // n <= 10
  Neighborhood  // n <= 14
};

// Does some subgraph with the same maximum degree violate the matching
// capacity bound |E| <= Delta * floor(n/2)?
bool subgraph_overfull_brute(const Graph& g, OverfullScan scan = OverfullScan::Auto);

}  // namespace oracle
}  // namespace splitcolor

#endif
