#ifndef SPLITCOLOR_OVERFULL_HPP
#define SPLITCOLOR_OVERFULL_HPP

#include <optional>
#include <vector>

#include "splitcolor/graph.hpp"
#include "splitcolor/split.hpp"

namespace splitcolor {

struct MatchingResult {
  std::vector<Edge> matching;
  int size() const { return static_cast<int>(matching.size()); }
};

// Certifies |E(G[N[v]])| > delta_local * floor(size/2).
struct OverfullCertificate {
  int center = -1;
  int neighborhood_size = 0;
  long long edge_count = 0;
  int delta_local = 0;
  long long slack = 0;  // edge_count - delta_local * floor(size/2), positive here
};

// |E(G)| > Delta(G) * floor(n/2), exact integer arithmetic.
bool is_overfull(const Graph& g);

// Direct definition: some vertex of maximum degree whose closed
// neighborhood induces an overfull graph.
std::optional<OverfullCertificate> neighborhood_overfull_direct(const Graph& g);

// Neighborhood-overfull test for (sigma=2)-split graphs with even maximum
// degree. Only vertices universal in the pendant-stripped core H are
// scanned; for this class the scan is sound and complete. Throws if the
// preconditions do not hold.
std::optional<OverfullCertificate> neighborhood_overfull_sigma2(const Graph& g,
                                                                const PendantDecomposition& pd);

// Maximum matching in a general graph, blossom contraction, O(n^3).
MatchingResult max_matching(const Graph& g);

struct HiltonCheck {
  bool type2 = false;
  long long complement_edges = 0;
  int complement_matching = 0;
  int order = 0;
};

// Hilton's condition for even-order graphs with a universal vertex:
// Type 2 iff |E(comp)| + matching(comp) < n/2. Evaluated as
// 2*(|E|+matching) < n to stay in integers. Throws if the order is odd
// or no universal vertex exists.
HiltonCheck hilton_condition(const Graph& h);

}  // namespace splitcolor

#endif
