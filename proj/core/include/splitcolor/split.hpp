#ifndef SPLITCOLOR_SPLIT_HPP
#define SPLITCOLOR_SPLIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "splitcolor/graph.hpp"

namespace splitcolor {

// Witness of splitness: X a maximal clique, Y an independent set,
// X and Y partition the vertices.
struct SplitPartition {
  std::vector<int> clique;       // X, ascending
  std::vector<int> independent;  // Y, ascending
};

// Certificate that a graph is not split: an induced 2K2, C4 or C5.
struct NotSplit {
  enum class Kind { TwoK2, C4, C5, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<int> vertices;  // the forbidden subgraph, cycle/edge order
};

struct SplitRecognition {
  std::optional<SplitPartition> partition;
  std::optional<NotSplit> certificate;
  bool is_split() const { return partition.has_value(); }
};

// Degree-sequence split test. On success the partition has X maximal:
// no Y vertex is adjacent to all of X.
SplitRecognition recognize_split(const Graph& g);

// Pendant vertices (degree exactly 1) and the core H = G[V \ P].
// Single removal round; matches how the coloring algorithms use P.
struct PendantDecomposition {
  std::vector<int> pendants;             // P, ascending
  std::vector<int> pendant_attach;       // per vertex: unique neighbor if pendant, else -1
  InducedSubgraph core;                  // H, empty graph when every vertex is pendant (K2)
};

// Requires a connected graph on at least 2 vertices.
PendantDecomposition pendant_decomposition(const Graph& g);

// Smallest-id vertex adjacent to every other vertex, if any.
std::optional<int> universal_vertex(const Graph& g);

// Spanning tree as a parent array rooted at `root` (parent[root] = -1).
struct SpanningTree {
  int root = -1;
  std::vector<int> parent;
  std::vector<Edge> edges() const;
};

struct StretchClass {
  int sigma = 0;                       // 1, 2 or 3
  std::optional<SpanningTree> witness; // present for sigma <= 2
  std::string reason;                  // tag for sigma = 3
};

// Stretch classification of a connected split graph: sigma = 1 for trees,
// sigma = 2 iff the pendant-free core (pendant removal iterated to a
// fixpoint) has a universal vertex, sigma = 3 otherwise.
StretchClass stretch_class(const Graph& g, const SplitPartition& sp);

// Star at u over the iterated core plus pendant chains. Every graph edge
// ends up within tree distance 2; verified before returning.
SpanningTree tree_2_spanner(const Graph& g, int universal_of_core);

}  // namespace splitcolor

#endif
