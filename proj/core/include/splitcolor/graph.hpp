#ifndef SPLITCOLOR_GRAPH_HPP
#define SPLITCOLOR_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace splitcolor {

// Undirected edge with endpoints normalized so that u < v.
struct Edge {
  int u, v;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over dense vertex ids 0..n-1.
// Immutable after construction; adjacency lists are kept sorted.
// Loops are rejected, duplicate edges collapse to one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  // Edges in lexicographic order; index into this list is the edge id
  // used by colorings.
  const std::vector<Edge>& edges() const { return edges_; }
  // Index of edge {u,v} in edges(), or -1 if absent.
  int edge_index(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

struct DegreeReport {
  int delta = 0;
  std::vector<int> witnesses;  // all vertices attaining delta, ascending
};

// Maximum degree with witnesses. Throws on the empty graph.
DegreeReport max_degree(const Graph& g);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;   // new id -> original id
  std::vector<int> from_original; // original id -> new id, -1 if dropped
};

// Subgraph induced by the (nonempty) vertex set, relabeled to 0..|S|-1
// preserving id order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_connected(const Graph& g);

}  // namespace splitcolor

#endif
