#include "splitcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace splitcolor {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  edges_ = edges;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                  " " + std::to_string(e.v));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  m_ = static_cast<int>(edges_.size());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
  Edge e(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges_.begin());
}

DegreeReport max_degree(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("empty graph");
  DegreeReport r;
  for (int v = 0; v < g.n(); v++) r.delta = std::max(r.delta, g.degree(v));
  for (int v = 0; v < g.n(); v++)
    if (g.degree(v) == r.delta) r.witnesses.push_back(v);
  return r;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n(); u++)
    for (int v = u + 1; v < g.n(); v++)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty vertex set");
  InducedSubgraph out;
  out.to_original = vertices;
  std::sort(out.to_original.begin(), out.to_original.end());
  out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                        out.to_original.end());
  out.from_original.assign(g.n(), -1);
  for (int i = 0; i < static_cast<int>(out.to_original.size()); i++) {
    int v = out.to_original[i];
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
    out.from_original[v] = i;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(out.to_original.size()); i++)
    for (int w : g.neighbors(out.to_original[i]))
      if (out.from_original[w] > i) edges.emplace_back(i, out.from_original[w]);
  out.graph = Graph(static_cast<int>(out.to_original.size()), edges);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        count++;
        stack.push_back(w);
      }
  }
  return count == g.n();
}

}  // namespace splitcolor
