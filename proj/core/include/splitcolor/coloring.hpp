#ifndef SPLITCOLOR_COLORING_HPP
#define SPLITCOLOR_COLORING_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "splitcolor/graph.hpp"

namespace splitcolor {

// Proper edge coloring; colors are 1-based integers keyed by normalized edge.
struct EdgeColoring {
  std::map<Edge, int> colors;

  int color_of(const Edge& e) const {
    auto it = colors.find(e);
    return it == colors.end() ? 0 : it->second;
  }
  std::set<int> palette() const;
  int palette_size() const { return static_cast<int>(palette().size()); }
  // Renumber colors to 1..k preserving relative order.
  void compact();
};

// Proper total coloring: vertices and edges simultaneously.
struct TotalColoring {
  std::map<Edge, int> edge_colors;
  std::vector<int> vertex_colors;  // by vertex id, 0 = uncolored

  int edge_color_of(const Edge& e) const {
    auto it = edge_colors.find(e);
    return it == edge_colors.end() ? 0 : it->second;
  }
  std::set<int> palette() const;
  int palette_size() const { return static_cast<int>(palette().size()); }
  void compact();
};

// Palette bookkeeping for the pendant-extension procedures: tracks the
// palette, the edge colors seen at each vertex, and the missing-color
// lists L(v) = palette minus colors incident to v. For total colorings
// the vertex's own color counts as incident.
class ColorState {
 public:
  static ColorState from_edge_coloring(const Graph& g, const EdgeColoring& c);
  static ColorState from_total_coloring(const Graph& g, const TotalColoring& c);

  const std::set<int>& palette() const { return palette_; }
  const std::set<int>& edge_colors_at(int v) const { return edge_at_[v]; }
  bool has_missing(int v) const { return !missing_[v].empty(); }
  int smallest_missing(int v) const { return *missing_[v].begin(); }
  std::vector<int> missing(int v) const { return {missing_[v].begin(), missing_[v].end()}; }

  void record_edge_color(int u, int v, int c);
  void record_vertex_color(int v, int c);
  // New palette color: joins every vertex's missing list until seen there.
  void introduce_color(int c);

  bool consistent() const;  // L(v) disjoint from incident colors, for tests

 private:
  ColorState(int n) : edge_at_(n), incident_(n), missing_(n) {}
  std::set<int> palette_;
  std::vector<std::set<int>> edge_at_;    // C(v): colors on edges of v
  std::vector<std::set<int>> incident_;   // C[v]: plus the vertex color when set
  std::vector<std::set<int>> missing_;    // L(v)
};

// Ascending L(v) for the given state.
std::vector<int> missing_colors(const ColorState& state, int v);

struct VerifyResult {
  bool ok = true;
  std::string message;
};

// Properness, totality (every edge colored) and palette budget.
VerifyResult verify_edge_coloring(const Graph& g, const EdgeColoring& c, int max_colors);
// Adds vertex-vertex and vertex-edge clash checks.
VerifyResult verify_total_coloring(const Graph& g, const TotalColoring& c, int max_colors);

}  // namespace splitcolor

#endif
