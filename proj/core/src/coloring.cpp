#include "splitcolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitcolor {

namespace {

std::map<int, int> compaction_map(const std::set<int>& palette) {
  std::map<int, int> remap;
  int next = 1;
  for (int c : palette) remap[c] = next++;
  return remap;
}

}  // namespace

std::set<int> EdgeColoring::palette() const {
  std::set<int> p;
  for (const auto& [e, c] : colors) p.insert(c);
  return p;
}

void EdgeColoring::compact() {
  auto remap = compaction_map(palette());
  for (auto& [e, c] : colors) c = remap[c];
}

std::set<int> TotalColoring::palette() const {
  std::set<int> p;
  for (const auto& [e, c] : edge_colors) p.insert(c);
  for (int c : vertex_colors)
    if (c > 0) p.insert(c);
  return p;
}

void TotalColoring::compact() {
  auto remap = compaction_map(palette());
  for (auto& [e, c] : edge_colors) c = remap[c];
  for (int& c : vertex_colors)
    if (c > 0) c = remap[c];
}

ColorState ColorState::from_edge_coloring(const Graph& g, const EdgeColoring& c) {
  ColorState s(g.n());
  s.palette_ = c.palette();
  for (const auto& [e, col] : c.colors) {
    s.edge_at_[e.u].insert(col);
    s.edge_at_[e.v].insert(col);
    s.incident_[e.u].insert(col);
    s.incident_[e.v].insert(col);
  }
  for (int v = 0; v < g.n(); v++)
    std::set_difference(s.palette_.begin(), s.palette_.end(), s.incident_[v].begin(),
                        s.incident_[v].end(), std::inserter(s.missing_[v], s.missing_[v].end()));
  return s;
}

ColorState ColorState::from_total_coloring(const Graph& g, const TotalColoring& c) {
  ColorState s(g.n());
  s.palette_ = c.palette();
  for (const auto& [e, col] : c.edge_colors) {
    s.edge_at_[e.u].insert(col);
    s.edge_at_[e.v].insert(col);
    s.incident_[e.u].insert(col);
    s.incident_[e.v].insert(col);
  }
  for (int v = 0; v < g.n() && v < static_cast<int>(c.vertex_colors.size()); v++)
    if (c.vertex_colors[v] > 0) s.incident_[v].insert(c.vertex_colors[v]);
  for (int v = 0; v < g.n(); v++)
    std::set_difference(s.palette_.begin(), s.palette_.end(), s.incident_[v].begin(),
                        s.incident_[v].end(), std::inserter(s.missing_[v], s.missing_[v].end()));
  return s;
}

void ColorState::record_edge_color(int u, int v, int c) {
  for (int x : {u, v}) {
    edge_at_[x].insert(c);
    incident_[x].insert(c);
    missing_[x].erase(c);
  }
}

void ColorState::record_vertex_color(int v, int c) {
  incident_[v].insert(c);
  missing_[v].erase(c);
}

void ColorState::introduce_color(int c) {
  if (!palette_.insert(c).second) throw std::logic_error("color already in palette");
  for (size_t v = 0; v < missing_.size(); v++)
    if (!incident_[v].count(c)) missing_[v].insert(c);
}

bool ColorState::consistent() const {
  for (size_t v = 0; v < missing_.size(); v++)
    for (int c : missing_[v])
      if (incident_[v].count(c) || !palette_.count(c)) return false;
  return true;
}

std::vector<int> missing_colors(const ColorState& state, int v) {
  return state.missing(v);
}

VerifyResult verify_edge_coloring(const Graph& g, const EdgeColoring& c, int max_colors) {
  for (const Edge& e : g.edges())
    if (c.color_of(e) <= 0)
      return {false, "uncolored edge " + std::to_string(e.u) + "-" + std::to_string(e.v)};
  for (int v = 0; v < g.n(); v++) {
    std::set<int> seen;
    for (int w : g.neighbors(v)) {
      int col = c.color_of(Edge(v, w));
      if (!seen.insert(col).second)
        return {false, "color " + std::to_string(col) + " repeated at vertex " + std::to_string(v)};
    }
  }
  if (c.palette_size() > max_colors)
    return {false, "palette uses " + std::to_string(c.palette_size()) + " colors, budget " +
                       std::to_string(max_colors)};
  return {};
}

VerifyResult verify_total_coloring(const Graph& g, const TotalColoring& c, int max_colors) {
  if (static_cast<int>(c.vertex_colors.size()) != g.n())
    return {false, "vertex color table has wrong size"};
  for (int v = 0; v < g.n(); v++)
    if (c.vertex_colors[v] <= 0) return {false, "uncolored vertex " + std::to_string(v)};
  for (const Edge& e : g.edges())
    if (c.edge_color_of(e) <= 0)
      return {false, "uncolored edge " + std::to_string(e.u) + "-" + std::to_string(e.v)};
  for (const Edge& e : g.edges()) {
    if (c.vertex_colors[e.u] == c.vertex_colors[e.v])
      return {false, "adjacent vertices " + std::to_string(e.u) + "," + std::to_string(e.v) +
                         " share color " + std::to_string(c.vertex_colors[e.u])};
    int col = c.edge_color_of(e);
    if (col == c.vertex_colors[e.u] || col == c.vertex_colors[e.v])
      return {false, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " shares color with an endpoint"};
  }
  for (int v = 0; v < g.n(); v++) {
    std::set<int> seen;
    for (int w : g.neighbors(v)) {
      int col = c.edge_color_of(Edge(v, w));
      if (!seen.insert(col).second)
        return {false, "color " + std::to_string(col) + " repeated at vertex " + std::to_string(v)};
    }
  }
  if (c.palette_size() > max_colors)
    return {false, "palette uses " + std::to_string(c.palette_size()) + " colors, budget " +
                       std::to_string(max_colors)};
  return {};
}

}  // namespace splitcolor
