#ifndef SPLITCOLOR_IO_HPP
#define SPLITCOLOR_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitcolor/coloring.hpp"
#include "splitcolor/graph.hpp"

namespace splitcolor {

class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graph plus the original vertex labels (labels[id] = label). Parsers
// normalize arbitrary labels to dense ids in first-appearance order and
// keep the map so emitted colorings stay diffable.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  std::string label(int v) const { return labels[v]; }
  int id_of(const std::string& label) const;  // -1 if unknown
};

// Edge list: one "u v" per line (labels are arbitrary tokens), '#'
// comments, single-token lines declare isolated vertices. DIMACS-style
// files ("c" comments, "p edge <n> <m>" header, "e u v" 1-based lines)
// are accepted in the same reader.
LabeledGraph parse_edge_list(std::istream& in);

// JSON object {"n": int, "edges": [[u,v], ...], "labels": [...]?}.
LabeledGraph parse_json_graph(std::istream& in);

// Dispatch on content: JSON when the first non-space byte is '{'.
LabeledGraph parse_graph_file(const std::string& path);

std::string emit_edge_list(const LabeledGraph& g);
std::string emit_json_graph(const LabeledGraph& g);

// Coloring files: {"mode": "edge"|"total", "colors": k,
//   "edges": [{"u": label, "v": label, "color": c}, ...],
//   "vertices": [{"v": label, "color": c}, ...]} (total mode only).
std::string emit_edge_coloring_json(const LabeledGraph& g, const EdgeColoring& c);
std::string emit_total_coloring_json(const LabeledGraph& g, const TotalColoring& c);

// DOT export: integer `color` attribute per edge, `fillcolor` per vertex.
std::string emit_edge_coloring_dot(const LabeledGraph& g, const EdgeColoring& c);
std::string emit_total_coloring_dot(const LabeledGraph& g, const TotalColoring& c);

struct ParsedColoring {
  bool total = false;
  int declared_colors = 0;
  EdgeColoring edges;
  TotalColoring totals;
};

// Re-reads an emitted coloring against the graph it claims to color.
// Unknown labels or absent edges raise ParseError with a diagnostic.
ParsedColoring parse_coloring_json(std::istream& in, const LabeledGraph& g);

}  // namespace splitcolor

#endif
