#include "splitcolor/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace splitcolor {

using nlohmann::json;

int LabeledGraph::id_of(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); i++)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; i++) out[i] = std::to_string(i);
  return out;
}

struct LabelTable {
  std::map<std::string, int> ids;
  std::vector<std::string> labels;
  int intern(const std::string& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(labels.size());
    ids.emplace(s, id);
    labels.push_back(s);
    return id;
  }
};

}  // namespace

LabeledGraph parse_edge_list(std::istream& in) {
  LabelTable table;
  std::vector<std::pair<int, int>> raw_edges;
  bool dimacs = false;
  int declared_n = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "c" && !dimacs && table.labels.empty() && raw_edges.empty()) continue;
    if (tok[0] == "c" && dimacs) continue;
    if (tok[0] == "p") {
      if (tok.size() < 4 || (tok[1] != "edge" && tok[1] != "edges" && tok[1] != "col"))
        throw ParseError("line " + std::to_string(lineno) + ": malformed DIMACS header");
      try {
        declared_n = std::stoi(tok[2]);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad vertex count in header");
      }
      if (declared_n < 0)
        throw ParseError("line " + std::to_string(lineno) + ": negative vertex count");
      dimacs = true;
      for (int v = 1; v <= declared_n; v++) table.intern(std::to_string(v));
      continue;
    }
    if (dimacs) {
      if (tok[0] != "e" || tok.size() != 3)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'e u v'");
      int u, v;
      try {
        u = std::stoi(tok[1]);
        v = std::stoi(tok[2]);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": non-numeric DIMACS endpoint");
      }
      if (u < 1 || v < 1 || u > declared_n || v > declared_n)
        throw ParseError("line " + std::to_string(lineno) + ": endpoint outside 1.." +
                         std::to_string(declared_n));
      if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop");
      raw_edges.emplace_back(u - 1, v - 1);
      continue;
    }
    if (tok.size() == 1) {
      table.intern(tok[0]);  // isolated vertex declaration
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'u v', got " +
                       std::to_string(tok.size()) + " tokens");
    int u = table.intern(tok[0]), v = table.intern(tok[1]);
    if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop at '" + tok[0] + "'");
    raw_edges.emplace_back(u, v);
  }
  LabeledGraph out;
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (auto [u, v] : raw_edges) edges.emplace_back(u, v);
  out.graph = Graph(static_cast<int>(table.labels.size()), edges);
  out.labels = std::move(table.labels);
  return out;
}

LabeledGraph parse_json_graph(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("graph JSON needs an object with 'n' and 'edges'");
  int n = j["n"].get<int>();
  if (n < 0) throw ParseError("negative 'n'");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [u, v] pair");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint outside 0..n-1");
    if (u == v) throw ParseError("loop in edge list");
    edges.emplace_back(u, v);
  }
  LabeledGraph out;
  out.graph = Graph(n, edges);
  if (j.contains("labels")) {
    out.labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(out.labels.size()) != n)
      throw ParseError("'labels' must list exactly n entries");
  } else {
    out.labels = default_labels(n);
  }
  return out;
}

LabeledGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  if (c == '{') return parse_json_graph(in);
  return parse_edge_list(in);
}

std::string emit_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  std::vector<char> touched(g.graph.n(), 0);
  for (const Edge& e : g.graph.edges()) {
    touched[e.u] = touched[e.v] = 1;
    out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  }
  for (int v = 0; v < g.graph.n(); v++)
    if (!touched[v]) out << g.label(v) << '\n';
  return out.str();
}

std::string emit_json_graph(const LabeledGraph& g) {
  json j;
  j["n"] = g.graph.n();
  j["edges"] = json::array();
  for (const Edge& e : g.graph.edges()) j["edges"].push_back({e.u, e.v});
  j["labels"] = g.labels;
  return j.dump(2) + "\n";
}

namespace {

json coloring_edges_json(const LabeledGraph& g, const std::map<Edge, int>& colors) {
  json arr = json::array();
  for (const auto& [e, c] : colors) {
    json rec;
    rec["u"] = g.label(e.u);
    rec["v"] = g.label(e.v);
    rec["color"] = c;
    arr.push_back(rec);
  }
  return arr;
}

}  // namespace

std::string emit_edge_coloring_json(const LabeledGraph& g, const EdgeColoring& c) {
  json j;
  j["mode"] = "edge";
  j["colors"] = c.palette_size();
  j["edges"] = coloring_edges_json(g, c.colors);
  return j.dump(2) + "\n";
}

std::string emit_total_coloring_json(const LabeledGraph& g, const TotalColoring& c) {
  json j;
  j["mode"] = "total";
  j["colors"] = c.palette_size();
  j["edges"] = coloring_edges_json(g, c.edge_colors);
  j["vertices"] = json::array();
  for (int v = 0; v < g.graph.n(); v++) {
    json rec;
    rec["v"] = g.label(v);
    rec["color"] = c.vertex_colors[v];
    j["vertices"].push_back(rec);
  }
  return j.dump(2) + "\n";
}

std::string emit_edge_coloring_dot(const LabeledGraph& g, const EdgeColoring& c) {
  std::ostringstream out;
  out << "graph coloring {\n";
  for (const Edge& e : g.graph.edges())
    out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\" [color=" << c.color_of(e)
        << "];\n";
  out << "}\n";
  return out.str();
}

std::string emit_total_coloring_dot(const LabeledGraph& g, const TotalColoring& c) {
  std::ostringstream out;
  out << "graph coloring {\n  node [style=filled];\n";
  for (int v = 0; v < g.graph.n(); v++)
    out << "  \"" << g.label(v) << "\" [fillcolor=" << c.vertex_colors[v] << "];\n";
  for (const Edge& e : g.graph.edges())
    out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v)
        << "\" [color=" << c.edge_color_of(e) << "];\n";
  out << "}\n";
  return out.str();
}

ParsedColoring parse_coloring_json(std::istream& in, const LabeledGraph& g) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid coloring JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("mode") || !j.contains("edges"))
    throw ParseError("coloring JSON needs 'mode' and 'edges'");
  ParsedColoring out;
  std::string mode = j["mode"].get<std::string>();
  if (mode == "total") out.total = true;
  else if (mode != "edge") throw ParseError("mode must be 'edge' or 'total'");
  out.declared_colors = j.value("colors", 0);
  for (const auto& rec : j["edges"]) {
    std::string lu = rec.at("u").get<std::string>(), lv = rec.at("v").get<std::string>();
    int u = g.id_of(lu), v = g.id_of(lv);
    if (u < 0 || v < 0)
      throw ParseError("coloring names vertex '" + (u < 0 ? lu : lv) + "' not present in the graph");
    if (!g.graph.has_edge(u, v))
      throw ParseError("coloring names edge " + lu + "-" + lv + " not present in the graph");
    int color = rec.at("color").get<int>();
    if (out.total) out.totals.edge_colors[Edge(u, v)] = color;
    else out.edges.colors[Edge(u, v)] = color;
  }
  if (out.total) {
    out.totals.vertex_colors.assign(g.graph.n(), 0);
    if (!j.contains("vertices")) throw ParseError("total coloring needs 'vertices'");
    for (const auto& rec : j["vertices"]) {
      std::string lv = rec.at("v").get<std::string>();
      int v = g.id_of(lv);
      if (v < 0) throw ParseError("coloring names vertex '" + lv + "' not present in the graph");
      out.totals.vertex_colors[v] = rec.at("color").get<int>();
    }
  }
  return out;
}

}  // namespace splitcolor
