#include "splitcolor/classify.hpp"

#include <algorithm>

namespace splitcolor {

namespace {

int graph_delta(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); v++) d = std::max(d, g.degree(v));
  return d;
}

// Validated sigma=2 context shared by both classifiers.
struct Sigma2Context {
  SplitPartition partition;
  PendantDecomposition pd;
  int delta = 0;
};

Sigma2Context require_sigma2(const Graph& g) {
  if (!is_connected(g)) throw OutOfScopeError("disconnected graph", 0);
  SigmaAnalysis a = analyze_structure(g);
  if (!a.recognition.is_split()) throw OutOfScopeError("not a split graph", 0);
  int sigma = a.stretch->sigma;
  if (sigma != 2)
    throw OutOfScopeError("out of scope: sigma=" + std::to_string(sigma) +
                              ", use stretch_class first",
                          sigma);
  Sigma2Context ctx;
  ctx.partition = *a.recognition.partition;
  ctx.pd = pendant_decomposition(g);
  ctx.delta = graph_delta(g);
  return ctx;
}

EdgeColoring require_colored(EdgeColorSearch&& search, const std::string& where) {
  if (search.status == SearchStatus::NodeCapExceeded)
    throw std::runtime_error("edge coloring search hit the node cap in " + where);
  if (search.status == SearchStatus::Infeasible)
    throw std::logic_error("guaranteed-feasible edge coloring came back infeasible in " + where);
  return std::move(search.coloring);
}

TotalColoring require_colored(TotalColorSearch&& search, const std::string& where) {
  if (search.status == SearchStatus::NodeCapExceeded)
    throw std::runtime_error("total coloring search hit the node cap in " + where);
  if (search.status == SearchStatus::Infeasible)
    throw std::logic_error("guaranteed-feasible total coloring came back infeasible in " + where);
  return std::move(search.coloring);
}

}  // namespace

SigmaAnalysis analyze_structure(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("disconnected graph");
  SigmaAnalysis a;
  a.recognition = recognize_split(g);
  if (a.recognition.is_split()) a.stretch = stretch_class(g, *a.recognition.partition);
  return a;
}

EdgeColoring extend_pendant_edges(const Graph& g, const PendantDecomposition& pd,
                                  const EdgeColoring& core_coloring) {
  const Graph& h = pd.core.graph;
  VerifyResult check = verify_edge_coloring(h, core_coloring, h.m() + 1);
  if (!check.ok) throw std::invalid_argument("improper core coloring: " + check.message);

  EdgeColoring out;
  for (const auto& [e, c] : core_coloring.colors)
    out.colors[Edge(pd.core.to_original[e.u], pd.core.to_original[e.v])] = c;
  ColorState state = ColorState::from_edge_coloring(g, out);

  std::vector<int> order = pd.pendants;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pd.pendant_attach[a] < pd.pendant_attach[b];
  });
  for (int v : order) {
    int x = pd.pendant_attach[v];
    int color;
    if (state.has_missing(x)) {
      color = state.smallest_missing(x);
    } else {
      color = state.palette().empty() ? 1 : *state.palette().rbegin() + 1;
      state.introduce_color(color);
    }
    out.colors[Edge(v, x)] = color;
    state.record_edge_color(v, x, color);
  }
  return out;
}

TotalColoring extend_pendant_total(const Graph& g, const PendantDecomposition& pd,
                                   const TotalColoring& core_coloring) {
  const Graph& h = pd.core.graph;
  VerifyResult check = verify_total_coloring(h, core_coloring, h.n() + h.m() + 1);
  if (!check.ok) throw std::invalid_argument("improper core coloring: " + check.message);

  TotalColoring out;
  out.vertex_colors.assign(g.n(), 0);
  for (const auto& [e, c] : core_coloring.edge_colors)
    out.edge_colors[Edge(pd.core.to_original[e.u], pd.core.to_original[e.v])] = c;
  for (int v = 0; v < h.n(); v++)
    out.vertex_colors[pd.core.to_original[v]] = core_coloring.vertex_colors[v];
  ColorState state = ColorState::from_total_coloring(g, out);

  std::vector<int> order = pd.pendants;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pd.pendant_attach[a] < pd.pendant_attach[b];
  });
  for (int v : order) {
    int x = pd.pendant_attach[v];
    const std::set<int>& at_x = state.edge_colors_at(x);
    if (at_x.empty()) throw std::invalid_argument("degenerate core: no edge color at attach vertex");
    int vertex_color = *at_x.begin();
    out.vertex_colors[v] = vertex_color;
    state.record_vertex_color(v, vertex_color);
    int edge_color;
    if (state.has_missing(x)) {
      edge_color = state.smallest_missing(x);
    } else {
      edge_color = *state.palette().rbegin() + 1;
      state.introduce_color(edge_color);
    }
    out.edge_colors[Edge(v, x)] = edge_color;
    state.record_edge_color(v, x, edge_color);
  }
  return out;
}

EdgeClassificationReport classify_edge(const Graph& g, SearchLimits limits) {
  Sigma2Context ctx = require_sigma2(g);
  EdgeClassificationReport report;

  auto finish_class1 = [&](EdgeColoring coloring, const std::string& branch) {
    coloring.compact();
    VerifyResult v = verify_edge_coloring(g, coloring, ctx.delta);
    if (!v.ok) throw std::logic_error("class-1 witness failed verification: " + v.message);
    report.verdict = EdgeVerdict::Class1;
    report.coloring = std::move(coloring);
    report.branch = branch;
    return report;
  };

  if (ctx.delta % 2 == 1) {
    // split graphs of odd maximum degree are Class 1
    return finish_class1(require_colored(edge_color_exact(g, ctx.delta, limits), "odd-delta"),
                         "chen-odd-delta");
  }
  if (universal_vertex(g).has_value()) {
    // even Delta forces odd order here; Class 2 iff subgraph-overfull
    if (auto cert = neighborhood_overfull_sigma2(g, ctx.pd)) {
      report.verdict = EdgeVerdict::Class2;
      report.certificate = *cert;
      report.branch = "universal-overfull";
      return report;
    }
    return finish_class1(
        require_colored(edge_color_exact(g, ctx.delta, limits), "universal-plantholt"),
        "universal-plantholt");
  }

  const Graph& core = ctx.pd.core.graph;
  int core_delta = graph_delta(core);
  if (is_overfull(core)) {
    if (core_delta == ctx.delta) {
      auto cert = neighborhood_overfull_sigma2(g, ctx.pd);
      if (!cert) throw std::logic_error("overfull core with equal degree but no certificate");
      report.verdict = EdgeVerdict::Class2;
      report.certificate = *cert;
      report.branch = "core-overfull";
      return report;
    }
    EdgeColoring hc = edge_color_delta_plus_one(core);
    return finish_class1(extend_pendant_edges(g, ctx.pd, hc), "core-overfull-extend");
  }
  EdgeColoring hc;
  std::string branch;
  if (core_delta % 2 == 1) {
    hc = edge_color_universal_even(core);
    branch = "core-behzad-extend";
  } else {
    hc = require_colored(edge_color_exact(core, core_delta, limits), "core-plantholt");
    branch = "core-plantholt-extend";
  }
  return finish_class1(extend_pendant_edges(g, ctx.pd, hc), branch);
}

TotalClassificationReport classify_total(const Graph& g, SearchLimits limits) {
  Sigma2Context ctx = require_sigma2(g);
  const Graph& core = ctx.pd.core.graph;
  int core_delta = graph_delta(core);
  TotalClassificationReport report;

  auto finish_type1 = [&](TotalColoring coloring, const std::string& branch) {
    coloring.compact();
    VerifyResult v = verify_total_coloring(g, coloring, ctx.delta + 1);
    if (!v.ok) throw std::logic_error("type-1 witness failed verification: " + v.message);
    report.verdict = TotalVerdict::Type1;
    report.coloring = std::move(coloring);
    report.branch = branch;
    return report;
  };

  if (core_delta % 2 == 0) {
    if (core_delta == ctx.delta) {
      // even maximum degree: Type 1, colored directly at Delta+1
      return finish_type1(
          require_colored(total_color_budget(g, ctx.delta + 1, limits), "chen-direct"),
          "chen-direct");
    }
    TotalColoring hc =
        require_colored(total_color_budget(core, core_delta + 1, limits), "chen-core");
    return finish_type1(extend_pendant_total(g, ctx.pd, hc), "chen-core-extend");
  }

  HiltonCheck hilton = hilton_condition(core);
  if (hilton.type2) {
    if (core_delta == ctx.delta) {
      report.verdict = TotalVerdict::Type2;
      report.hilton_witness = hilton;
      report.branch = "hilton-type2";
      return report;
    }
    // Type 2 core colored at Delta(H)+2, then extended
    TotalColoring hc =
        require_colored(total_color_budget(core, core_delta + 2, limits), "hilton-core");
    return finish_type1(extend_pendant_total(g, ctx.pd, hc), "hilton-core-extend");
  }
  TotalColoring hc =
      require_colored(total_color_budget(core, core_delta + 1, limits), "hilton-false-core");
  return finish_type1(extend_pendant_total(g, ctx.pd, hc), "hilton-false-extend");
}

FastPath class1_fast_path(const Graph& g, const PendantDecomposition& pd) {
  int delta = graph_delta(g);
  if (delta % 2 != 0) return FastPath::Inconclusive;
  const Graph& core = pd.core.graph;
  std::vector<char> has_pendant(g.n(), 0);
  for (int p : pd.pendants) has_pendant[pd.pendant_attach[p]] = 1;
  for (int cv = 0; cv < core.n(); cv++) {
    if (core.degree(cv) != core.n() - 1) continue;
    int v = pd.core.to_original[cv];
    if (g.degree(v) != delta) continue;
    if (!has_pendant[v]) return FastPath::Inconclusive;
  }
  return FastPath::Class1;
}

}  // namespace splitcolor
