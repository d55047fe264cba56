#include "splitcolor/split.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace splitcolor {

namespace {

std::optional<NotSplit> find_2k2(const Graph& g) {
  const auto& es = g.edges();
  for (size_t i = 0; i < es.size(); i++)
    for (size_t j = i + 1; j < es.size(); j++) {
      int a = es[i].u, b = es[i].v, c = es[j].u, d = es[j].v;
      if (a == c || a == d || b == c || b == d) continue;
      if (!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d))
        return NotSplit{NotSplit::Kind::TwoK2, {a, b, c, d}};
    }
  return std::nullopt;
}

std::optional<NotSplit> find_c4(const Graph& g) {
  for (int a = 0; a < g.n(); a++)
    for (int c = a + 1; c < g.n(); c++) {
      if (g.has_edge(a, c)) continue;
      std::vector<int> common;
      for (int b : g.neighbors(a))
        if (g.has_edge(b, c)) common.push_back(b);
      for (size_t i = 0; i < common.size(); i++)
        for (size_t j = i + 1; j < common.size(); j++)
          if (!g.has_edge(common[i], common[j]))
            return NotSplit{NotSplit::Kind::C4, {a, common[i], c, common[j]}};
    }
  return std::nullopt;
}

std::optional<NotSplit> find_c5(const Graph& g) {
  if (g.n() > 32) return std::nullopt;  // certificate search guard
  int n = g.n();
  std::vector<int> s(5);
  for (s[0] = 0; s[0] < n; s[0]++)
    for (s[1] = s[0] + 1; s[1] < n; s[1]++)
      for (s[2] = s[1] + 1; s[2] < n; s[2]++)
        for (s[3] = s[2] + 1; s[3] < n; s[3]++)
          for (s[4] = s[3] + 1; s[4] < n; s[4]++) {
            int deg[5] = {0, 0, 0, 0, 0}, edges = 0;
            for (int i = 0; i < 5; i++)
              for (int j = i + 1; j < 5; j++)
                if (g.has_edge(s[i], s[j])) { deg[i]++; deg[j]++; edges++; }
            if (edges != 5) continue;
            bool cycle = true;
            for (int i = 0; i < 5; i++) cycle &= deg[i] == 2;
            if (!cycle) continue;
            // order the cycle
            std::vector<int> order{s[0]};
            std::vector<char> used(5, 0);
            used[0] = 1;
            while (order.size() < 5)
              for (int i = 0; i < 5; i++)
                if (!used[i] && g.has_edge(order.back(), s[i])) {
                  order.push_back(s[i]);
                  used[i] = 1;
                  break;
                }
            return NotSplit{NotSplit::Kind::C5, order};
          }
  return std::nullopt;
}

}  // namespace

SplitRecognition recognize_split(const Graph& g) {
  int n = g.n();
  std::vector<int> byDeg(n);
  std::iota(byDeg.begin(), byDeg.end(), 0);
  std::sort(byDeg.begin(), byDeg.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  // Hammer-Simeone: split iff sum of the top h degrees equals
  // h(h-1) + sum of the rest, where h = max{i : d_i >= i-1}.
  int h = 0;
  for (int i = 0; i < n; i++)
    if (g.degree(byDeg[i]) >= i) h = i + 1;
  long long top = 0, rest = 0;
  for (int i = 0; i < n; i++)
    (i < h ? top : rest) += g.degree(byDeg[i]);
  if (top != static_cast<long long>(h) * (h - 1) + rest) {
    SplitRecognition r;
    if (auto c = find_2k2(g)) r.certificate = *c;
    else if (auto c4 = find_c4(g)) r.certificate = *c4;
    else if (auto c5 = find_c5(g)) r.certificate = *c5;
    else r.certificate = NotSplit{};
    return r;
  }
  SplitPartition sp;
  std::vector<char> inX(n, 0);
  for (int i = 0; i < h; i++) inX[byDeg[i]] = 1;
  // maximalize: pull in any independent vertex adjacent to all of X
  for (bool moved = true; moved;) {
    moved = false;
    int xsize = 0;
    for (int v = 0; v < n; v++) xsize += inX[v];
    for (int y = 0; y < n && !moved; y++) {
      if (inX[y]) continue;
      int cnt = 0;
      for (int w : g.neighbors(y)) cnt += inX[w];
      if (cnt == xsize) {
        inX[y] = 1;
        moved = true;
      }
    }
  }
  for (int v = 0; v < n; v++)
    (inX[v] ? sp.clique : sp.independent).push_back(v);
  for (size_t i = 0; i < sp.clique.size(); i++)
    for (size_t j = i + 1; j < sp.clique.size(); j++)
      if (!g.has_edge(sp.clique[i], sp.clique[j]))
        throw std::logic_error("split partition construction: X not a clique");
  for (size_t i = 0; i < sp.independent.size(); i++)
    for (size_t j = i + 1; j < sp.independent.size(); j++)
      if (g.has_edge(sp.independent[i], sp.independent[j]))
        throw std::logic_error("split partition construction: Y not independent");
  SplitRecognition r;
  r.partition = std::move(sp);
  return r;
}

PendantDecomposition pendant_decomposition(const Graph& g) {
  if (g.n() <= 1) throw std::invalid_argument("trivial graph");
  if (!is_connected(g)) throw std::invalid_argument("disconnected graph");
  PendantDecomposition pd;
  pd.pendant_attach.assign(g.n(), -1);
  std::vector<int> keep;
  for (int v = 0; v < g.n(); v++) {
    if (g.degree(v) == 1) {
      pd.pendants.push_back(v);
      pd.pendant_attach[v] = g.neighbors(v)[0];
    } else {
      keep.push_back(v);
    }
  }
  if (keep.empty()) {
    // K2: both endpoints are pendant, the core is empty
    pd.core.graph = Graph(0);
    pd.core.from_original.assign(g.n(), -1);
    return pd;
  }
  pd.core = induced_subgraph(g, keep);
  return pd;
}

std::optional<int> universal_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); v++)
    if (g.degree(v) == g.n() - 1) return v;
  return std::nullopt;
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(parent.size()); v++)
    if (parent[v] >= 0) out.emplace_back(v, parent[v]);
  return out;
}

namespace {

// Iterated pendant peeling. Returns the attach vertex per peeled vertex
// (-1 for survivors) and the ids of the surviving core.
struct Peeling {
  std::vector<int> attach;
  std::vector<int> core;
};

Peeling peel_to_fixpoint(const Graph& g) {
  Peeling p;
  p.attach.assign(g.n(), -1);
  std::vector<int> deg(g.n());
  std::vector<char> alive(g.n(), 1);
  for (int v = 0; v < g.n(); v++) deg[v] = g.degree(v);
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.n(); v++) {
      if (!alive[v] || deg[v] != 1) continue;
      for (int w : g.neighbors(v))
        if (alive[w]) {
          p.attach[v] = w;
          deg[w]--;
        }
      alive[v] = 0;
      changed = true;
    }
  }
  for (int v = 0; v < g.n(); v++)
    if (alive[v]) p.core.push_back(v);
  return p;
}

bool tree_distance_at_most_2(const SpanningTree& t, int a, int b) {
  const auto& p = t.parent;
  if (p[a] == b || p[b] == a) return true;
  if (p[a] >= 0 && p[a] == p[b]) return true;
  if (p[a] >= 0 && p[p[a]] == b) return true;
  if (p[b] >= 0 && p[p[b]] == a) return true;
  return false;
}

}  // namespace

SpanningTree tree_2_spanner(const Graph& g, int universal_of_core) {
  Peeling peel = peel_to_fixpoint(g);
  SpanningTree t;
  t.root = universal_of_core;
  t.parent.assign(g.n(), -1);
  bool in_core = false;
  for (int v : peel.core) in_core |= v == universal_of_core;
  if (!in_core) throw std::invalid_argument("vertex is not in the pendant-free core");
  for (int v : peel.core)
    if (v != universal_of_core) t.parent[v] = universal_of_core;
  for (int v = 0; v < g.n(); v++)
    if (peel.attach[v] >= 0) t.parent[v] = peel.attach[v];
  for (const Edge& e : g.edges())
    if (!tree_distance_at_most_2(t, e.u, e.v))
      throw std::logic_error("tree 2-spanner verification failed");
  return t;
}

StretchClass stretch_class(const Graph& g, const SplitPartition& sp) {
  if (!is_connected(g)) throw std::invalid_argument("disconnected graph");
  StretchClass out;
  if (g.m() == g.n() - 1 || sp.clique.size() <= 1) {
    // trees (stars and bi-stars in the split world)
    out.sigma = 1;
    SpanningTree t;
    t.root = 0;
    t.parent.assign(g.n(), -1);
    std::vector<int> stack{0};
    std::vector<char> seen(g.n(), 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          t.parent[w] = v;
          stack.push_back(w);
        }
    }
    out.witness = std::move(t);
    return out;
  }
  Peeling peel = peel_to_fixpoint(g);
  // core is nonempty here: a connected non-tree graph keeps its cycles
  int core_size = static_cast<int>(peel.core.size());
  std::vector<char> alive(g.n(), 0);
  for (int v : peel.core) alive[v] = 1;
  int universal = -1;
  for (int v : peel.core) {
    int d = 0;
    for (int w : g.neighbors(v)) d += alive[w];
    if (d == core_size - 1) {
      universal = v;
      break;
    }
  }
  if (universal >= 0) {
    out.sigma = 2;
    out.witness = tree_2_spanner(g, universal);
  } else {
    out.sigma = 3;
    out.reason = "pendant-free core has no universal vertex";
  }
  return out;
}

}  // namespace splitcolor
