#include "splitcolor/overfull.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace splitcolor {

bool is_overfull(const Graph& g) {
  int delta = 0;
  for (int v = 0; v < g.n(); v++) delta = std::max(delta, g.degree(v));
  return static_cast<long long>(g.m()) > static_cast<long long>(delta) * (g.n() / 2);
}

namespace {

OverfullCertificate certificate_for(const Graph& g, int center) {
  std::vector<int> closed{center};
  for (int w : g.neighbors(center)) closed.push_back(w);
  InducedSubgraph sub = induced_subgraph(g, closed);
  OverfullCertificate c;
  c.center = center;
  c.neighborhood_size = sub.graph.n();
  c.edge_count = sub.graph.m();
  for (int v = 0; v < sub.graph.n(); v++)
    c.delta_local = std::max(c.delta_local, sub.graph.degree(v));
  c.slack = c.edge_count - static_cast<long long>(c.delta_local) * (c.neighborhood_size / 2);
  return c;
}

}  // namespace

std::optional<OverfullCertificate> neighborhood_overfull_direct(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  int delta = max_degree(g).delta;
  for (int v = 0; v < g.n(); v++) {
    if (g.degree(v) != delta) continue;
    OverfullCertificate c = certificate_for(g, v);
    if (c.slack > 0) return c;
  }
  return std::nullopt;
}

std::optional<OverfullCertificate> neighborhood_overfull_sigma2(const Graph& g,
                                                                const PendantDecomposition& pd) {
  int delta = max_degree(g).delta;
  SplitRecognition rec = recognize_split(g);
  if (delta % 2 != 0 || !rec.is_split() || stretch_class(g, *rec.partition).sigma != 2)
    throw std::invalid_argument("not a (sigma=2) split graph / odd maximum degree");
  const Graph& core = pd.core.graph;
  for (int cv = 0; cv < core.n(); cv++) {
    if (core.degree(cv) != core.n() - 1) continue;  // only vertices universal in H
    OverfullCertificate c = certificate_for(g, pd.core.to_original[cv]);
    if (c.delta_local == delta && c.slack > 0) return c;
  }
  return std::nullopt;
}

namespace {

// Blossom-contraction maximum matching (Edmonds), queue-based formulation.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(g.n()), match_(n_, -1) {}

  std::vector<int> run() {
    // greedy seed
    for (int v = 0; v < n_; v++)
      if (match_[v] < 0)
        for (int w : g_.neighbors(v))
          if (match_[w] < 0) {
            match_[v] = w;
            match_[w] = v;
            break;
          }
    for (int v = 0; v < n_; v++)
      if (match_[v] < 0) {
        int leaf = find_path(v);
        while (leaf >= 0) {  // augment
          int pv = p_[leaf], ppv = match_[pv];
          match_[leaf] = pv;
          match_[pv] = leaf;
          leaf = ppv;
        }
      }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> mark(n_, 0);
    for (;;) {
      a = base_[a];
      mark[a] = 1;
      if (match_[a] < 0) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (mark[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      inBlossom_[base_[v]] = 1;
      inBlossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    p_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && p_[match_[to]] >= 0)) {
          // odd cycle: contract the blossom
          int b = lca(v, to);
          inBlossom_.assign(n_, 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; i++)
            if (inBlossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (p_[to] < 0) {
          p_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, inBlossom_;
};

}  // namespace

MatchingResult max_matching(const Graph& g) {
  MatchingResult r;
  std::vector<int> match = Blossom(g).run();
  for (int v = 0; v < g.n(); v++)
    if (match[v] > v) r.matching.emplace_back(v, match[v]);
  return r;
}

HiltonCheck hilton_condition(const Graph& h) {
  if (h.n() % 2 != 0 || !universal_vertex(h).has_value())
    throw std::invalid_argument("Hilton precondition: even order and a universal vertex required");
  Graph comp = complement(h);
  HiltonCheck out;
  out.order = h.n();
  out.complement_edges = comp.m();
  out.complement_matching = max_matching(comp).size();
  out.type2 = 2 * (out.complement_edges + out.complement_matching) < out.order;
  return out;
}

}  // namespace splitcolor
