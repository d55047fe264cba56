#include "splitcolor/colorers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "splitcolor/rng.hpp"
#include "splitcolor/split.hpp"

namespace splitcolor {

namespace {

int graph_max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); v++) d = std::max(d, g.degree(v));
  return d;
}

// ---------------------------------------------------------------------
// Fan rotation (Misra-Gries): maintains at[v][c] = edge index colored c
// at v, or -1.
// ---------------------------------------------------------------------
class FanColorer {
 public:
  explicit FanColorer(const Graph& g)
      : g_(g), t_(graph_max_degree(g) + 1), ecol_(g.m(), 0),
        at_(g.n(), std::vector<int>(t_ + 1, -1)) {}

  EdgeColoring run() {
    for (int e = 0; e < g_.m(); e++) color_edge(e);
    EdgeColoring out;
    for (int e = 0; e < g_.m(); e++) out.colors[g_.edges()[e]] = ecol_[e];
    out.compact();
    VerifyResult v = verify_edge_coloring(g_, out, t_);
    if (!v.ok) throw std::logic_error("fan colorer produced improper coloring: " + v.message);
    return out;
  }

 private:
  bool free_at(int v, int c) const { return at_[v][c] < 0; }

  int first_free(int v) const {
    for (int c = 1; c <= t_; c++)
      if (at_[v][c] < 0) return c;
    throw std::logic_error("no free color at vertex");
  }

  int colored_as(int u, int w) const {
    int e = g_.edge_index(u, w);
    return e < 0 ? 0 : ecol_[e];
  }

  void assign(int e, int c) {
    const Edge& ed = g_.edges()[e];
    at_[ed.u][c] = e;
    at_[ed.v][c] = e;
    ecol_[e] = c;
  }

  void unassign(int e) {
    const Edge& ed = g_.edges()[e];
    at_[ed.u][ecol_[e]] = -1;
    at_[ed.v][ecol_[e]] = -1;
    ecol_[e] = 0;
  }

  void color_edge(int eidx) {
    const Edge& ed = g_.edges()[eidx];
    int u = ed.u;
    // maximal fan of u starting at the other endpoint
    std::vector<int> fan{ed.v};
    std::vector<char> in_fan(g_.n(), 0);
    in_fan[ed.v] = 1;
    for (;;) {
      int last = fan.back();
      int pick = -1;
      for (int w : g_.neighbors(u)) {
        if (in_fan[w]) continue;
        int c = colored_as(u, w);
        if (c > 0 && free_at(last, c)) {
          pick = w;
          break;
        }
      }
      if (pick < 0) break;
      fan.push_back(pick);
      in_fan[pick] = 1;
    }
    int c = first_free(u);
    int d = first_free(fan.back());
    if (!free_at(u, d)) invert_path(u, c, d);
    // first fan prefix whose end misses d; the prefix must still be a fan
    int w = -1;
    for (int i = 0; i < static_cast<int>(fan.size()); i++) {
      if (i > 0) {
        int fc = colored_as(u, fan[i]);
        if (fc <= 0 || !free_at(fan[i - 1], fc)) break;
      }
      if (free_at(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w < 0) throw std::logic_error("fan rotation found no valid prefix");
    for (int j = 0; j < w; j++) {
      int enext = g_.edge_index(u, fan[j + 1]);
      int cnext = ecol_[enext];
      unassign(enext);
      assign(g_.edge_index(u, fan[j]), cnext);
    }
    assign(g_.edge_index(u, fan[w]), d);
  }

  // Swap colors c and d along the maximal alternating path leaving u,
  // whose first edge is colored d (u misses c).
  void invert_path(int u, int c, int d) {
    std::vector<int> path;
    int cur = u, col = d;
    while (at_[cur][col] >= 0) {
      int e = at_[cur][col];
      path.push_back(e);
      const Edge& ed = g_.edges()[e];
      cur = (ed.u == cur) ? ed.v : ed.u;
      col = (col == d) ? c : d;
    }
    std::vector<int> old(path.size());
    for (size_t i = 0; i < path.size(); i++) old[i] = ecol_[path[i]];
    for (int e : path) unassign(e);
    for (size_t i = 0; i < path.size(); i++) assign(path[i], old[i] == c ? d : c);
  }

  const Graph& g_;
  int t_;
  std::vector<int> ecol_;
  std::vector<std::vector<int>> at_;
};

// ---------------------------------------------------------------------
// Conflict-repair phase: seeded greedy start plus tabu-guided recoloring
// on a conflict graph. Only produces verified-proper colorings; never
// used for infeasibility claims.
// ---------------------------------------------------------------------
struct ConflictModel {
  int nitems = 0;
  int ncolors = 0;
  std::vector<std::vector<int>> adjacent;  // conflicting item pairs
};

class RepairSearch {
 public:
  RepairSearch(const ConflictModel& m, uint64_t seed) : m_(m), rng_(seed) {}

  bool run(long long iterations, std::vector<int>& out_colors) {
    int n = m_.nitems, t = m_.ncolors;
    if (t <= 0) return n == 0;
    counts_.assign(n, std::vector<int>(t + 1, 0));
    colors_.assign(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng_.shuffle(order);
    for (int i : order) {
      int best = 1, bestv = counts_[i][1];
      for (int c = 2; c <= t; c++)
        if (counts_[i][c] < bestv) {
          bestv = counts_[i][c];
          best = c;
        }
      place(i, best);
    }
    tabu_.assign(n, std::vector<long long>(t + 1, -1));
    long long conflicts = total_conflicts();
    for (long long it = 0; it < iterations && conflicts > 0; it++) {
      int i = pick_conflicted();
      if (i < 0) break;
      int oldc = colors_[i];
      int bestc = -1, bestd = 1 << 30;
      for (int c = 1; c <= t; c++) {
        if (c == oldc) continue;
        bool banned = tabu_[i][c] >= it;
        if (banned && !(counts_[i][c] == 0 && conflicts - counts_[i][oldc] == 0)) continue;
        int d = counts_[i][c] - counts_[i][oldc];
        if (d < bestd) {
          bestd = d;
          bestc = c;
        }
      }
      if (bestc < 0) bestc = 1 + static_cast<int>(rng_.below(t));
      if (bestc == oldc) continue;
      conflicts += counts_[i][bestc] - counts_[i][oldc];
      move(i, oldc, bestc);
      tabu_[i][oldc] = it + 7 + static_cast<long long>(rng_.below(10)) + conflicts;
    }
    if (conflicts != 0) return false;
    for (int i = 0; i < n; i++)
      for (int j : m_.adjacent[i])
        if (colors_[i] == colors_[j]) return false;
    out_colors = colors_;
    return true;
  }

 private:
  void place(int i, int c) {
    colors_[i] = c;
    for (int j : m_.adjacent[i]) counts_[j][c]++;
  }

  void move(int i, int oldc, int c) {
    colors_[i] = c;
    for (int j : m_.adjacent[i]) {
      counts_[j][oldc]--;
      counts_[j][c]++;
    }
  }

  long long total_conflicts() const {
    long long s = 0;
    for (int i = 0; i < m_.nitems; i++) s += counts_[i][colors_[i]];
    return s / 2;
  }

  int pick_conflicted() {
    scratch_.clear();
    for (int i = 0; i < m_.nitems; i++)
      if (counts_[i][colors_[i]] > 0) scratch_.push_back(i);
    if (scratch_.empty()) return -1;
    return scratch_[rng_.below(scratch_.size())];
  }

  const ConflictModel& m_;
  SplitMix64 rng_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::vector<long long>> tabu_;
  std::vector<int> scratch_;
};

bool repair_attempts(const ConflictModel& m, uint64_t seed, std::vector<int>& out) {
  RepairSearch first(m, seed);
  if (first.run(50'000, out)) return true;
  for (int attempt = 1; attempt <= 6; attempt++) {
    RepairSearch again(m, seed * 1000003ull + attempt);
    if (again.run(600'000, out)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------
// Exhaustive search: static order, forward-checked domains, forced-move
// propagation, canonical color introduction, value-shuffled restarts.
// ---------------------------------------------------------------------
class ExactColorer {
 public:
  ExactColorer(const ConflictModel& m, std::vector<std::vector<int>> stars,
               std::vector<int> order)
      : m_(m), stars_(std::move(stars)), order_(std::move(order)) {
    if (m_.ncolors > 62) throw std::invalid_argument("color budget above 62 unsupported");
    full_ = (1ull << m_.ncolors) - 1;
  }

  // Colored / Infeasible / NodeCapExceeded
  SearchStatus run(long long max_nodes, std::vector<int>& out_colors) {
    nodes_ = 0;
    cap_ = max_nodes;
    value_order_.resize(m_.ncolors);
    std::iota(value_order_.begin(), value_order_.end(), 1);
    SplitMix64 rng(0x5eedc01045ull);
    long long restart_cap = 3000;
    for (int r = 0; r <= kRestarts; r++) {
      colors_.assign(m_.nitems, 0);
      domain_.assign(m_.nitems, full_);
      trail_.clear();
      assigned_trail_.clear();
      capped_ = false;
      if (r > 0) rng.shuffle(value_order_);
      long long budget = (r == kRestarts) ? cap_ : std::min(cap_, nodes_ + restart_cap);
      bool sat = dfs(0, budget);
      if (sat) {
        out_colors = colors_;
        return SearchStatus::Colored;
      }
      if (!capped_) return SearchStatus::Infeasible;
      if (nodes_ >= cap_) return SearchStatus::NodeCapExceeded;
      restart_cap += restart_cap / 2;
    }
    return SearchStatus::NodeCapExceeded;
  }

  long long nodes() const { return nodes_; }

 private:
  static constexpr int kRestarts = 14;

  struct Saved {
    int item;
    uint64_t dom;
  };

  bool place(int item, int c, int& maxc, std::vector<int>& forced) {
    colors_[item] = c;
    assigned_trail_.push_back(item);
    uint64_t bit = 1ull << (c - 1);
    for (int j : m_.adjacent[item]) {
      if (colors_[j] || !(domain_[j] & bit)) continue;
      trail_.push_back({j, domain_[j]});
      domain_[j] &= ~bit;
      if (domain_[j] == 0) return false;
      if ((domain_[j] & (domain_[j] - 1)) == 0) forced.push_back(j);
    }
    maxc = std::max(maxc, c);
    return true;
  }

  // Saturated star: enough pairwise-conflicting items around one vertex
  // that every introducible color must appear there. A color with no
  // remaining slot fails the node; a unique slot is forced.
  bool saturated_stars(int maxc, std::vector<int>& forced) {
    uint64_t introducible =
        full_ & ((maxc + 1 >= 64) ? ~0ull : ((1ull << std::min(m_.ncolors, maxc + 1)) - 1));
    for (const auto& star : stars_) {
      if (static_cast<int>(star.size()) < m_.ncolors) continue;
      uint64_t used = 0;
      for (int it : star)
        if (colors_[it]) used |= 1ull << (colors_[it] - 1);
      uint64_t missing = introducible & ~used;
      while (missing) {
        uint64_t bit = missing & (~missing + 1);
        missing ^= bit;
        int slots = 0, where = -1;
        for (int it : star) {
          if (!colors_[it] && (domain_[it] & bit)) {
            slots++;
            where = it;
            if (slots > 1) break;
          }
        }
        if (slots == 0) return false;
        if (slots == 1 && (domain_[where] & (domain_[where] - 1)) != 0) {
          trail_.push_back({where, domain_[where]});
          domain_[where] = bit;
          forced.push_back(where);
        }
      }
    }
    return true;
  }

  bool dfs(int maxc, long long budget) {
    if (++nodes_ > budget) {
      capped_ = true;
      return false;
    }
    int pick = -1;
    for (int i : order_)
      if (!colors_[i]) {
        pick = i;
        break;
      }
    if (pick < 0) return true;
    int limit = std::min(m_.ncolors, maxc + 1);
    for (int c : value_order_) {
      if (c > limit || !(domain_[pick] >> (c - 1) & 1)) continue;
      size_t tmark = trail_.size(), amark = assigned_trail_.size();
      std::vector<int> forced;
      int mc = maxc;
      bool ok = place(pick, c, mc, forced);
      while (ok && !forced.empty()) {
        int it = forced.back();
        forced.pop_back();
        if (colors_[it]) continue;
        int cc = std::countr_zero(domain_[it]) + 1;
        ok = place(it, cc, mc, forced);
      }
      if (ok) {
        std::vector<int> forced2;
        ok = saturated_stars(mc, forced2);
        while (ok && !forced2.empty()) {
          int it = forced2.back();
          forced2.pop_back();
          if (colors_[it]) continue;
          int cc = std::countr_zero(domain_[it]) + 1;
          ok = place(it, cc, mc, forced2);
        }
      }
      if (ok && dfs(mc, budget)) return true;
      if (capped_) return false;
      while (assigned_trail_.size() > amark) {
        colors_[assigned_trail_.back()] = 0;
        assigned_trail_.pop_back();
      }
      while (trail_.size() > tmark) {
        domain_[trail_.back().item] = trail_.back().dom;
        trail_.pop_back();
      }
    }
    return false;
  }

  const ConflictModel& m_;
  std::vector<std::vector<int>> stars_;
  std::vector<int> order_;
  uint64_t full_ = 0;
  std::vector<int> colors_;
  std::vector<uint64_t> domain_;
  std::vector<Saved> trail_;
  std::vector<int> assigned_trail_;
  std::vector<int> value_order_;
  long long nodes_ = 0, cap_ = 0;
  bool capped_ = false;
};

// ---------------------------------------------------------------------
// Conflict models
// ---------------------------------------------------------------------
ConflictModel edge_model(const Graph& g, int budget) {
  ConflictModel m;
  m.nitems = g.m();
  m.ncolors = budget;
  m.adjacent.assign(g.m(), {});
  for (int v = 0; v < g.n(); v++) {
    std::vector<int> inc;
    for (int w : g.neighbors(v)) inc.push_back(g.edge_index(v, w));
    for (size_t i = 0; i < inc.size(); i++)
      for (size_t j = i + 1; j < inc.size(); j++) {
        m.adjacent[inc[i]].push_back(inc[j]);
        m.adjacent[inc[j]].push_back(inc[i]);
      }
  }
  for (auto& a : m.adjacent) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return m;
}

std::vector<std::vector<int>> edge_stars(const Graph& g) {
  std::vector<std::vector<int>> stars(g.n());
  for (int v = 0; v < g.n(); v++)
    for (int w : g.neighbors(v)) stars[v].push_back(g.edge_index(v, w));
  return stars;
}

std::vector<int> edge_order(const Graph& g) {
  std::vector<int> order(g.m());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Edge &ea = g.edges()[a], &eb = g.edges()[b];
    int da = g.degree(ea.u) + g.degree(ea.v), db = g.degree(eb.u) + g.degree(eb.v);
    if (da != db) return da > db;
    return a < b;
  });
  return order;
}

// Items 0..n-1 are vertices, n..n+m-1 are edges.
ConflictModel total_model(const Graph& g, int budget) {
  ConflictModel m;
  int n = g.n();
  m.nitems = n + g.m();
  m.ncolors = budget;
  m.adjacent.assign(m.nitems, {});
  auto link = [&](int a, int b) {
    m.adjacent[a].push_back(b);
    m.adjacent[b].push_back(a);
  };
  for (int e = 0; e < g.m(); e++) {
    const Edge& ed = g.edges()[e];
    link(ed.u, ed.v);
    link(ed.u, n + e);
    link(ed.v, n + e);
  }
  for (int v = 0; v < g.n(); v++) {
    std::vector<int> inc;
    for (int w : g.neighbors(v)) inc.push_back(n + g.edge_index(v, w));
    for (size_t i = 0; i < inc.size(); i++)
      for (size_t j = i + 1; j < inc.size(); j++) link(inc[i], inc[j]);
  }
  for (auto& a : m.adjacent) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return m;
}

std::vector<std::vector<int>> total_stars(const Graph& g) {
  std::vector<std::vector<int>> stars(g.n());
  for (int v = 0; v < g.n(); v++) {
    stars[v].push_back(v);
    for (int w : g.neighbors(v)) stars[v].push_back(g.n() + g.edge_index(v, w));
  }
  return stars;
}

std::vector<int> total_order(const Graph& g) {
  int n = g.n();
  std::vector<int> verts(n), eds(g.m());
  std::iota(verts.begin(), verts.end(), 0);
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::iota(eds.begin(), eds.end(), 0);
  std::sort(eds.begin(), eds.end(), [&](int a, int b) {
    const Edge &ea = g.edges()[a], &eb = g.edges()[b];
    int da = g.degree(ea.u) + g.degree(ea.v), db = g.degree(eb.u) + g.degree(eb.v);
    if (da != db) return da > db;
    return a < b;
  });
  std::vector<int> order;
  order.reserve(n + g.m());
  for (int v : verts) order.push_back(v);
  for (int e : eds) order.push_back(n + e);
  return order;
}

// Proper total coloring of K_q (q odd) by rotation, restricted to g.
// Uses at most n+1 colors, so any budget >= n+1 is served directly.
TotalColoring cyclic_total(const Graph& g) {
  int q = (g.n() % 2 == 1) ? g.n() : g.n() + 1;
  TotalColoring out;
  out.vertex_colors.assign(g.n(), 0);
  for (int v = 0; v < g.n(); v++) out.vertex_colors[v] = (2 * v) % q + 1;
  for (const Edge& e : g.edges()) out.edge_colors[e] = (e.u + e.v) % q + 1;
  out.compact();
  return out;
}

}  // namespace

EdgeColoring edge_color_delta_plus_one(const Graph& g) {
  if (g.m() == 0) return {};
  return FanColorer(g).run();
}

EdgeColoring edge_color_universal_even(const Graph& g) {
  if (g.n() % 2 != 0 || !universal_vertex(g).has_value())
    throw std::invalid_argument("needs even order and a universal vertex");
  int n = g.n();
  EdgeColoring out;
  for (int r = 0; r < n - 1; r++) {
    auto place = [&](int a, int b) {
      if (g.has_edge(a, b)) out.colors[Edge(a, b)] = r + 1;
    };
    place(n - 1, r);
    for (int i = 1; i <= n / 2 - 1; i++)
      place((r + i) % (n - 1), (r - i + n - 1) % (n - 1));
  }
  out.compact();
  int delta = graph_max_degree(g);
  VerifyResult v = verify_edge_coloring(g, out, delta);
  if (!v.ok) throw std::logic_error("factorization coloring failed: " + v.message);
  return out;
}

EdgeColorSearch edge_color_exact(const Graph& g, int budget, SearchLimits limits) {
  EdgeColorSearch out;
  if (g.m() == 0) {
    out.status = SearchStatus::Colored;
    return out;
  }
  int delta = graph_max_degree(g);
  if (budget < delta) return out;  // a maximum-degree star already needs delta colors
  if (budget >= delta + 1) {
    out.status = SearchStatus::Colored;
    out.coloring = edge_color_delta_plus_one(g);
    return out;
  }
  ConflictModel model = edge_model(g, budget);
  std::vector<int> found;
  if (repair_attempts(model, 0x9e1ce5eedull ^ (static_cast<uint64_t>(g.n()) << 32 | g.m()),
                      found)) {
    out.status = SearchStatus::Colored;
    for (int e = 0; e < g.m(); e++) out.coloring.colors[g.edges()[e]] = found[e];
    out.coloring.compact();
  } else {
    ExactColorer search(model, edge_stars(g), edge_order(g));
    out.status = search.run(limits.max_nodes, found);
    out.nodes = search.nodes();
    if (out.status == SearchStatus::Colored) {
      for (int e = 0; e < g.m(); e++) out.coloring.colors[g.edges()[e]] = found[e];
      out.coloring.compact();
    }
  }
  if (out.status == SearchStatus::Colored) {
    VerifyResult v = verify_edge_coloring(g, out.coloring, budget);
    if (!v.ok) throw std::logic_error("edge search returned improper coloring: " + v.message);
  }
  return out;
}

TotalColorSearch total_color_budget(const Graph& g, int budget, SearchLimits limits) {
  TotalColorSearch out;
  if (g.n() == 0) {
    out.status = SearchStatus::Colored;
    return out;
  }
  int delta = graph_max_degree(g);
  if (budget < delta + 1) return out;  // max-degree star plus its center
  if (budget >= g.n() + 1) {
    out.status = SearchStatus::Colored;
    out.coloring = cyclic_total(g);
  } else {
    ConflictModel model = total_model(g, budget);
    std::vector<int> found;
    if (repair_attempts(model, 0x70a1c0105eedull ^ (static_cast<uint64_t>(g.n()) << 32 | g.m()),
                        found)) {
      out.status = SearchStatus::Colored;
    } else {
      ExactColorer search(model, total_stars(g), total_order(g));
      out.status = search.run(limits.max_nodes, found);
      out.nodes = search.nodes();
    }
    if (out.status == SearchStatus::Colored) {
      out.coloring.vertex_colors.assign(g.n(), 0);
      for (int v = 0; v < g.n(); v++) out.coloring.vertex_colors[v] = found[v];
      for (int e = 0; e < g.m(); e++) out.coloring.edge_colors[g.edges()[e]] = found[g.n() + e];
      out.coloring.compact();
    }
  }
  if (out.status == SearchStatus::Colored) {
    VerifyResult v = verify_total_coloring(g, out.coloring, budget);
    if (!v.ok) throw std::logic_error("total search returned improper coloring: " + v.message);
  }
  return out;
}

}  // namespace splitcolor
