#include "splitcolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "splitcolor/split.hpp"

namespace splitcolor {
namespace oracle {

namespace {

struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed ? seed : 0x2545F4914F6CDD1Dull) {}
  uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1Dull;
  }
  uint64_t below(uint64_t n) { return next() % n; }
  template <class V>
  void shuffle(V& v) {
    for (size_t i = v.size(); i > 1; i--) std::swap(v[i - 1], v[below(i)]);
  }
};

int graph_delta(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); v++) d = std::max(d, g.degree(v));
  return d;
}

// ------------------------------------------------------------------
// Counting bounds over vertex subsets (bitmask DP, n <= 16).
// Each color class of an edge coloring restricted to G[S] is a matching
// of G[S]; each class of a total coloring is a matching plus a disjoint
// independent set. Exceeding t times the best class size is a proof
// that no t-coloring exists.
// ------------------------------------------------------------------
struct SubsetTables {
  int n = 0;
  std::vector<int> nb;                    // neighbor masks
  std::vector<int> alpha, mm, ms, cmm;    // per subset

  void build(const Graph& g) {
    n = g.n();
    int N = 1 << n;
    nb.assign(n, 0);
    for (int v = 0; v < n; v++)
      for (int w : g.neighbors(v)) nb[v] |= 1 << w;
    alpha.assign(N, 0);
    mm.assign(N, 0);
    ms.assign(N, 0);
    cmm.assign(N, 0);
    for (int S = 1; S < N; S++) {
      int v = std::countr_zero(static_cast<unsigned>(S));
      int rest = S & ~(1 << v);
      alpha[S] = std::max(alpha[rest], 1 + alpha[rest & ~nb[v]]);
      ms[S] = ms[rest] + std::popcount(static_cast<unsigned>(nb[v] & rest));
      mm[S] = mm[rest];
      for (int c = nb[v] & rest; c; c &= c - 1)
        mm[S] = std::max(mm[S], 1 + mm[rest & ~(1 << std::countr_zero(static_cast<unsigned>(c)))]);
      int cn = ~(nb[v] | (1 << v)) & (N - 1);
      cmm[S] = cmm[rest];
      for (int c = cn & rest; c; c &= c - 1)
        cmm[S] =
            std::max(cmm[S], 1 + cmm[rest & ~(1 << std::countr_zero(static_cast<unsigned>(c)))]);
    }
  }

  bool edge_unsat(int t) const {
    int N = 1 << n;
    for (int S = 1; S < N; S++)
      if (ms[S] > static_cast<long long>(t) * mm[S]) return true;
    return false;
  }

  // Independent subsets of S (size >= 2), bounded enumeration.
  template <class F>
  bool for_each_independent(int S, F f) const {
    long long count = 0;
    struct Frame {
      int mask, size, cand;
    };
    std::vector<Frame> stack{{0, 0, S}};
    while (!stack.empty()) {
      Frame fr = stack.back();
      stack.pop_back();
      if (fr.size >= 2) {
        if (++count > 200000) return false;
        f(fr.size, fr.mask);
      }
      int c = fr.cand;
      while (c) {
        int v = std::countr_zero(static_cast<unsigned>(c));
        c &= c - 1;
        stack.push_back({fr.mask | (1 << v), fr.size + 1, c & ~nb[v]});
      }
    }
    return true;
  }

  // Total-coloring infeasibility over a curated family of item sets
  // W(S): the vertices of S plus either the edges inside S or all edges.
  // Class capacity: B1 bounds classes holding at most one S-vertex, B2
  // those holding an independent set of two or more; at most cmm[S]
  // classes (disjoint independent pairs inside S) can be of the second
  // kind.
  bool total_unsat(const Graph& g, int t) const {
    int N = 1 << n, V = N - 1, m = g.m();
    std::vector<int> family;
    family.push_back(V);
    for (int v = 0; v < n; v++) family.push_back(V & ~(1 << v));
    for (int v = 0; v < n; v++)
      for (int u = v + 1; u < n; u++) family.push_back(V & ~(1 << v) & ~(1 << u));
    for (int v = 0; v < n; v++) family.push_back(nb[v] | (1 << v));
    int core = V;
    for (int v = 0; v < n; v++)
      if (g.degree(v) == 1) core &= ~(1 << v);
    family.push_back(core);
    for (int v = 0; v < n; v++)
      if (core >> v & 1) family.push_back(core & ~(1 << v));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    for (int S : family) {
      if (!S) continue;
      int size = std::popcount(static_cast<unsigned>(S));
      int b1_in = mm[S], b1_all = mm[V];
      for (int v = 0; v < n; v++)
        if (S >> v & 1) {
          b1_in = std::max(b1_in, 1 + mm[S & ~(1 << v)]);
          b1_all = std::max(b1_all, 1 + mm[V & ~(1 << v)]);
        }
      int b2_in = -1, b2_all = -1;
      bool complete = for_each_independent(S, [&](int isz, int mask) {
        b2_in = std::max(b2_in, isz + mm[S & ~mask]);
        b2_all = std::max(b2_all, isz + mm[V & ~mask]);
      });
      if (!complete) continue;
      int packs = std::min(t, cmm[S]);
      long long cap_in = static_cast<long long>(t) * b1_in +
                         (b2_in > b1_in ? static_cast<long long>(packs) * (b2_in - b1_in) : 0);
      long long cap_all = static_cast<long long>(t) * b1_all +
                          (b2_all > b1_all ? static_cast<long long>(packs) * (b2_all - b1_all) : 0);
      if (size + ms[S] > cap_in) return true;
      if (size + m > cap_all) return true;
    }
    return false;
  }
};

// ------------------------------------------------------------------
// Exhaustive t-coloring decision on a conflict structure. Dynamic
// most-constrained-first ordering, domain propagation, all-colors-used
// reasoning on saturated fans, rotated value orders across restarts.
// ------------------------------------------------------------------
struct Instance {
  int items = 0, colors = 0;
  std::vector<std::vector<int>> conflicts;
  std::vector<std::vector<int>> fans;  // per-vertex pairwise-conflicting groups
};

class Decide {
 public:
  explicit Decide(const Instance& inst) : in_(inst) {
    if (in_.colors > 62) throw std::invalid_argument("oracle color budget above 62");
    full_ = in_.colors >= 1 ? (1ull << in_.colors) - 1 : 0;
  }

  // 1 = colorable, 0 = not colorable, -1 = node budget exhausted
  int decide(long long max_nodes) {
    XorShift rng(0x0acc1eull + in_.items * 977 + in_.colors);
    order_.resize(in_.colors);
    std::iota(order_.begin(), order_.end(), 1);
    long long slice = 5000;
    nodes_ = 0;
    for (int run = 0; run <= 10; run++) {
      color_.assign(in_.items, 0);
      dom_.assign(in_.items, full_);
      undo_.clear();
      set_.clear();
      capped_ = false;
      if (run > 0) rng.shuffle(order_);
      long long limit = (run == 10) ? max_nodes : std::min(max_nodes, nodes_ + slice);
      if (walk(0, limit)) return 1;
      if (!capped_) return 0;
      if (nodes_ >= max_nodes) return -1;
      slice *= 2;
    }
    return -1;
  }

 private:
  bool feed(int item, int c, int& high, std::vector<int>& unit) {
    color_[item] = c;
    set_.push_back(item);
    uint64_t bit = 1ull << (c - 1);
    for (int j : in_.conflicts[item]) {
      if (color_[j] || !(dom_[j] & bit)) continue;
      undo_.push_back({j, dom_[j]});
      dom_[j] &= ~bit;
      if (!dom_[j]) return false;
      if (!(dom_[j] & (dom_[j] - 1))) unit.push_back(j);
    }
    if (c > high) high = c;
    return true;
  }

  bool fans_ok(int high, std::vector<int>& unit) {
    uint64_t visible =
        full_ & ((high + 1 >= 64) ? ~0ull : ((1ull << std::min(in_.colors, high + 1)) - 1));
    for (const auto& fan : in_.fans) {
      if (static_cast<int>(fan.size()) < in_.colors) continue;
      uint64_t present = 0;
      for (int it : fan)
        if (color_[it]) present |= 1ull << (color_[it] - 1);
      for (uint64_t todo = visible & ~present; todo; todo &= todo - 1) {
        uint64_t bit = todo & (~todo + 1);
        int spots = 0, only = -1;
        for (int it : fan)
          if (!color_[it] && (dom_[it] & bit)) {
            if (++spots > 1) break;
            only = it;
          }
        if (spots == 0) return false;
        if (spots == 1 && (dom_[only] & (dom_[only] - 1))) {
          undo_.push_back({only, dom_[only]});
          dom_[only] = bit;
          unit.push_back(only);
        }
      }
    }
    return true;
  }

  bool walk(int high, long long limit) {
    if (++nodes_ > limit) {
      capped_ = true;
      return false;
    }
    uint64_t visible =
        full_ & ((high + 1 >= 64) ? ~0ull : ((1ull << std::min(in_.colors, high + 1)) - 1));
    int pick = -1, tight = 1 << 30;
    for (int i = 0; i < in_.items; i++) {
      if (color_[i]) continue;
      int w = std::popcount(dom_[i] & visible);
      if (w < tight) {
        tight = w;
        pick = i;
        if (w <= 1) break;
      }
    }
    if (pick < 0) return true;
    int cap = std::min(in_.colors, high + 1);
    for (int c : order_) {
      if (c > cap || !(dom_[pick] >> (c - 1) & 1)) continue;
      size_t um = undo_.size(), sm = set_.size();
      std::vector<int> unit;
      int h = high;
      bool alive = feed(pick, c, h, unit);
      while (alive && !unit.empty()) {
        int it = unit.back();
        unit.pop_back();
        if (color_[it]) continue;
        alive = feed(it, std::countr_zero(dom_[it]) + 1, h, unit);
      }
      if (alive) {
        std::vector<int> unit2;
        alive = fans_ok(h, unit2);
        while (alive && !unit2.empty()) {
          int it = unit2.back();
          unit2.pop_back();
          if (color_[it]) continue;
          alive = feed(it, std::countr_zero(dom_[it]) + 1, h, unit2);
        }
      }
      if (alive && walk(h, limit)) return true;
      if (capped_) return false;
      while (set_.size() > sm) {
        color_[set_.back()] = 0;
        set_.pop_back();
      }
      while (undo_.size() > um) {
        dom_[undo_.back().first] = undo_.back().second;
        undo_.pop_back();
      }
    }
    return false;
  }

  const Instance& in_;
  uint64_t full_;
  std::vector<int> color_, order_;
  std::vector<uint64_t> dom_;
  std::vector<std::pair<int, uint64_t>> undo_;
  std::vector<int> set_;
  long long nodes_ = 0;
  bool capped_ = false;
};

// Stochastic proper-coloring finder (tabu walk). A success is
// self-certifying; failures mean nothing.
bool find_coloring(const Instance& in, uint64_t seed, long long iters) {
  int n = in.items, t = in.colors;
  if (n == 0) return true;
  if (t <= 0) return false;
  XorShift rng(seed);
  std::vector<int> color(n);
  std::vector<std::vector<int>> cnt(n, std::vector<int>(t + 1, 0));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  for (int i : order) {
    int bc = 1;
    for (int c = 2; c <= t; c++)
      if (cnt[i][c] < cnt[i][bc]) bc = c;
    color[i] = bc;
    for (int j : in.conflicts[i]) cnt[j][bc]++;
  }
  long long bad = 0;
  for (int i = 0; i < n; i++) bad += cnt[i][color[i]];
  bad /= 2;
  std::vector<std::vector<long long>> until(n, std::vector<long long>(t + 1, -1));
  std::vector<int> hot;
  for (long long it = 0; it < iters && bad > 0; it++) {
    hot.clear();
    for (int i = 0; i < n; i++)
      if (cnt[i][color[i]] > 0) hot.push_back(i);
    if (hot.empty()) break;
    int i = hot[rng.below(hot.size())];
    int oldc = color[i], bestc = -1, bestd = 1 << 30;
    for (int c = 1; c <= t; c++) {
      if (c == oldc) continue;
      bool banned = until[i][c] >= it;
      if (banned && !(cnt[i][c] == 0 && bad - cnt[i][oldc] == 0)) continue;
      int d = cnt[i][c] - cnt[i][oldc];
      if (d < bestd) {
        bestd = d;
        bestc = c;
      }
    }
    if (bestc < 0) bestc = 1 + static_cast<int>(rng.below(t));
    if (bestc == oldc) continue;
    bad += cnt[i][bestc] - cnt[i][oldc];
    color[i] = bestc;
    for (int j : in.conflicts[i]) {
      cnt[j][oldc]--;
      cnt[j][bestc]++;
    }
    until[i][oldc] = it + 7 + static_cast<long long>(rng.below(10)) + bad;
  }
  if (bad != 0) return false;
  for (int i = 0; i < n; i++)
    for (int j : in.conflicts[i])
      if (color[i] == color[j]) return false;
  return true;
}

bool find_with_retries(const Instance& in, uint64_t seed) {
  if (find_coloring(in, seed, 50'000)) return true;
  for (int a = 1; a <= 6; a++)
    if (find_coloring(in, seed * 6364136223846793005ull + a, 600'000)) return true;
  return false;
}

Instance edge_instance(const Graph& g, int t) {
  Instance in;
  in.items = g.m();
  in.colors = t;
  in.conflicts.assign(g.m(), {});
  in.fans.assign(g.n(), {});
  for (int v = 0; v < g.n(); v++) {
    auto& fan = in.fans[v];
    for (int w : g.neighbors(v)) fan.push_back(g.edge_index(v, w));
    for (size_t i = 0; i < fan.size(); i++)
      for (size_t j = i + 1; j < fan.size(); j++) {
        in.conflicts[fan[i]].push_back(fan[j]);
        in.conflicts[fan[j]].push_back(fan[i]);
      }
  }
  for (auto& c : in.conflicts) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return in;
}

Instance total_instance(const Graph& g, int t) {
  Instance in;
  int n = g.n();
  in.items = n + g.m();
  in.colors = t;
  in.conflicts.assign(in.items, {});
  in.fans.assign(n, {});
  auto tie = [&](int a, int b) {
    in.conflicts[a].push_back(b);
    in.conflicts[b].push_back(a);
  };
  for (int e = 0; e < g.m(); e++) {
    const Edge& ed = g.edges()[e];
    tie(ed.u, ed.v);
    tie(ed.u, n + e);
    tie(ed.v, n + e);
  }
  for (int v = 0; v < n; v++) {
    auto& fan = in.fans[v];
    fan.push_back(v);
    for (int w : g.neighbors(v)) fan.push_back(n + g.edge_index(v, w));
    for (size_t i = 1; i < fan.size(); i++)
      for (size_t j = i + 1; j < fan.size(); j++) tie(fan[i], fan[j]);
  }
  for (auto& c : in.conflicts) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return in;
}

// 1 colorable / 0 not / throws on node budget
bool decide_or_throw(const Instance& in, uint64_t seed, long long max_nodes) {
  if (find_with_retries(in, seed)) return true;
  int r = Decide(in).decide(max_nodes);
  if (r < 0) throw std::runtime_error("oracle search exceeded its node budget");
  return r == 1;
}

}  // namespace

int chromatic_index_exact(const Graph& g, OracleLimits limits) {
  if (g.n() > limits.max_n)
    throw std::invalid_argument("graph above the oracle size cap");
  if (g.m() == 0) return 0;
  int delta = graph_delta(g);
  if (g.n() <= 16) {
    SubsetTables tables;
    tables.build(g);
    if (tables.edge_unsat(delta)) return delta + 1;
  }
  bool at_delta = decide_or_throw(edge_instance(g, delta), 0xedbe5731ull + g.m(), limits.max_nodes);
  return at_delta ? delta : delta + 1;  // Vizing: never more than delta+1
}

int total_chromatic_exact(const Graph& g, OracleLimits limits) {
  if (g.n() > limits.max_n)
    throw std::invalid_argument("graph above the oracle size cap");
  if (g.n() == 0) return 0;
  if (g.m() == 0) return 1;
  int delta = graph_delta(g);
  SubsetTables tables;
  bool have_tables = g.n() <= 16;
  if (have_tables) tables.build(g);
  bool split = recognize_split(g).is_split();
  for (int t = delta + 1; ; t++) {
    if (t >= g.n() + 1) return t;  // rotation pattern colors any graph with n+1
    bool unsat_by_count = have_tables && tables.total_unsat(g, t);
    if (!unsat_by_count &&
        decide_or_throw(total_instance(g, t), 0x70741c0ull + g.m() + t, limits.max_nodes))
      return t;
    if (split && t == delta + 1) return delta + 2;  // split graphs satisfy the TCC
  }
}

namespace {

struct TreeScan {
  const Graph& g;
  int n, best = 1 << 30, floor_value;
  std::vector<Edge> chosen;

  explicit TreeScan(const Graph& gr) : g(gr), n(gr.n()) {
    floor_value = (g.m() == g.n() - 1) ? 1 : 2;
  }

  int tree_stretch() {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : chosen) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<int> dist(n);
    int worst = 1;
    for (int s = 0; s < n; s++) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      std::vector<int> q{s};
      for (size_t h = 0; h < q.size(); h++) {
        int v = q[h];
        for (int w : adj[v])
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            q.push_back(w);
          }
      }
      for (int w : g.neighbors(s)) worst = std::max(worst, dist[w]);
    }
    return worst;
  }

  // true aborts the whole scan (the floor has been reached)
  bool scan(size_t idx, std::vector<int>& comp, int chosen_count) {
    if (chosen_count == n - 1) {
      best = std::min(best, tree_stretch());
      return best <= floor_value;
    }
    if (idx >= g.edges().size()) return false;
    if (chosen_count + static_cast<int>(g.edges().size() - idx) < n - 1) return false;
    const Edge& e = g.edges()[idx];
    int ru = root(comp, e.u), rv = root(comp, e.v);
    if (ru != rv) {
      std::vector<int> saved = comp;
      comp[ru] = rv;
      chosen.push_back(e);
      if (scan(idx + 1, comp, chosen_count + 1)) return true;
      chosen.pop_back();
      comp = saved;
    }
    return scan(idx + 1, comp, chosen_count);
  }

  static int root(std::vector<int>& comp, int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  }
};

}  // namespace

int stretch_index_exact(const Graph& g, int max_n) {
  if (g.n() > max_n) throw std::invalid_argument("graph above the spanning-tree guard");
  if (!is_connected(g)) throw std::invalid_argument("disconnected graph");
  if (g.n() <= 1) return 1;
  TreeScan scan(g);
  std::vector<int> comp(g.n());
  std::iota(comp.begin(), comp.end(), 0);
  scan.scan(0, comp, 0);
  return scan.best;
}

namespace {

void matching_rec(const std::vector<Edge>& edges, size_t idx, uint64_t used, int size, int& best) {
  if (size + static_cast<int>(edges.size() - idx) <= best) return;
  while (idx < edges.size() &&
         ((used >> edges[idx].u & 1) || (used >> edges[idx].v & 1)))
    idx++;
  if (idx == edges.size()) {
    best = std::max(best, size);
    return;
  }
  const Edge& e = edges[idx];
  matching_rec(edges, idx + 1, used | (1ull << e.u) | (1ull << e.v), size + 1, best);
  matching_rec(edges, idx + 1, used, size, best);
}

}  // namespace

int max_matching_brute(const Graph& g, int max_m) {
  if (g.m() > max_m) throw std::invalid_argument("graph above the matching guard");
  if (g.n() > 63) throw std::invalid_argument("too many vertices for the matching oracle");
  int best = 0;
  matching_rec(g.edges(), 0, 0, 0, best);
  return best;
}

bool subgraph_overfull_brute(const Graph& g, OverfullScan scan) {
  if (g.n() == 0) return false;
  if (scan == OverfullScan::Auto)
    scan = g.n() <= 10 ? OverfullScan::FullSubsets : OverfullScan::Neighborhood;
  int delta = graph_delta(g);
  if (scan == OverfullScan::FullSubsets) {
    if (g.n() > 10) throw std::invalid_argument("full subset scan capped at n = 10");
    int N = 1 << g.n();
    for (int S = 1; S < N; S++) {
      int size = std::popcount(static_cast<unsigned>(S));
      long long edges = 0;
      int local = 0;
      for (int v = 0; v < g.n(); v++) {
        if (!(S >> v & 1)) continue;
        int d = 0;
        for (int w : g.neighbors(v))
          if (S >> w & 1) d++;
        local = std::max(local, d);
        edges += d;
      }
      edges /= 2;
      if (local == delta && edges > static_cast<long long>(local) * (size / 2)) return true;
    }
    return false;
  }
  if (g.n() > 14) throw std::invalid_argument("neighborhood scan capped at n = 14");
  for (int v = 0; v < g.n(); v++) {
    if (g.degree(v) != delta) continue;
    // induced closed neighborhood
    std::vector<int> inside(g.n(), 0);
    inside[v] = 1;
    for (int w : g.neighbors(v)) inside[w] = 1;
    long long edges = 0;
    int local = 0, size = 0;
    for (int a = 0; a < g.n(); a++) {
      if (!inside[a]) continue;
      size++;
      int d = 0;
      for (int w : g.neighbors(a)) d += inside[w];
      local = std::max(local, d);
      edges += d;
    }
    edges /= 2;
    if (local == delta && edges > static_cast<long long>(local) * (size / 2)) return true;
  }
  return false;
}

}  // namespace oracle
}  // namespace splitcolor
