#include "splitcolor/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "splitcolor/rng.hpp"

namespace splitcolor {

namespace {

Graph build_attempt(const GeneratorParams& p, uint64_t seed) {
  SplitMix64 rng(seed);
  int k = p.clique_size, q = p.independent_count, pend = p.pendant_count;
  std::vector<Edge> edges;
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++) edges.emplace_back(i, j);
  std::vector<int> ids(k);
  for (int y = 0; y < q; y++) {
    int size = 1 + static_cast<int>(rng.below(k - 1));  // proper subset keeps X maximal
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < size; i++) {
      int j = i + static_cast<int>(rng.below(k - i));
      std::swap(ids[i], ids[j]);
    }
    for (int i = 0; i < size; i++) edges.emplace_back(ids[i], k + y);
  }
  for (int i = 0; i < pend; i++)
    edges.emplace_back(static_cast<int>(rng.below(k)), k + q + i);
  return Graph(k + q + pend, edges);
}

int delta_of(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); v++) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace

GeneratedGraph random_split_graph(const GeneratorParams& params) {
  if (params.clique_size < 1) throw std::invalid_argument("clique size must be at least 1");
  if (params.independent_count < 0 || params.pendant_count < 0)
    throw std::invalid_argument("negative vertex counts");
  if (params.clique_size == 1 && params.independent_count > 0)
    throw std::invalid_argument(
        "unsatisfiable: independent vertices need a nonempty proper subset of a clique of size 1");
  const int kRetries = 200;
  for (int attempt = 0; attempt < kRetries; attempt++) {
    Graph g = build_attempt(params, params.seed + static_cast<uint64_t>(attempt));
    int delta = g.n() == 0 ? 0 : delta_of(g);
    if (params.delta_parity == DeltaParity::Even && delta % 2 != 0) continue;
    if (params.delta_parity == DeltaParity::Odd && delta % 2 != 1) continue;
    if (params.force_universal && !universal_vertex(g).has_value()) continue;
    SplitRecognition rec = recognize_split(g);
    if (!rec.is_split() || !is_connected(g))
      throw std::logic_error("generator produced a non-split or disconnected graph");
    return {std::move(g), *rec.partition};
  }
  throw std::invalid_argument(
      "constraint unsatisfiable within 200 retries (k=" + std::to_string(params.clique_size) +
      ", q=" + std::to_string(params.independent_count) +
      ", p=" + std::to_string(params.pendant_count) + ", parity=" +
      (params.delta_parity == DeltaParity::Even
           ? "even"
           : params.delta_parity == DeltaParity::Odd ? "odd" : "any") +
      ", universal=" + (params.force_universal ? "required" : "free") + ")");
}

namespace {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph with_extra(Graph base, const std::vector<std::pair<int, std::vector<int>>>& additions) {
  std::vector<Edge> edges = base.edges();
  int next = base.n();
  for (const auto& [unused, nbrs] : additions) {
    for (int w : nbrs) edges.emplace_back(next, w);
    next++;
  }
  return Graph(next, edges);
}

}  // namespace

Graph named_instance(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'K' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int n = std::stoi(name.substr(1));
    if (n < 1 || n > 64) throw std::invalid_argument("complete graph size out of range: " + name);
    return complete_graph(n);
  }
  if (name == "H6") return with_extra(complete_graph(5), {{0, {0, 1, 2, 3}}});
  if (name == "H7") return with_extra(complete_graph(5), {{0, {0, 1, 2}}});
  if (name == "K7y1y2") return with_extra(complete_graph(7), {{0, {0, 1}}, {0, {0, 2}}});
  if (name == "K4p01") return with_extra(complete_graph(4), {{0, {0}}, {0, {1}}});
  if (name == "K4p00") return with_extra(complete_graph(4), {{0, {0}}, {0, {0}}});
  if (name == "H6px5") return with_extra(complete_graph(5), {{0, {0, 1, 2, 3}}, {0, {4}}});
  if (name == "sigma3witness") return with_extra(complete_graph(4), {{0, {0, 1}}, {0, {2, 3}}});
  std::string known;
  for (const std::string& s : named_catalog()) known += (known.empty() ? "" : ", ") + s;
  throw std::invalid_argument("unknown instance '" + name + "' (catalog: " + known + ")");
}

std::vector<std::string> named_catalog() {
  return {"K<n>", "H6", "H7", "K7y1y2", "K4p01", "K4p00", "H6px5", "sigma3witness"};
}

}  // namespace splitcolor
