#ifndef SPLITCOLOR_GENERATOR_HPP
#define SPLITCOLOR_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "splitcolor/graph.hpp"
#include "splitcolor/split.hpp"

namespace splitcolor {

enum class DeltaParity { Any, Even, Odd };

struct GeneratorParams {
  int clique_size = 3;        // k >= 1
  int independent_count = 0;  // q, each adjacent to a nonempty proper subset of X
  int pendant_count = 0;      // p, attached to uniform random clique vertices
  bool force_universal = false;
  DeltaParity delta_parity = DeltaParity::Any;
  uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  SplitPartition partition;
};

// Seeded construction of a connected split graph: clique 0..k-1,
// independent vertices k..k+q-1, pendants after those. Same seed and
// params give a bit-identical graph (SplitMix64 stream, see rng.hpp).
// Parity/universal constraints are met by re-rolling with seed+attempt,
// up to 200 attempts; an unsatisfiable request throws with a diagnosis.
GeneratedGraph random_split_graph(const GeneratorParams& params);

// Fixed catalog: K<n>, H6, H7, K7y1y2, K4p01, K4p00, H6px5, sigma3witness.
Graph named_instance(const std::string& name);

std::vector<std::string> named_catalog();

}  // namespace splitcolor

#endif
