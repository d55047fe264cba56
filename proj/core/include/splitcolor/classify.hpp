#ifndef SPLITCOLOR_CLASSIFY_HPP
#define SPLITCOLOR_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "splitcolor/colorers.hpp"
#include "splitcolor/coloring.hpp"
#include "splitcolor/graph.hpp"
#include "splitcolor/overfull.hpp"
#include "splitcolor/split.hpp"

namespace splitcolor {

// Raised when a graph is outside the class the classifiers decide
// (not split, disconnected, or stretch index != 2).
class OutOfScopeError : public std::runtime_error {
 public:
  OutOfScopeError(std::string what, int sigma) : std::runtime_error(std::move(what)), sigma_(sigma) {}
  int sigma() const { return sigma_; }  // 0 when unknown / not split

 private:
  int sigma_;
};

struct SigmaAnalysis {
  SplitRecognition recognition;
  std::optional<StretchClass> stretch;  // present iff split
};

// Split recognition plus stretch classification. Requires connectivity.
SigmaAnalysis analyze_structure(const Graph& g);

enum class EdgeVerdict { Class1, Class2 };

struct EdgeClassificationReport {
  EdgeVerdict verdict = EdgeVerdict::Class1;
  std::optional<EdgeColoring> coloring;            // present iff Class 1
  std::optional<OverfullCertificate> certificate;  // present iff Class 2
  std::string branch;
};

enum class TotalVerdict { Type1, Type2 };

struct TotalClassificationReport {
  TotalVerdict verdict = TotalVerdict::Type1;
  std::optional<TotalColoring> coloring;      // present iff Type 1
  std::optional<HiltonCheck> hilton_witness;  // present iff Type 2
  std::string branch;
};

// Chromatic-index classification of a connected (sigma=2)-split graph:
// Class 2 exactly when neighborhood-overfull, with a verified Delta-edge
// coloring in the Class 1 case. Throws OutOfScopeError when sigma != 2.
EdgeClassificationReport classify_edge(const Graph& g, SearchLimits limits = {});

// Total-coloring classification: Type 2 exactly when the pendant-free
// core has the same maximum degree and satisfies Hilton's condition,
// with a verified (Delta+1)-total coloring in the Type 1 case.
TotalClassificationReport classify_total(const Graph& g, SearchLimits limits = {});

// Pendant-extension of an edge coloring of the core H to all of G.
// Consumes missing colors at the attach vertex, introducing a fresh
// color only when none is missing. The core coloring is keyed by core
// ids and must be proper.
EdgeColoring extend_pendant_edges(const Graph& g, const PendantDecomposition& pd,
                                  const EdgeColoring& core_coloring);

// Total variant: the pendant vertex first takes the smallest edge color
// present at its attach vertex, then the pendant edge is colored as in
// the edge extension with incidence lists that include vertex colors.
TotalColoring extend_pendant_total(const Graph& g, const PendantDecomposition& pd,
                                   const TotalColoring& core_coloring);

enum class FastPath { Class1, Inconclusive };

// Sufficient condition, no coloring: with even maximum degree, if every
// maximum-degree vertex that is universal in the core has a pendant
// neighbor, the graph is Class 1.
FastPath class1_fast_path(const Graph& g, const PendantDecomposition& pd);

}  // namespace splitcolor

#endif
