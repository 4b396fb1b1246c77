#pragma once

#include <optional>
#include <string>
#include <vector>

#include "precolor/colorgraph.hpp"
#include "precolor/graph.hpp"

namespace precolor {

enum class Regime { kSmall, kLarge };  // k <= r vs k > r

// Matching oriented for the coloring constructor. When the matching holds
// an E1 edge, that edge comes first, oriented so its first color is the
// precolor of the lower-id vertex of the unique realizing pair, and the
// base coloring is relabeled so that vertex sits in class 1.
struct AlignedMatching {
  std::vector<ColorPair> pairs;  // (m_i, n_i), one per base class i
  Coloring base;
};

AlignedMatching align_for_e1(const Matching& m, const OrderedPartition& e, const Graph& g,
                             const Precoloring& d, const Coloring& base);

// Color every non-precolored vertex of base class i with m_i, or with n_i
// when a neighbor is precolored m_i; precolored vertices keep their
// precolor; leftover base classes (small regime) move to fresh colors
// above r+k. Proper whenever the matching is good and aligned.
Coloring extend_via_matching(const Graph& g, const Precoloring& d, const Coloring& base,
                             const std::vector<ColorPair>& pairs, Regime regime, int r, int k);

struct Extend2Report {
  int r = 0;
  int k = 0;
  std::string theorem;        // "even", "odd", "large-mid-k", "large-high-k"
  long long d2_pairs = 0;     // |pairs_within(P, 2)|
  long long weight = 0;       // |E1| + 2|E2|
  long long bound = 0;        // hypothesis threshold on the weight
  bool hypothesis_satisfied = false;
  int target = 0;             // required good-matching order
  bool success = false;
  Matching matching;
  int budget = 0;             // color budget of the applied route
  int colors_used = 0;        // distinct colors in the output
};

struct Extend2Result {
  std::optional<Coloring> coloring;
  Extend2Report report;
};

// Dispatch on the parity of r+k and on k vs r, search for a good matching
// of the required order, and build the extension. When no good matching
// of that order exists the result carries no coloring; no extra colors
// are spent silently.
Extend2Result extend_distance2(const Graph& g, const Precoloring& d, const Coloring& base, int r,
                               int k);

// Sequential greedy extension with unlimited colors. Outside every
// guarantee; offered by the CLI as an explicit fallback.
Coloring greedy_extension(const Graph& g, const Precoloring& d);

}  // namespace precolor
