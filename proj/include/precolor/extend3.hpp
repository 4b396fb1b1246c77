#pragma once

#include <optional>
#include <vector>

#include "precolor/graph.hpp"

namespace precolor {

// Partition of the precolored set used by the staged recoloring driver:
// at most one leftover singleton plus classes whose members are pairwise
// far apart (distance >= 4) in the host graph.
struct ClassPartition {
  std::vector<int> singleton;             // size <= 1
  std::vector<std::vector<int>> classes;  // independent sets of the auxiliary graph
};

// Auxiliary graph on a vertex subset: h's vertex i stands for vertices[i],
// edges join members at host distance <= k.
struct AuxiliaryGraph {
  std::vector<int> vertices;  // sorted member ids
  Graph h;
};

AuxiliaryGraph conflict_graph(const Graph& g, const std::vector<int>& p, int k);

// Split h into at most k independent classes, plus at most one singleton
// when h is not k-colorable: remove a maximum-degree vertex, recurse with
// k-1, and promote the inner singleton to an ordinary class. Requires
// |E(h)| <= k(k+1)/2.
ClassPartition almost_k_coloring(const Graph& h, int k);

// One recoloring stage: every member x of `stage` whose current color
// differs from d(x) pushes the conflicting neighbors to `fresh`, then
// takes d(x). Stage members must be pairwise at distance >= 4 and fresh
// must not occur in f.
Coloring pin_stage_colors(const Graph& g, const Coloring& f, const std::vector<int>& stage,
                          const Precoloring& d, int fresh);

// Smallest k >= 1 with k(k+1)/2 >= pair_count.
int least_k_for_pair_count(long long pair_count);

// Extend d to a proper coloring with at most r+k colors, given a proper
// base coloring over [r], d over [r+1], and at most k(k+1)/2 precolored
// pairs at distance <= 3.
Coloring extend_distance3(const Graph& g, const Precoloring& d, const Coloring& base, int r, int k);

}  // namespace precolor
