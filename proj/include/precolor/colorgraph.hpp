#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "precolor/graph.hpp"

namespace precolor {

// Unordered pair of 1-based color ids, canonical form first < second.
using ColorPair = std::pair<int, int>;

// Matching on the complete color graph: pairwise disjoint color pairs,
// kept sorted in canonical form.
using Matching = std::vector<ColorPair>;

// Partition of the edges of the complete graph on [num_colors] by the
// multiplicity phi(e) = number of precolored distance-2 pairs realizing
// the color pair e: E0 (phi = 0), E1 (phi = 1), E2 (phi >= 2).
struct OrderedPartition {
  int num_colors = 0;
  std::map<ColorPair, long long> phi;  // nonzero entries only

  long long phi_of(int i, int j) const;
  int edge_class(int i, int j) const;  // 0, 1 or 2
  std::vector<ColorPair> class_edges(int cls) const;
  long long e1_count() const;
  long long e2_count() const;
};

// phi over the distance-2 pairs of the domain of d; pairs with equal
// precolors contribute nothing.
OrderedPartition build_partition(const Graph& g, const Precoloring& d, int num_colors);

// |E1| + 2|E2|. Never exceeds the number of distance-2 pairs.
long long partition_weight(const OrderedPartition& e);

// A matching is good when it avoids E2 and uses at most one E1 edge.
bool is_good(const Matching& m, const OrderedPartition& e);

// Round-robin decomposition of E(K_n) into n-1 perfect matchings,
// n even: vertex n-1 fixed, vertices 0..n-2 rotated. 0-based ids.
std::vector<Matching> one_factorization(int n);

// Good matching with exactly `target` edges if one exists, else nullopt.
// Complete search: a matching inside E0, or one E1 edge plus a matching
// inside E0 avoiding its endpoints.
std::optional<Matching> find_good_matching(const OrderedPartition& e, int target);

// First perfect factor of the round-robin decomposition that is good;
// num_colors must be even. Retained as an independent route next to
// find_good_matching.
std::optional<Matching> scan_factors_for_good(const OrderedPartition& e);

// Grow a matching m inside E0 by one edge while staying good: either an
// E0/E1 edge among the uncovered colors, or a swap that replaces one
// m-edge by two edges into the uncovered set. nullopt when neither case
// applies.
std::optional<Matching> augment_good_matching(const Matching& m, const OrderedPartition& e);

// Largest edge count of an n-vertex graph with no matching of order t:
// (t-1)(2n-t)/2 when 5t < 2n+2, else (t-1)(2t-1).
long long max_edges_without_matching(int n, int t);

// The two extremal graphs attaining max_edges_without_matching:
// a clique on 2t-1 vertices plus isolated vertices, and a clique on t-1
// vertices joined to an independent set. Both have maximum matching t-1.
std::pair<Graph, Graph> matching_extremal_graphs(int n, int t);

}  // namespace precolor
