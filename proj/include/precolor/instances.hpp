#pragma once

#include <cstdint>
#include <optional>

#include "precolor/graph.hpp"

namespace precolor {

// A precoloring-extension problem bundled with its witness base coloring
// and recomputed distance-pair counts.
struct Instance {
  Graph graph;
  std::vector<int> p;
  Precoloring d;
  int r = 0;
  int k = 0;
  int q = 0;  // 0 for random instances
  Coloring base;
  long long d2_pairs = 0;
  long long d3_pairs = 0;
  std::optional<int> budget;  // color count that provably does not suffice
};

// Tightness instance for r+k even: a balanced complete r-partite graph
// with pendant precolored vertices attached through per-part hub vertices.
// 2(r+k-1) precolored pairs at distance 2; no extension with (3r+k)/2
// colors exists. Requires r >= 2, 1 <= k <= r, r+k even, q >= r+k.
Instance gen_sharpness_even(int r, int k, int q);

// Tightness instance for r+k odd, with 3(r+k-1) precolored pairs at
// distance 2 and no extension with (3r+k+1)/2 colors. Requires r >= 2,
// 1 <= k <= r, r+k odd, q >= r+k.
Instance gen_sharpness_odd(int r, int k, int q);

struct RandomInstanceParams {
  int r = 2;
  int k = 1;
  int n = 20;
  double edge_prob = 0.2;
  int p_size = 4;
  long long max_d2 = -1;  // -1: unconstrained
  long long max_d3 = -1;
  std::uint64_t seed = 0;
  int max_retries = 500;
};

// Random graph with a planted proper r-coloring; P sampled by rejection
// until the distance-pair budgets hold; d drawn by randomized greedy
// assignment over [r+k]. Fully reproducible from the seed; throws
// retry_error when the retry budget runs out.
Instance gen_random(const RandomInstanceParams& params);

}  // namespace precolor
