#pragma once

#include <atomic>
#include <optional>

#include "precolor/graph.hpp"

namespace precolor {

// Exact brute-force ground truth, kept independent of the extension
// pipelines so tests can cross-check two implementations.

// Proper k-coloring of g extending d when one exists, else nullopt.
// Deterministic: precolored vertices first, remaining vertices by degree
// descending, colors tried lowest first with fresh ids introduced in
// order. Long searches poll `cancel` and throw cancelled_error.
std::optional<Coloring> exact_k_colorable(const Graph& g, int k, const Precoloring* d = nullptr,
                                          const std::atomic<bool>* cancel = nullptr);

struct MinExtension {
  int colors;
  Coloring witness;
};

// Smallest m <= cap such that a proper coloring with colors in [m]
// extends d, with a witness; nullopt when no m <= cap works.
std::optional<MinExtension> min_extension_colors(const Graph& g, const Precoloring& d, int cap,
                                                 const std::atomic<bool>* cancel = nullptr);

// Maximum-cardinality matching via augmenting paths with blossom
// contraction. n <= 64.
std::vector<VertexPair> max_matching_exact(int n, const std::vector<VertexPair>& edges);

struct BergeResult {
  int deficiency;            // n - 2 * (maximum matching order)
  std::vector<int> witness;  // S with (odd components of G-S) - |S| = deficiency
};

// Deficiency plus a witness set found by subset enumeration. n <= 16.
BergeResult berge_deficiency(int n, const std::vector<VertexPair>& edges);

}  // namespace precolor
