#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace precolor {

// Unordered vertex (or color) pair in canonical form: first < second.
using VertexPair = std::pair<int, int>;

// Total coloring, one positive color id per vertex; colors[v] >= 1.
using Coloring = std::vector<int>;

// Partial coloring of a vertex set P: vertex id -> positive color id.
// Must be proper on the induced subgraph to be usable by the pipelines.
using Precoloring = std::map<int, int>;

inline VertexPair make_pair_canonical(int a, int b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Simple undirected graph over dense 0-based vertex ids.
// No self-loops, no parallel edges; adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<VertexPair>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  // All edges in canonical form, sorted.
  std::vector<VertexPair> edges() const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

constexpr int kUnreachable = -1;

// Shortest-path distances from `source`; kUnreachable for disconnected
// vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// All unordered pairs {x,y} of distinct vertices of p with graph distance
// at most k. Runs one depth-truncated BFS per member of p.
std::vector<VertexPair> pairs_within(const Graph& g, const std::vector<int>& p, int k);

// First monochromatic edge of f, or nullopt when f is proper.
std::optional<VertexPair> coloring_conflict(const Graph& g, const Coloring& f);
bool is_proper(const Graph& g, const Coloring& f);

// First adjacent equal-colored pair inside the domain of d, or nullopt
// when d is proper on the induced subgraph.
std::optional<VertexPair> precoloring_conflict(const Graph& g, const Precoloring& d);

// True iff f agrees with d on the whole domain of d.
bool extends(const Coloring& f, const Precoloring& d);

int max_color(const Coloring& f);
int max_color(const Precoloring& d);
int distinct_colors(const Coloring& f);

std::vector<int> precolored_vertices(const Precoloring& d);

}  // namespace precolor
