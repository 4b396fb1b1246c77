#include "precolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace precolor {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be nonnegative");
  adj_.resize(static_cast<size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<VertexPair>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n())
    throw std::invalid_argument("graph: vertex id " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  auto& au = adj_[static_cast<size_t>(u)];
  auto& av = adj_[static_cast<size_t>(v)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[static_cast<size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> result;
  result.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v) result.push_back({u, v});
  return result;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.n())
    throw std::invalid_argument("bfs_distances: source out of range");
  std::vector<int> dist(static_cast<size_t>(g.n()), kUnreachable);
  dist[static_cast<size_t>(source)] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<size_t>(w)] == kUnreachable) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

// BFS from source, cut off at depth `limit`; dist is reused between calls
// and reset via the touched list.
void truncated_bfs(const Graph& g, int source, int limit, std::vector<int>& dist,
                   std::vector<int>& touched) {
  dist[static_cast<size_t>(source)] = 0;
  touched.push_back(source);
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int dv = dist[static_cast<size_t>(v)];
    if (dv == limit) continue;
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<size_t>(w)] == kUnreachable) {
        dist[static_cast<size_t>(w)] = dv + 1;
        touched.push_back(w);
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<VertexPair> pairs_within(const Graph& g, const std::vector<int>& p, int k) {
  if (k < 1) throw std::invalid_argument("pairs_within: k must be positive");
  std::vector<int> members(p);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int v : members)
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("pairs_within: vertex id " + std::to_string(v) + " out of range");

  std::vector<VertexPair> result;
  std::vector<int> dist(static_cast<size_t>(g.n()), kUnreachable);
  std::vector<int> touched;
  for (int x : members) {
    truncated_bfs(g, x, k, dist, touched);
    for (int y : members) {
      if (y <= x) continue;
      int dy = dist[static_cast<size_t>(y)];
      if (dy != kUnreachable && dy <= k) result.push_back({x, y});
    }
    for (int v : touched) dist[static_cast<size_t>(v)] = kUnreachable;
    touched.clear();
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<VertexPair> coloring_conflict(const Graph& g, const Coloring& f) {
  if (static_cast<int>(f.size()) != g.n())
    throw std::invalid_argument("coloring_conflict: coloring does not cover every vertex");
  for (int v = 0; v < g.n(); ++v) {
    if (f[static_cast<size_t>(v)] < 1)
      throw std::invalid_argument("coloring_conflict: color ids must be positive");
    for (int w : g.neighbors(v))
      if (v < w && f[static_cast<size_t>(v)] == f[static_cast<size_t>(w)]) return VertexPair{v, w};
  }
  return std::nullopt;
}

bool is_proper(const Graph& g, const Coloring& f) { return !coloring_conflict(g, f).has_value(); }

std::optional<VertexPair> precoloring_conflict(const Graph& g, const Precoloring& d) {
  for (const auto& [v, c] : d) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("precoloring: vertex id " + std::to_string(v) + " out of range");
    if (c < 1) throw std::invalid_argument("precoloring: color ids must be positive");
  }
  for (const auto& [v, c] : d) {
    for (int w : g.neighbors(v)) {
      auto it = d.find(w);
      if (it != d.end() && v < w && it->second == c) return VertexPair{v, w};
    }
  }
  return std::nullopt;
}

bool extends(const Coloring& f, const Precoloring& d) {
  for (const auto& [v, c] : d) {
    if (v < 0 || v >= static_cast<int>(f.size()))
      throw std::invalid_argument("extends: precolored vertex outside the coloring domain");
    if (f[static_cast<size_t>(v)] != c) return false;
  }
  return true;
}

int max_color(const Coloring& f) {
  int best = 0;
  for (int c : f) best = std::max(best, c);
  return best;
}

int max_color(const Precoloring& d) {
  int best = 0;
  for (const auto& [v, c] : d) best = std::max(best, c);
  return best;
}

int distinct_colors(const Coloring& f) {
  std::vector<int> seen(f);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return static_cast<int>(seen.size());
}

std::vector<int> precolored_vertices(const Precoloring& d) {
  std::vector<int> p;
  p.reserve(d.size());
  for (const auto& [v, c] : d) p.push_back(v);
  return p;
}

}  // namespace precolor
