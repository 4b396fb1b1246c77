#include "precolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "precolor/errors.hpp"

namespace precolor {

namespace {

struct ColorSearch {
  const Graph& g;
  const std::atomic<bool>* cancel;
  int k;
  std::vector<int> color;   // 0 = unassigned
  std::vector<int> order;   // precolored first, then degree descending
  long long ticks = 0;

  bool run(size_t pos, int max_used) {
    if (cancel && (++ticks & 0xfff) == 0 && cancel->load()) throw cancelled_error();
    if (pos == order.size()) return true;
    int v = order[pos];
    if (color[static_cast<size_t>(v)] != 0)
      return run(pos + 1, std::max(max_used, color[static_cast<size_t>(v)]));
    // Fresh color ids beyond everything seen so far are interchangeable:
    // allow only the next unused one.
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool free = true;
      for (int w : g.neighbors(v)) {
        if (color[static_cast<size_t>(w)] == c) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      color[static_cast<size_t>(v)] = c;
      if (run(pos + 1, std::max(max_used, c))) return true;
      color[static_cast<size_t>(v)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> exact_k_colorable(const Graph& g, int k, const Precoloring* d,
                                          const std::atomic<bool>* cancel) {
  if (k < 1) throw std::invalid_argument("exact_k_colorable: k must be positive");
  ColorSearch search{g, cancel, k, std::vector<int>(static_cast<size_t>(g.n()), 0), {}, 0};
  int anchor = 0;
  if (d) {
    if (precoloring_conflict(g, *d).has_value())
      throw std::invalid_argument("exact_k_colorable: precoloring is not proper");
    for (const auto& [v, c] : *d) {
      if (c > k) throw std::invalid_argument("exact_k_colorable: precolor exceeds k");
      search.color[static_cast<size_t>(v)] = c;
      anchor = std::max(anchor, c);
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v) {
    if (search.color[static_cast<size_t>(v)] != 0)
      search.order.push_back(v);
    else
      rest.push_back(v);
  }
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  search.order.insert(search.order.end(), rest.begin(), rest.end());

  if (!search.run(0, anchor)) return std::nullopt;
  return Coloring(search.color);
}

std::optional<MinExtension> min_extension_colors(const Graph& g, const Precoloring& d, int cap,
                                                 const std::atomic<bool>* cancel) {
  if (precoloring_conflict(g, d).has_value())
    throw std::invalid_argument("min_extension_colors: precoloring is not proper");
  int lo = std::max(1, max_color(d));
  if (cap < lo)
    throw std::invalid_argument("min_extension_colors: cap is below the largest precolor id");
  for (int m = lo; m <= cap; ++m) {
    if (auto witness = exact_k_colorable(g, m, &d, cancel)) return MinExtension{m, std::move(*witness)};
  }
  return std::nullopt;
}

namespace {

// Classic augmenting-path search with blossom contraction via base[].
struct BlossomMatcher {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, parent, base;
  std::vector<bool> used, in_blossom;

  explicit BlossomMatcher(int n_, const std::vector<std::vector<int>>& adj_)
      : n(n_), adj(adj_), match(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n)),
        base(static_cast<size_t>(n)), used(static_cast<size_t>(n)), in_blossom(static_cast<size_t>(n)) {}

  int lca(int a, int b) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (;;) {
      a = base[static_cast<size_t>(a)];
      seen[static_cast<size_t>(a)] = true;
      if (match[static_cast<size_t>(a)] == -1) break;
      a = parent[static_cast<size_t>(match[static_cast<size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<size_t>(b)];
      if (seen[static_cast<size_t>(b)]) return b;
      b = parent[static_cast<size_t>(match[static_cast<size_t>(b)])];
    }
  }

  void mark_path(int v, int stop, int child) {
    while (base[static_cast<size_t>(v)] != stop) {
      in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = true;
      in_blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = true;
      parent[static_cast<size_t>(v)] = child;
      child = match[static_cast<size_t>(v)];
      v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
    }
  }

  int find_augmenting(int root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[static_cast<size_t>(root)] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj[static_cast<size_t>(v)]) {
        if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
            match[static_cast<size_t>(v)] == to)
          continue;
        if (to == root ||
            (match[static_cast<size_t>(to)] != -1 && parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
          int stop = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, stop, to);
          mark_path(to, stop, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
              base[static_cast<size_t>(i)] = stop;
              if (!used[static_cast<size_t>(i)]) {
                used[static_cast<size_t>(i)] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent[static_cast<size_t>(to)] == -1) {
          parent[static_cast<size_t>(to)] = v;
          if (match[static_cast<size_t>(to)] == -1) return to;
          used[static_cast<size_t>(match[static_cast<size_t>(to)])] = true;
          queue.push(match[static_cast<size_t>(to)]);
        }
      }
    }
    return -1;
  }

  void solve() {
    for (int v = 0; v < n; ++v) {
      if (match[static_cast<size_t>(v)] != -1) continue;
      int u = find_augmenting(v);
      while (u != -1) {
        int pv = parent[static_cast<size_t>(u)];
        int next = match[static_cast<size_t>(pv)];
        match[static_cast<size_t>(u)] = pv;
        match[static_cast<size_t>(pv)] = u;
        u = next;
      }
    }
  }
};

std::vector<std::vector<int>> build_adjacency(int n, const std::vector<VertexPair>& edges,
                                              const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative vertex count");
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument(std::string(what) + ": endpoint out of range");
    if (u == v) throw std::invalid_argument(std::string(what) + ": self-loop");
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  return adj;
}

}  // namespace

std::vector<VertexPair> max_matching_exact(int n, const std::vector<VertexPair>& edges) {
  if (n > 64) throw std::invalid_argument("max_matching_exact: n must be at most 64");
  BlossomMatcher matcher(n, build_adjacency(n, edges, "max_matching_exact"));
  matcher.solve();
  std::vector<VertexPair> result;
  for (int v = 0; v < n; ++v)
    if (matcher.match[static_cast<size_t>(v)] > v) result.push_back({v, matcher.match[static_cast<size_t>(v)]});
  return result;
}

BergeResult berge_deficiency(int n, const std::vector<VertexPair>& edges) {
  if (n > 16) throw std::invalid_argument("berge_deficiency: n must be at most 16 (subset enumeration)");
  auto adj = build_adjacency(n, edges, "berge_deficiency");
  int deficiency = n - 2 * static_cast<int>(max_matching_exact(n, edges).size());

  std::vector<int> component(static_cast<size_t>(n));
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // odd components of G - S, where S = vertices in mask
    std::fill(component.begin(), component.end(), -1);
    int odd = 0;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) continue;
      if (component[static_cast<size_t>(v)] != -1) continue;
      int size = 0;
      std::vector<int> stack{v};
      component[static_cast<size_t>(v)] = v;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++size;
        for (int w : adj[static_cast<size_t>(x)]) {
          if ((mask >> w) & 1u) continue;
          if (component[static_cast<size_t>(w)] == -1) {
            component[static_cast<size_t>(w)] = v;
            stack.push_back(w);
          }
        }
      }
      odd += size & 1;
    }
    if (odd - __builtin_popcount(mask) == deficiency) {
      std::vector<int> witness;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) witness.push_back(v);
      return BergeResult{deficiency, witness};
    }
  }
  throw std::logic_error("berge_deficiency: no witness set found");
}

}  // namespace precolor
