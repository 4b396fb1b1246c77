#include "precolor/colorgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "precolor/oracle.hpp"

namespace precolor {

long long OrderedPartition::phi_of(int i, int j) const {
  auto it = phi.find(make_pair_canonical(i, j));
  return it == phi.end() ? 0 : it->second;
}

int OrderedPartition::edge_class(int i, int j) const {
  long long count = phi_of(i, j);
  return count == 0 ? 0 : (count == 1 ? 1 : 2);
}

std::vector<ColorPair> OrderedPartition::class_edges(int cls) const {
  std::vector<ColorPair> result;
  for (int i = 1; i <= num_colors; ++i)
    for (int j = i + 1; j <= num_colors; ++j)
      if (edge_class(i, j) == cls) result.push_back({i, j});
  return result;
}

long long OrderedPartition::e1_count() const {
  long long count = 0;
  for (const auto& [e, mult] : phi) count += mult == 1;
  return count;
}

long long OrderedPartition::e2_count() const {
  long long count = 0;
  for (const auto& [e, mult] : phi) count += mult >= 2;
  return count;
}

OrderedPartition build_partition(const Graph& g, const Precoloring& d, int num_colors) {
  if (num_colors < 1) throw std::invalid_argument("build_partition: need at least one color");
  for (const auto& [v, c] : d)
    if (c < 1 || c > num_colors)
      throw std::invalid_argument("build_partition: precolor " + std::to_string(c) + " out of range");
  OrderedPartition e;
  e.num_colors = num_colors;
  for (const auto& [x, y] : pairs_within(g, precolored_vertices(d), 2)) {
    int i = d.at(x), j = d.at(y);
    if (i == j) continue;
    e.phi[make_pair_canonical(i, j)] += 1;
  }
  return e;
}

long long partition_weight(const OrderedPartition& e) { return e.e1_count() + 2 * e.e2_count(); }

bool is_good(const Matching& m, const OrderedPartition& e) {
  std::set<int> covered;
  for (const auto& [i, j] : m) {
    if (i < 1 || j < 1 || i > e.num_colors || j > e.num_colors)
      throw std::invalid_argument("is_good: color id out of range");
    if (i == j || !covered.insert(i).second || !covered.insert(j).second)
      throw std::invalid_argument("is_good: not a matching");
  }
  int e1_edges = 0;
  for (const auto& [i, j] : m) {
    int cls = e.edge_class(i, j);
    if (cls == 2) return false;
    e1_edges += cls == 1;
  }
  return e1_edges <= 1;
}

std::vector<Matching> one_factorization(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("one_factorization: n must be even and at least 2");
  std::vector<Matching> factors;
  factors.reserve(static_cast<size_t>(n - 1));
  for (int round = 0; round < n - 1; ++round) {
    Matching factor;
    factor.push_back(make_pair_canonical(n - 1, round));
    for (int j = 1; j <= n / 2 - 1; ++j) {
      int a = (round + j) % (n - 1);
      int b = (round - j + (n - 1)) % (n - 1);
      factor.push_back(make_pair_canonical(a, b));
    }
    std::sort(factor.begin(), factor.end());
    factors.push_back(std::move(factor));
  }
  return factors;
}

namespace {

Matching sorted(Matching m) {
  std::sort(m.begin(), m.end());
  return m;
}

// Max matching inside E0, optionally avoiding the endpoints of one edge.
// Colors are shifted to 0-based ids for the matcher.
Matching e0_matching(const OrderedPartition& e, int skip_a = 0, int skip_b = 0) {
  std::vector<VertexPair> edges;
  for (int i = 1; i <= e.num_colors; ++i) {
    if (i == skip_a || i == skip_b) continue;
    for (int j = i + 1; j <= e.num_colors; ++j) {
      if (j == skip_a || j == skip_b) continue;
      if (e.edge_class(i, j) == 0) edges.push_back({i - 1, j - 1});
    }
  }
  Matching result;
  for (const auto& [a, b] : max_matching_exact(e.num_colors, edges)) result.push_back({a + 1, b + 1});
  return sorted(std::move(result));
}

}  // namespace

std::optional<Matching> find_good_matching(const OrderedPartition& e, int target) {
  if (target < 0 || target > e.num_colors / 2)
    throw std::invalid_argument("find_good_matching: target order out of range");
  Matching inside = e0_matching(e);
  if (static_cast<int>(inside.size()) >= target)
    return Matching(inside.begin(), inside.begin() + target);
  for (const auto& [a, b] : e.class_edges(1)) {
    Matching rest = e0_matching(e, a, b);
    if (static_cast<int>(rest.size()) >= target - 1) {
      Matching m(rest.begin(), rest.begin() + (target - 1));
      m.push_back({a, b});
      return sorted(std::move(m));
    }
  }
  return std::nullopt;
}

std::optional<Matching> scan_factors_for_good(const OrderedPartition& e) {
  if (e.num_colors % 2 != 0)
    throw std::invalid_argument("scan_factors_for_good: needs an even number of colors");
  for (const auto& factor : one_factorization(e.num_colors)) {
    Matching shifted;
    shifted.reserve(factor.size());
    for (const auto& [a, b] : factor) shifted.push_back({a + 1, b + 1});
    if (is_good(shifted, e)) return sorted(std::move(shifted));
  }
  return std::nullopt;
}

std::optional<Matching> augment_good_matching(const Matching& m, const OrderedPartition& e) {
  for (const auto& [i, j] : m)
    if (e.edge_class(i, j) != 0)
      throw std::invalid_argument("augment_good_matching: matching must lie inside E0");
  if (static_cast<int>(m.size()) >= e.num_colors / 2)
    throw std::invalid_argument("augment_good_matching: matching already has maximum order");

  std::vector<bool> covered(static_cast<size_t>(e.num_colors) + 1, false);
  for (const auto& [i, j] : m) covered[static_cast<size_t>(i)] = covered[static_cast<size_t>(j)] = true;
  std::vector<int> uncovered;
  for (int c = 1; c <= e.num_colors; ++c)
    if (!covered[static_cast<size_t>(c)]) uncovered.push_back(c);

  // Case 1: an E0 or E1 edge among the uncovered colors extends m directly.
  for (size_t a = 0; a < uncovered.size(); ++a)
    for (size_t b = a + 1; b < uncovered.size(); ++b)
      if (e.edge_class(uncovered[a], uncovered[b]) <= 1) {
        Matching grown(m);
        grown.push_back({uncovered[a], uncovered[b]});
        return sorted(std::move(grown));
      }

  // Case 2: more E0 than E2 edges between V(m) and the uncovered set.
  long long cross0 = 0, cross2 = 0;
  for (const auto& [i, j] : m) {
    for (int x : uncovered) {
      for (int end : {i, j}) {
        int cls = e.edge_class(end, x);
        cross0 += cls == 0;
        cross2 += cls == 2;
      }
    }
  }
  if (cross0 <= cross2) return std::nullopt;

  for (const auto& [i, j] : m) {
    long long local0 = 0, local2 = 0;
    for (int x : uncovered) {
      for (int end : {i, j}) {
        int cls = e.edge_class(end, x);
        local0 += cls == 0;
        local2 += cls == 2;
      }
    }
    if (local2 >= local0) continue;
    // Orient the edge so `a` has an E0 edge into the uncovered set.
    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      int x0 = 0;
      for (int x : uncovered)
        if (e.edge_class(a, x) == 0) {
          x0 = x;
          break;
        }
      if (x0 == 0) continue;
      auto replace = [&](int ax, int bx) -> std::optional<Matching> {
        Matching grown;
        for (const auto& edge : m)
          if (edge != make_pair_canonical(i, j)) grown.push_back(edge);
        grown.push_back(make_pair_canonical(a, ax));
        grown.push_back(make_pair_canonical(b, bx));
        Matching result = sorted(std::move(grown));
        if (is_good(result, e)) return result;
        return std::nullopt;
      };
      for (int x : uncovered) {
        if (x == x0) continue;
        if (e.edge_class(b, x) <= 1)
          if (auto result = replace(x0, x)) return result;
      }
      for (int x1 : uncovered) {
        if (x1 == x0) continue;
        if (auto result = replace(x1, x0)) return result;
        break;
      }
    }
  }
  return std::nullopt;
}

long long max_edges_without_matching(int n, int t) {
  if (t < 1 || t > n / 2)
    throw std::invalid_argument("max_edges_without_matching: need 1 <= t <= n/2");
  long long tl = t, nl = n;
  if (5 * tl < 2 * nl + 2) {
    long long product = (tl - 1) * (2 * nl - tl);
    if (product % 2 != 0) throw std::logic_error("max_edges_without_matching: non-integral value");
    return product / 2;
  }
  return (tl - 1) * (2 * tl - 1);
}

std::pair<Graph, Graph> matching_extremal_graphs(int n, int t) {
  if (t < 1 || t > n / 2)
    throw std::invalid_argument("matching_extremal_graphs: need 1 <= t <= n/2");
  Graph clique(n);  // K_{2t-1} plus isolated vertices
  for (int u = 0; u < 2 * t - 1; ++u)
    for (int v = u + 1; v < 2 * t - 1; ++v) clique.add_edge(u, v);
  Graph join(n);  // K_{t-1} joined to an independent set of n-t+1 vertices
  for (int u = 0; u < t - 1; ++u) {
    for (int v = u + 1; v < n; ++v) join.add_edge(u, v);
  }
  return {std::move(clique), std::move(join)};
}

}  // namespace precolor
