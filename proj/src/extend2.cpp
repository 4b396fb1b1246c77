#include "precolor/extend2.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "precolor/errors.hpp"

namespace precolor {

AlignedMatching align_for_e1(const Matching& m, const OrderedPartition& e, const Graph& g,
                             const Precoloring& d, const Coloring& base) {
  if (!is_good(m, e)) throw std::invalid_argument("align_for_e1: matching is not good");
  std::vector<ColorPair> plain, special;
  for (const auto& edge : m)
    (e.edge_class(edge.first, edge.second) == 1 ? special : plain).push_back(edge);
  std::sort(plain.begin(), plain.end());

  AlignedMatching aligned;
  aligned.base = base;
  if (special.empty()) {
    aligned.pairs = plain;
    return aligned;
  }

  auto [i, j] = special.front();
  std::vector<VertexPair> realizing;
  for (const auto& [x, y] : pairs_within(g, precolored_vertices(d), 2))
    if (make_pair_canonical(d.at(x), d.at(y)) == make_pair_canonical(i, j)) realizing.push_back({x, y});
  if (realizing.size() != 1)
    throw std::logic_error("align_for_e1: E1 edge with " + std::to_string(realizing.size()) +
                           " realizing pairs");
  int x1 = realizing[0].first;  // lower vertex id of the pair
  int y1 = realizing[0].second;
  aligned.pairs.push_back({d.at(x1), d.at(y1)});
  aligned.pairs.insert(aligned.pairs.end(), plain.begin(), plain.end());

  // Relabel base classes so that x1 sits in class 1.
  int have = base[static_cast<size_t>(x1)];
  if (have != 1)
    for (auto& c : aligned.base) c = (c == have) ? 1 : (c == 1 ? have : c);
  return aligned;
}

Coloring extend_via_matching(const Graph& g, const Precoloring& d, const Coloring& base,
                             const std::vector<ColorPair>& pairs, Regime regime, int r, int k) {
  if (r < 1 || k < 1) throw std::invalid_argument("extend_via_matching: r and k must be positive");
  if (regime == Regime::kSmall && k > r)
    throw std::invalid_argument("extend_via_matching: small regime needs k <= r");
  if (regime == Regime::kLarge && k <= r)
    throw std::invalid_argument("extend_via_matching: large regime needs k > r");
  int expected = regime == Regime::kSmall ? (r + k) / 2 : r;
  if (static_cast<int>(pairs.size()) != expected)
    throw std::invalid_argument("extend_via_matching: need exactly " + std::to_string(expected) +
                                " matched pairs for this regime");
  if (static_cast<int>(base.size()) != g.n())
    throw std::invalid_argument("extend_via_matching: base coloring does not cover the graph");
  if (max_color(base) > r) throw std::invalid_argument("extend_via_matching: base uses colors beyond r");
  std::vector<bool> seen(static_cast<size_t>(r + k) + 1, false);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b < 1 || a > r + k || b > r + k || a == b)
      throw std::invalid_argument("extend_via_matching: matched colors out of range");
    if (seen[static_cast<size_t>(a)] || seen[static_cast<size_t>(b)])
      throw std::invalid_argument("extend_via_matching: matched pairs overlap");
    seen[static_cast<size_t>(a)] = seen[static_cast<size_t>(b)] = true;
  }

  int fresh_origin = (r + k + 1) / 2;  // class i beyond the matching gets fresh_origin + i
  Coloring f(static_cast<size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v) {
    auto it = d.find(v);
    if (it != d.end()) {
      f[static_cast<size_t>(v)] = it->second;
      continue;
    }
    int cls = base[static_cast<size_t>(v)];
    if (cls <= expected) {
      auto [mi, ni] = pairs[static_cast<size_t>(cls - 1)];
      bool blocked = false;
      for (int w : g.neighbors(v)) {
        auto wt = d.find(w);
        if (wt != d.end() && wt->second == mi) {
          blocked = true;
          break;
        }
      }
      f[static_cast<size_t>(v)] = blocked ? ni : mi;
    } else {
      f[static_cast<size_t>(v)] = fresh_origin + cls;
    }
  }
  if (auto conflict = coloring_conflict(g, f))
    throw std::logic_error("extend_via_matching: construction broke properness at edge " +
                           std::to_string(conflict->first) + "-" + std::to_string(conflict->second));
  return f;
}

Extend2Result extend_distance2(const Graph& g, const Precoloring& d, const Coloring& base, int r,
                               int k) {
  if (r < 2 || k < 1) throw std::invalid_argument("extend_distance2: need r >= 2 and k >= 1");
  if (static_cast<int>(base.size()) != g.n())
    throw std::invalid_argument("extend_distance2: base coloring does not cover the graph");
  if (max_color(base) > r) throw std::invalid_argument("extend_distance2: base uses colors beyond r");
  if (!is_proper(g, base)) throw std::invalid_argument("extend_distance2: base coloring is not proper");
  if (precoloring_conflict(g, d).has_value())
    throw std::invalid_argument("extend_distance2: precoloring is not proper");
  if (max_color(d) > r + k)
    throw std::invalid_argument("extend_distance2: precoloring uses colors beyond r+k");

  int n_colors = r + k;
  OrderedPartition part = build_partition(g, d, n_colors);

  Extend2Result result;
  Extend2Report& report = result.report;
  report.r = r;
  report.k = k;
  report.d2_pairs = static_cast<long long>(pairs_within(g, precolored_vertices(d), 2).size());
  report.weight = partition_weight(part);

  if (k <= r) {
    if (n_colors % 2 == 0) {
      report.theorem = "even";
      report.bound = 2LL * (n_colors - 1);
    } else {
      report.theorem = "odd";
      report.bound = std::min<long long>(3LL * (n_colors - 1),
                                         static_cast<long long>(n_colors + 3) * (n_colors + 5) / 8);
    }
    report.target = n_colors / 2;
    report.budget = (3 * r + k + 1) / 2;
  } else {
    long long quad;
    if (2 * k <= 3 * r - 7) {
      report.theorem = "large-mid-k";
      quad = static_cast<long long>(k + 3 * r - 4) * (k - r + 3) / 2;
    } else {
      report.theorem = "large-high-k";
      quad = static_cast<long long>(k + 1) * (k + 2) / 2;
    }
    report.bound = std::min(quad, static_cast<long long>(k - r + 2) * (k + r - 1));
    report.target = r;
    report.budget = r + k;
  }
  report.hypothesis_satisfied = report.weight < report.bound;

  auto matching = find_good_matching(part, report.target);
  if (!matching) return result;
  report.matching = *matching;

  AlignedMatching aligned = align_for_e1(*matching, part, g, d, base);
  Regime regime = k <= r ? Regime::kSmall : Regime::kLarge;
  Coloring f = extend_via_matching(g, d, aligned.base, aligned.pairs, regime, r, k);
  if (!extends(f, d)) throw std::logic_error("extend_distance2: result does not extend the precoloring");
  report.colors_used = distinct_colors(f);
  if (report.colors_used > report.budget)
    throw std::logic_error("extend_distance2: color budget exceeded");
  report.success = true;
  result.coloring = std::move(f);
  return result;
}

Coloring greedy_extension(const Graph& g, const Precoloring& d) {
  if (precoloring_conflict(g, d).has_value())
    throw std::invalid_argument("greedy_extension: precoloring is not proper");
  Coloring f(static_cast<size_t>(g.n()), 0);
  for (const auto& [v, c] : d) f[static_cast<size_t>(v)] = c;
  for (int v = 0; v < g.n(); ++v) {
    if (f[static_cast<size_t>(v)] != 0) continue;
    std::vector<bool> taken(static_cast<size_t>(g.degree(v)) + 2, false);
    for (int w : g.neighbors(v)) {
      int c = f[static_cast<size_t>(w)];
      if (c >= 1 && c < static_cast<int>(taken.size())) taken[static_cast<size_t>(c)] = true;
    }
    int c = 1;
    while (taken[static_cast<size_t>(c)]) ++c;
    f[static_cast<size_t>(v)] = c;
  }
  return f;
}

}  // namespace precolor
