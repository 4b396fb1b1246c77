#include "precolor/extend3.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "precolor/errors.hpp"
#include "precolor/oracle.hpp"

namespace precolor {

AuxiliaryGraph conflict_graph(const Graph& g, const std::vector<int>& p, int k) {
  AuxiliaryGraph aux;
  aux.vertices = p;
  std::sort(aux.vertices.begin(), aux.vertices.end());
  aux.vertices.erase(std::unique(aux.vertices.begin(), aux.vertices.end()), aux.vertices.end());
  aux.h = Graph(static_cast<int>(aux.vertices.size()));
  std::map<int, int> index;
  for (size_t i = 0; i < aux.vertices.size(); ++i) index[aux.vertices[i]] = static_cast<int>(i);
  for (const auto& [x, y] : pairs_within(g, aux.vertices, k)) aux.h.add_edge(index[x], index[y]);
  return aux;
}

namespace {

Graph induced_without(const Graph& h, int removed) {
  Graph sub(h.n() - 1);
  auto shift = [removed](int v) { return v < removed ? v : v - 1; };
  for (const auto& [u, v] : h.edges())
    if (u != removed && v != removed) sub.add_edge(shift(u), shift(v));
  return sub;
}

ClassPartition almost_rec(const Graph& h, const std::vector<int>& ids, int k) {
  if (auto coloring = exact_k_colorable(h, k)) {
    ClassPartition part;
    part.classes.resize(static_cast<size_t>(k));
    for (int v = 0; v < h.n(); ++v)
      part.classes[static_cast<size_t>((*coloring)[static_cast<size_t>(v)] - 1)].push_back(ids[static_cast<size_t>(v)]);
    std::erase_if(part.classes, [](const std::vector<int>& cls) { return cls.empty(); });
    return part;
  }
  // Not k-colorable, so some vertex has degree >= k; removing it keeps the
  // edge budget of the k-1 level.
  int worst = 0;
  for (int v = 1; v < h.n(); ++v)
    if (h.degree(v) > h.degree(worst)) worst = v;

  if (k == 1) {
    // Budget of 1 edge; dropping one endpoint leaves an edgeless graph.
    ClassPartition part;
    part.singleton.push_back(ids[static_cast<size_t>(worst)]);
    std::vector<int> rest;
    for (int v = 0; v < h.n(); ++v)
      if (v != worst) rest.push_back(ids[static_cast<size_t>(v)]);
    if (!rest.empty()) part.classes.push_back(std::move(rest));
    return part;
  }

  std::vector<int> inner_ids;
  for (int v = 0; v < h.n(); ++v)
    if (v != worst) inner_ids.push_back(ids[static_cast<size_t>(v)]);
  ClassPartition part = almost_rec(induced_without(h, worst), inner_ids, k - 1);
  if (!part.singleton.empty()) {
    part.classes.push_back(part.singleton);
    part.singleton.clear();
  }
  part.singleton.push_back(ids[static_cast<size_t>(worst)]);
  return part;
}

}  // namespace

ClassPartition almost_k_coloring(const Graph& h, int k) {
  if (k < 1) throw std::invalid_argument("almost_k_coloring: k must be positive");
  if (2LL * h.edge_count() > static_cast<long long>(k) * (k + 1))
    throw guarantee_error("almost_k_coloring: edge budget k(k+1)/2 exceeded");
  std::vector<int> ids(static_cast<size_t>(h.n()));
  for (int v = 0; v < h.n(); ++v) ids[static_cast<size_t>(v)] = v;
  return almost_rec(h, ids, k);
}

namespace {

// Core of one stage without precondition checks; records every vertex
// whose color becomes `fresh`.
void apply_stage(const Graph& g, Coloring& f, const std::vector<int>& stage, const Precoloring& d,
                 int fresh, std::vector<int>* got_fresh) {
  for (int x : stage) {
    auto it = d.find(x);
    if (it == d.end())
      throw std::invalid_argument("stage vertex " + std::to_string(x) + " is not precolored");
    int want = it->second;
    if (f[static_cast<size_t>(x)] == want) continue;
    for (int v : g.neighbors(x)) {
      if (f[static_cast<size_t>(v)] == want) {
        f[static_cast<size_t>(v)] = fresh;
        if (got_fresh) got_fresh->push_back(v);
      }
    }
    f[static_cast<size_t>(x)] = want;
    if (want == fresh && got_fresh) got_fresh->push_back(x);
  }
}

void require_far_apart(const Graph& g, const std::vector<int>& stage) {
  auto close = pairs_within(g, stage, 3);
  if (!close.empty())
    throw std::invalid_argument("stage vertices " + std::to_string(close[0].first) + " and " +
                                std::to_string(close[0].second) + " are within distance 3");
}

void require_fresh_class_independent(const Graph& g, const Coloring& f, int fresh) {
  std::vector<int> owners;
  for (int v = 0; v < g.n(); ++v)
    if (f[static_cast<size_t>(v)] == fresh) owners.push_back(v);
  for (size_t a = 0; a < owners.size(); ++a)
    for (size_t b = a + 1; b < owners.size(); ++b)
      if (g.has_edge(owners[a], owners[b]))
        throw std::logic_error("stage produced adjacent fresh-colored vertices");
}

}  // namespace

Coloring pin_stage_colors(const Graph& g, const Coloring& f, const std::vector<int>& stage,
                          const Precoloring& d, int fresh) {
  require_far_apart(g, stage);
  for (int c : f)
    if (c == fresh) throw std::invalid_argument("pin_stage_colors: fresh color already in use");
  Coloring result(f);
  apply_stage(g, result, stage, d, fresh, nullptr);
  return result;
}

int least_k_for_pair_count(long long pair_count) {
  int k = 1;
  while (static_cast<long long>(k) * (k + 1) / 2 < pair_count) ++k;
  return k;
}

Coloring extend_distance3(const Graph& g, const Precoloring& d, const Coloring& base, int r, int k) {
  if (r < 1 || k < 1) throw std::invalid_argument("extend_distance3: r and k must be positive");
  if (static_cast<int>(base.size()) != g.n())
    throw std::invalid_argument("extend_distance3: base coloring does not cover the graph");
  if (max_color(base) > r) throw std::invalid_argument("extend_distance3: base uses colors beyond r");
  if (!is_proper(g, base)) throw std::invalid_argument("extend_distance3: base coloring is not proper");
  if (precoloring_conflict(g, d).has_value())
    throw std::invalid_argument("extend_distance3: precoloring is not proper");
  if (max_color(d) > r + 1)
    throw std::invalid_argument("extend_distance3: precoloring uses colors beyond r+1");
  if (d.empty()) return base;

  AuxiliaryGraph aux = conflict_graph(g, precolored_vertices(d), 3);
  if (2LL * aux.h.edge_count() > static_cast<long long>(k) * (k + 1))
    throw guarantee_error("extend_distance3: more than k(k+1)/2 precolored pairs within distance 3");

  ClassPartition part = almost_k_coloring(aux.h, k);
  std::vector<std::vector<int>> stages;
  for (const auto& cls : part.classes) {
    std::vector<int> stage;
    for (int idx : cls) stage.push_back(aux.vertices[static_cast<size_t>(idx)]);
    std::sort(stage.begin(), stage.end());
    stages.push_back(std::move(stage));
  }

  // Align the singleton by permuting colors over the full palette [r+k]:
  // swapping its base color with d(u0) either exchanges two base classes
  // (d(u0) <= r) or renames one base class to the unused color r+1. In the
  // second case the vacated base color becomes the first fresh color, so
  // the stage colors stay inside [r+k] either way.
  Coloring f(base);
  std::vector<int> fresh_colors;
  for (int t = 1; t <= k; ++t) fresh_colors.push_back(r + t);
  if (!part.singleton.empty()) {
    int u0 = aux.vertices[static_cast<size_t>(part.singleton[0])];
    int want = d.at(u0);
    int have = f[static_cast<size_t>(u0)];
    if (have != want)
      for (auto& c : f) c = (c == have) ? want : (c == want ? have : c);
    if (want == r + 1) fresh_colors[0] = have;
  }

  if (static_cast<int>(stages.size()) > k)
    throw std::logic_error("extend_distance3: partition produced more than k stages");
  for (size_t t = 0; t < stages.size(); ++t) {
    int fresh = fresh_colors[t];
    apply_stage(g, f, stages[t], d, fresh, nullptr);
    require_fresh_class_independent(g, f, fresh);
    if (auto conflict = coloring_conflict(g, f))
      throw std::logic_error("extend_distance3: stage broke properness at edge " +
                             std::to_string(conflict->first) + "-" + std::to_string(conflict->second));
  }
  if (!extends(f, d)) throw std::logic_error("extend_distance3: result does not extend the precoloring");
  return f;
}

}  // namespace precolor
