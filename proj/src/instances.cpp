#include "precolor/instances.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "precolor/errors.hpp"

namespace precolor {

namespace {

// Thin wrapper over mt19937_64: the raw engine is specified by the
// standard, the distributions are not, so sampling is done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
      std::uint64_t x = engine_();
      if (x < limit) return x % bound;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[static_cast<size_t>(below(i))]);
  }

 private:
  std::mt19937_64 engine_;
};

void verify_internal(Instance& inst) {
  if (precoloring_conflict(inst.graph, inst.d).has_value())
    throw std::logic_error("instance generator produced an improper precoloring");
  if (!is_proper(inst.graph, inst.base))
    throw std::logic_error("instance generator produced an improper base coloring");
  inst.d2_pairs = static_cast<long long>(pairs_within(inst.graph, inst.p, 2).size());
  inst.d3_pairs = static_cast<long long>(pairs_within(inst.graph, inst.p, 3).size());
}

void check_sharpness_params(int r, int k, int q, int parity, const char* what) {
  if (r < 2) throw std::invalid_argument(std::string(what) + ": r must be at least 2");
  if (k < 1 || k > r) throw std::invalid_argument(std::string(what) + ": need 1 <= k <= r");
  if ((r + k) % 2 != parity)
    throw std::invalid_argument(std::string(what) + ": wrong parity of r+k");
  if (q < r + k) throw std::invalid_argument(std::string(what) + ": need q >= r+k");
}

Graph complete_multipartite(int r, int q, int extra) {
  Graph g(r * q + extra);
  for (int i = 0; i < r; ++i)
    for (int u = i * q; u < (i + 1) * q; ++u)
      for (int v = (i + 1) * q; v < r * q; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

Instance gen_sharpness_even(int r, int k, int q) {
  check_sharpness_params(r, k, q, 0, "gen_sharpness_even");
  int s = r + k;
  Instance inst;
  inst.r = r;
  inst.k = k;
  inst.q = q;
  // Layout: partite sets C_i = [i*q, (i+1)*q), then x_1..x_s, then y_1..y_s.
  auto x = [&](int j) { return r * q + (j - 1); };
  auto y = [&](int j) { return r * q + s + (j - 1); };
  auto hub = [&](int i, int j) { return i * q + (j - 2); };  // j = 2..s, first vertices of C_i
  inst.graph = complete_multipartite(r, q, 2 * s);
  for (int j = 2; j <= s; ++j) {
    inst.graph.add_edge(x(1), hub(0, j));
    inst.graph.add_edge(x(j), hub(0, j));
    for (int i = 1; i < r; ++i) {
      inst.graph.add_edge(y(1), hub(i, j));
      inst.graph.add_edge(y(j), hub(i, j));
    }
  }
  for (int j = 1; j <= s; ++j) {
    inst.p.push_back(x(j));
    inst.p.push_back(y(j));
    inst.d[x(j)] = j;
    inst.d[y(j)] = j;
  }
  std::sort(inst.p.begin(), inst.p.end());
  // Witness r-coloring: part i takes color i+1; the pendant vertices fit
  // into the parts they avoid (x's beside C_1, y's beside C_0).
  inst.base.assign(static_cast<size_t>(inst.graph.n()), 0);
  for (int i = 0; i < r; ++i)
    for (int v = i * q; v < (i + 1) * q; ++v) inst.base[static_cast<size_t>(v)] = i + 1;
  for (int j = 1; j <= s; ++j) {
    inst.base[static_cast<size_t>(x(j))] = 2;
    inst.base[static_cast<size_t>(y(j))] = 1;
  }
  inst.budget = (3 * r + k) / 2;
  verify_internal(inst);
  if (inst.d2_pairs != 2LL * (s - 1))
    throw std::logic_error("gen_sharpness_even: distance-2 pair count mismatch");
  return inst;
}

Instance gen_sharpness_odd(int r, int k, int q) {
  check_sharpness_params(r, k, q, 1, "gen_sharpness_odd");
  int s = r + k;
  Instance inst;
  inst.r = r;
  inst.k = k;
  inst.q = q;
  auto x = [&](int j) { return r * q + (j - 1); };
  auto y = [&](int j) { return r * q + s + (j - 1); };
  // Hub layout inside each part: slot 0 is the triple hub, slots 1..s-3
  // serve j = 4..s.
  auto hub0 = [&](int i) { return i * q; };
  auto hub = [&](int i, int j) { return i * q + (j - 3); };
  inst.graph = complete_multipartite(r, q, 2 * s);
  inst.graph.add_edge(y(1), hub0(0));
  inst.graph.add_edge(y(2), hub0(0));
  inst.graph.add_edge(y(3), hub0(0));
  for (int i = 1; i < r; ++i) {
    inst.graph.add_edge(x(1), hub0(i));
    inst.graph.add_edge(x(2), hub0(i));
    inst.graph.add_edge(x(3), hub0(i));
  }
  for (int j = 4; j <= s; ++j) {
    inst.graph.add_edge(y(j), hub(0, j));
    for (int i = 1; i < r; ++i) {
      inst.graph.add_edge(x(1), hub(i, j));
      inst.graph.add_edge(x(2), hub(i, j));
      inst.graph.add_edge(x(3), hub(i, j));
      inst.graph.add_edge(x(j), hub(i, j));
    }
  }
  for (int j = 1; j <= s; ++j) {
    inst.p.push_back(x(j));
    inst.p.push_back(y(j));
    inst.d[x(j)] = j;
    inst.d[y(j)] = j;
  }
  std::sort(inst.p.begin(), inst.p.end());
  inst.base.assign(static_cast<size_t>(inst.graph.n()), 0);
  for (int i = 0; i < r; ++i)
    for (int v = i * q; v < (i + 1) * q; ++v) inst.base[static_cast<size_t>(v)] = i + 1;
  for (int j = 1; j <= s; ++j) {
    inst.base[static_cast<size_t>(x(j))] = 1;
    inst.base[static_cast<size_t>(y(j))] = 2;
  }
  inst.budget = (3 * r + k + 1) / 2;
  verify_internal(inst);
  if (inst.d2_pairs != 3LL * (s - 1))
    throw std::logic_error("gen_sharpness_odd: distance-2 pair count mismatch");
  return inst;
}

Instance gen_random(const RandomInstanceParams& params) {
  if (params.r < 2) throw std::invalid_argument("gen_random: r must be at least 2");
  if (params.k < 1) throw std::invalid_argument("gen_random: k must be positive");
  if (params.n < 1) throw std::invalid_argument("gen_random: n must be positive");
  if (params.p_size < 0 || params.p_size > params.n)
    throw std::invalid_argument("gen_random: p_size out of range");
  if (params.edge_prob < 0.0 || params.edge_prob > 1.0)
    throw std::invalid_argument("gen_random: edge_prob out of range");

  Rng rng(params.seed);
  Instance inst;
  inst.r = params.r;
  inst.k = params.k;

  inst.base.assign(static_cast<size_t>(params.n), 0);
  for (int v = 0; v < params.n; ++v) inst.base[static_cast<size_t>(v)] = rng.uniform_int(1, params.r);
  inst.graph = Graph(params.n);
  for (int u = 0; u < params.n; ++u)
    for (int v = u + 1; v < params.n; ++v)
      if (inst.base[static_cast<size_t>(u)] != inst.base[static_cast<size_t>(v)] &&
          rng.uniform01() < params.edge_prob)
        inst.graph.add_edge(u, v);

  std::vector<int> all(static_cast<size_t>(params.n));
  for (int v = 0; v < params.n; ++v) all[static_cast<size_t>(v)] = v;

  long long d2 = 0, d3 = 0;
  bool found = false;
  for (int attempt = 0; attempt < params.max_retries && !found; ++attempt) {
    std::vector<int> pool(all);
    rng.shuffle(pool);
    inst.p.assign(pool.begin(), pool.begin() + params.p_size);
    std::sort(inst.p.begin(), inst.p.end());
    d2 = static_cast<long long>(pairs_within(inst.graph, inst.p, 2).size());
    d3 = static_cast<long long>(pairs_within(inst.graph, inst.p, 3).size());
    found = (params.max_d2 < 0 || d2 <= params.max_d2) && (params.max_d3 < 0 || d3 <= params.max_d3);
  }
  if (!found)
    throw retry_error("gen_random: no P with the requested distance-pair budgets after " +
                      std::to_string(params.max_retries) + " attempts (seed " +
                      std::to_string(params.seed) + ")");

  int palette = params.r + params.k;
  bool colored = false;
  for (int attempt = 0; attempt < params.max_retries && !colored; ++attempt) {
    inst.d.clear();
    std::vector<int> order(inst.p);
    rng.shuffle(order);
    colored = true;
    for (int v : order) {
      std::vector<int> allowed;
      for (int c = 1; c <= palette; ++c) allowed.push_back(c);
      for (int w : inst.graph.neighbors(v)) {
        auto it = inst.d.find(w);
        if (it != inst.d.end()) std::erase(allowed, it->second);
      }
      if (allowed.empty()) {
        colored = false;
        break;
      }
      inst.d[v] = allowed[static_cast<size_t>(rng.below(allowed.size()))];
    }
  }
  if (!colored)
    throw retry_error("gen_random: greedy precoloring failed after " +
                      std::to_string(params.max_retries) + " attempts (seed " +
                      std::to_string(params.seed) + ")");

  verify_internal(inst);
  if (inst.d2_pairs != d2 || inst.d3_pairs != d3)
    throw std::logic_error("gen_random: pair count recomputation mismatch");
  return inst;
}

}  // namespace precolor
