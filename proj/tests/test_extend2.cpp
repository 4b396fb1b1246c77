#include <doctest.h>

#include <random>

#include "precolor/errors.hpp"
#include "precolor/extend2.hpp"
#include "precolor/graph.hpp"
#include "precolor/instances.hpp"
#include "precolor/oracle.hpp"

using namespace precolor;

namespace {

OrderedPartition make_partition(int num_colors, const std::map<ColorPair, long long>& phi) {
  OrderedPartition e;
  e.num_colors = num_colors;
  e.phi = phi;
  return e;
}

}  // namespace

TEST_CASE("alignment without E1 edges sorts the pairs") {
  Graph g(4);
  Coloring base{1, 1, 2, 2};
  OrderedPartition e = make_partition(4, {});
  auto aligned = align_for_e1({{3, 4}, {1, 2}}, e, g, {}, base);
  CHECK(aligned.pairs == std::vector<ColorPair>{{1, 2}, {3, 4}});
  CHECK(aligned.base == base);
}

TEST_CASE("alignment orients the E1 edge and relabels the base") {
  // vertices 0,2 at distance 2 through 1; d(0)=5, d(2)=3 realizes {3,5}
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  Precoloring d{{0, 5}, {2, 3}};
  OrderedPartition e = build_partition(g, d, 6);
  REQUIRE(e.edge_class(3, 5) == 1);
  Coloring base{2, 1, 2, 1, 2};  // x1 = 0 sits in class 2
  auto aligned = align_for_e1({{3, 5}, {1, 2}}, e, g, d, base);
  REQUIRE(aligned.pairs.size() == 2);
  CHECK(aligned.pairs[0] == ColorPair{5, 3});  // d(x1) first, x1 = lower id vertex 0
  CHECK(aligned.pairs[1] == ColorPair{1, 2});
  CHECK(aligned.base == Coloring{1, 2, 1, 2, 1});  // classes 1 and 2 swapped
  CHECK(aligned.base[0] == 1);

  // canonical input order lists the E1 edge last; it still leads the output
  auto reordered = align_for_e1({{1, 2}, {3, 5}}, e, g, d, base);
  CHECK(reordered.pairs == aligned.pairs);

  CHECK_THROWS_AS(align_for_e1({{3, 5}, {1, 3}}, e, g, d, base), std::invalid_argument);
}

TEST_CASE("matching-based coloring with an empty precolored set uses first colors") {
  Graph g(6);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  Coloring base{1, 2, 2, 2, 1, 1};
  Coloring f = extend_via_matching(g, {}, base, {{1, 2}, {3, 4}}, Regime::kSmall, 2, 2);
  for (int v = 0; v < 6; ++v)
    CHECK(f[static_cast<size_t>(v)] == (base[static_cast<size_t>(v)] == 1 ? 1 : 3));
}

TEST_CASE("matching-based coloring dodges blocked colors") {
  // class-1 vertex adjacent to a vertex precolored 1 takes the partner color
  Graph g(3);
  g.add_edge(0, 1);
  Precoloring d{{0, 1}};
  Coloring base{1, 1, 1};
  Coloring f = extend_via_matching(g, d, base, {{1, 2}, {3, 4}}, Regime::kSmall, 2, 2);
  CHECK(f[0] == 1);  // precolored
  CHECK(f[1] == 2);  // blocked by the precolored neighbor
  CHECK(f[2] == 1);
}

TEST_CASE("matching-based coloring validates the pair list") {
  Graph g(4);
  Coloring base{1, 1, 2, 2};
  CHECK_THROWS_AS(extend_via_matching(g, {}, base, {{1, 2}}, Regime::kSmall, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(extend_via_matching(g, {}, base, {{1, 2}, {2, 3}}, Regime::kSmall, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(extend_via_matching(g, {}, base, {{1, 9}, {2, 3}}, Regime::kSmall, 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(extend_via_matching(g, {}, base, {{1, 2}, {3, 4}}, Regime::kLarge, 2, 2),
                  std::invalid_argument);
}

TEST_CASE("weightless instances succeed in the even regime") {
  // pairs at distance 2 with equal colors keep the weight at zero
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  Precoloring d{{0, 2}, {2, 2}};
  Coloring base{1, 2, 1, 1, 2};
  Extend2Result result = extend_distance2(g, d, base, 2, 2);
  CHECK(result.report.theorem == "even");
  CHECK(result.report.weight == 0);
  CHECK(result.report.hypothesis_satisfied);
  REQUIRE(result.coloring.has_value());
  CHECK(is_proper(g, *result.coloring));
  CHECK(extends(*result.coloring, d));
  CHECK(distinct_colors(*result.coloring) <= 4);
  CHECK(result.report.success);
}

TEST_CASE("the even tightness instance defeats the pipeline and the oracle agrees") {
  Instance inst = gen_sharpness_even(2, 2, 4);
  REQUIRE(inst.d2_pairs == 6);  // = 2(r+k-1)
  Extend2Result result = extend_distance2(inst.graph, inst.d, inst.base, 2, 2);
  CHECK(result.report.theorem == "even");
  CHECK(result.report.bound == 6);
  CHECK_FALSE(result.report.hypothesis_satisfied);
  CHECK_FALSE(result.coloring.has_value());  // no good perfect matching exists
  // exhaustive search: not extendable with (3r+k)/2 = 4 colors
  CHECK_FALSE(min_extension_colors(inst.graph, inst.d, 4).has_value());
}

TEST_CASE("random even-regime instances stay within budget") {
  int runs = 0;
  for (std::uint64_t seed = 300; runs < 30; ++seed) {
    RandomInstanceParams params;
    params.r = 3;
    params.k = 1;
    params.n = 26;
    params.edge_prob = 0.12;
    params.p_size = 5;
    params.max_d2 = 5;  // < 2(r+k-1) = 6
    params.seed = seed;
    Instance inst;
    try {
      inst = gen_random(params);
    } catch (const retry_error&) {
      continue;
    }
    ++runs;
    Extend2Result result = extend_distance2(inst.graph, inst.d, inst.base, inst.r, inst.k);
    REQUIRE(result.report.hypothesis_satisfied);
    REQUIRE(result.coloring.has_value());
    REQUIRE(is_proper(inst.graph, *result.coloring));
    REQUIRE(extends(*result.coloring, inst.d));
    REQUIRE(distinct_colors(*result.coloring) <= 5);  // (3r+k)/2
    REQUIRE(min_extension_colors(inst.graph, inst.d, 5).has_value());
  }
}

TEST_CASE("matched classes receive only their two colors") {
  int runs = 0;
  for (std::uint64_t seed = 900; runs < 20; ++seed) {
    RandomInstanceParams params;
    params.r = 4;
    params.k = 2;
    params.n = 30;
    params.edge_prob = 0.1;
    params.p_size = 5;
    params.max_d2 = 9;  // < 2(r+k-1) = 10
    params.seed = seed;
    Instance inst;
    try {
      inst = gen_random(params);
    } catch (const retry_error&) {
      continue;
    }
    ++runs;
    Extend2Result result = extend_distance2(inst.graph, inst.d, inst.base, inst.r, inst.k);
    REQUIRE(result.coloring.has_value());
    // reconstruct the aligned classes: class i of the aligned base got
    // colors from pair i only
    OrderedPartition part = build_partition(inst.graph, inst.d, inst.r + inst.k);
    auto matching = find_good_matching(part, (inst.r + inst.k) / 2);
    REQUIRE(matching.has_value());
    auto aligned = align_for_e1(*matching, part, inst.graph, inst.d, inst.base);
    for (int v = 0; v < inst.graph.n(); ++v) {
      if (inst.d.count(v)) continue;
      int cls = aligned.base[static_cast<size_t>(v)];
      if (cls <= static_cast<int>(aligned.pairs.size())) {
        auto [mi, ni] = aligned.pairs[static_cast<size_t>(cls - 1)];
        int got = (*result.coloring)[static_cast<size_t>(v)];
        REQUIRE((got == mi || got == ni));
      }
    }
  }
}

TEST_CASE("large-k regime keeps the palette at r+k") {
  int runs = 0;
  for (std::uint64_t seed = 1400; runs < 25; ++seed) {
    RandomInstanceParams params;
    params.r = 2;
    params.k = 3;
    params.n = 24;
    params.edge_prob = 0.12;
    params.p_size = 5;
    params.max_d2 = 9;  // < min{(k+1)(k+2)/2, (k-r+2)(k+r-1)} = min{10,12}
    params.seed = seed;
    Instance inst;
    try {
      inst = gen_random(params);
    } catch (const retry_error&) {
      continue;
    }
    ++runs;
    Extend2Result result = extend_distance2(inst.graph, inst.d, inst.base, inst.r, inst.k);
    CHECK(result.report.theorem == "large-high-k");
    CHECK(result.report.bound == 10);
    REQUIRE(result.report.hypothesis_satisfied);
    REQUIRE(result.coloring.has_value());
    REQUIRE(is_proper(inst.graph, *result.coloring));
    REQUIRE(extends(*result.coloring, inst.d));
    REQUIRE(distinct_colors(*result.coloring) <= inst.r + inst.k);
  }
}

TEST_CASE("a matching forced through its E1 edge still yields a proper extension") {
  // Nine disjoint stars; the two leaves of star i are precolored with one
  // color pair each. Pairs {1,3},{1,4},{2,3},{2,4} appear twice (E2) and
  // {1,2} once (E1), so the only good perfect matching on 4 colors is
  // {{1,2},{3,4}} and it must use the E1 edge.
  Graph g(27);
  Precoloring d;
  std::vector<ColorPair> star_colors{{1, 3}, {1, 3}, {1, 4}, {1, 4}, {2, 3},
                                     {2, 3}, {2, 4}, {2, 4}, {1, 2}};
  Coloring base(27, 0);
  for (int i = 0; i < 9; ++i) {
    int hub = 3 * i, left = 3 * i + 1, right = 3 * i + 2;
    g.add_edge(hub, left);
    g.add_edge(hub, right);
    d[left] = star_colors[static_cast<size_t>(i)].first;
    d[right] = star_colors[static_cast<size_t>(i)].second;
    // the E1 star is base-colored upside down, so alignment must relabel
    int hub_color = i == 8 ? 1 : 2;
    base[static_cast<size_t>(hub)] = hub_color;
    base[static_cast<size_t>(left)] = 3 - hub_color;
    base[static_cast<size_t>(right)] = 3 - hub_color;
  }
  REQUIRE(is_proper(g, base));

  OrderedPartition part = build_partition(g, d, 4);
  CHECK(part.edge_class(1, 2) == 1);
  CHECK(part.edge_class(3, 4) == 0);
  CHECK(part.edge_class(1, 3) == 2);
  CHECK(partition_weight(part) == 9);

  Extend2Result result = extend_distance2(g, d, base, 2, 2);
  CHECK(result.report.matching == Matching{{1, 2}, {3, 4}});
  CHECK_FALSE(result.report.hypothesis_satisfied);  // weight 9 >= bound 6
  REQUIRE(result.coloring.has_value());             // the search still succeeds
  CHECK(is_proper(g, *result.coloring));
  CHECK(extends(*result.coloring, d));
  CHECK(distinct_colors(*result.coloring) <= 4);

  // without the alignment the construction is improper: the E1 star's hub
  // would take the partner color of its own precolored leaf
  CHECK_THROWS_AS(extend_via_matching(g, d, base, {{1, 2}, {3, 4}}, Regime::kSmall, 2, 2),
                  std::logic_error);
}

TEST_CASE("dispatcher reports the right theorem and bound") {
  Graph g(6);
  Coloring base{1, 2, 1, 2, 1, 2};
  // k <= r, odd total: bound min{3(r+k-1), (r+k+3)(r+k+5)/8}
  Extend2Result odd = extend_distance2(g, {}, base, 2, 1);
  CHECK(odd.report.theorem == "odd");
  CHECK(odd.report.bound == 6);
  // large-k split at 2k <= 3r-7
  Coloring base9(6, 1);
  for (int v = 0; v < 6; ++v) base9[static_cast<size_t>(v)] = 1 + v % 5;
  Extend2Result mid = extend_distance2(g, {}, base9, 9, 10);
  CHECK(mid.report.theorem == "large-mid-k");
  CHECK(mid.report.bound == std::min<long long>((10 + 27 - 4) * (10 - 9 + 3) / 2, (10 - 9 + 2) * (10 + 9 - 1)));
  Extend2Result high = extend_distance2(g, {}, base, 2, 5);
  CHECK(high.report.theorem == "large-high-k");
  CHECK(high.report.bound == std::min<long long>(6 * 7 / 2, 5 * 6));
}

TEST_CASE("extend_distance2 validates inputs") {
  Graph g(3);
  g.add_edge(0, 1);
  Coloring base{1, 2, 1};
  CHECK_THROWS_AS(extend_distance2(g, {{0, 9}}, base, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(extend_distance2(g, {}, base, 1, 1), std::invalid_argument);
  Coloring improper{1, 1, 1};
  CHECK_THROWS_AS(extend_distance2(g, {}, improper, 2, 2), std::invalid_argument);
}

TEST_CASE("greedy fallback always extends") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 25; ++round) {
    Graph g(14);
    for (int u = 0; u < 14; ++u)
      for (int v = u + 1; v < 14; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    Precoloring d;
    for (int v = 0; v < 14; v += 3) d[v] = 1 + static_cast<int>(rng() % 6);
    if (precoloring_conflict(g, d).has_value()) continue;
    Coloring f = greedy_extension(g, d);
    REQUIRE(is_proper(g, f));
    REQUIRE(extends(f, d));
  }
}
