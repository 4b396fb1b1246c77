#include <doctest.h>

#include <random>

#include "precolor/errors.hpp"
#include "precolor/graph.hpp"
#include "precolor/io.hpp"

using namespace precolor;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph construction rejects loops, duplicates and bad ids") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(1, 0));
}

TEST_CASE("bfs distances on a path") {
  Graph g = path_graph(4);
  auto dist = bfs_distances(g, 0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("bfs marks unreachable vertices") {
  Graph g(2);
  auto dist = bfs_distances(g, 0);
  CHECK(dist[0] == 0);
  CHECK(dist[1] == kUnreachable);
  CHECK_THROWS_AS(bfs_distances(g, 5), std::invalid_argument);
}

TEST_CASE("bfs on a complete graph") {
  Graph g = complete_graph(4);
  auto dist = bfs_distances(g, 2);
  CHECK(dist == std::vector<int>{1, 1, 0, 1});
}

TEST_CASE("bfs distances satisfy the triangle inequality") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    Graph g = random_graph(12, 0.25, rng);
    std::vector<std::vector<int>> dist;
    for (int v = 0; v < g.n(); ++v) dist.push_back(bfs_distances(g, v));
    for (int a = 0; a < g.n(); ++a)
      for (int b = 0; b < g.n(); ++b)
        for (int c = 0; c < g.n(); ++c) {
          if (dist[a][b] < 0 || dist[b][c] < 0) continue;
          REQUIRE(dist[a][c] != kUnreachable);
          REQUIRE(dist[a][c] <= dist[a][b] + dist[b][c]);
        }
  }
}

TEST_CASE("pairs_within on paths") {
  Graph g5 = path_graph(5);
  CHECK(pairs_within(g5, {0, 4}, 3).empty());
  Graph g4 = path_graph(4);
  CHECK(pairs_within(g4, {0, 3}, 3) == std::vector<VertexPair>{{0, 3}});
  CHECK(pairs_within(g4, {0, 3}, 2).empty());
}

TEST_CASE("pairs_within through a star center") {
  Graph g(4);  // center 0, leaves 1..3
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  auto pairs = pairs_within(g, {1, 2, 3}, 2);
  CHECK(pairs == std::vector<VertexPair>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(pairs_within(g, {9}, 2), std::invalid_argument);
}

TEST_CASE("pairs_within is monotone in k and matches induced edges at k=1") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 25; ++round) {
    Graph g = random_graph(14, 0.2, rng);
    std::vector<int> p;
    for (int v = 0; v < g.n(); ++v)
      if (rng() % 3 == 0) p.push_back(v);
    auto p1 = pairs_within(g, p, 1);
    std::vector<VertexPair> induced;
    for (size_t a = 0; a < p.size(); ++a)
      for (size_t b = a + 1; b < p.size(); ++b)
        if (g.has_edge(p[a], p[b])) induced.push_back(make_pair_canonical(p[a], p[b]));
    std::sort(induced.begin(), induced.end());
    REQUIRE(p1 == induced);
    for (int k = 1; k <= 4; ++k) {
      auto small = pairs_within(g, p, k);
      auto large = pairs_within(g, p, k + 1);
      REQUIRE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
  }
}

TEST_CASE("is_proper and conflicts") {
  Graph k3 = complete_graph(3);
  CHECK(is_proper(k3, {1, 2, 3}));
  Graph edge(2);
  edge.add_edge(0, 1);
  auto conflict = coloring_conflict(edge, {2, 2});
  REQUIRE(conflict.has_value());
  CHECK(*conflict == VertexPair{0, 1});
  Graph empty(5);
  CHECK(is_proper(empty, {1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(is_proper(edge, Coloring{1}), std::invalid_argument);
}

TEST_CASE("extends") {
  CHECK(extends({1, 2}, {{0, 1}}));
  CHECK_FALSE(extends({1, 2}, {{1, 3}}));
  CHECK(extends({1, 2}, {}));
}

TEST_CASE("validate precoloring") {
  Graph edge(2);
  edge.add_edge(0, 1);
  CHECK(precoloring_conflict(edge, {{0, 1}, {1, 1}}) == VertexPair{0, 1});
  CHECK_FALSE(precoloring_conflict(edge, {{0, 1}, {1, 2}}).has_value());
  Graph g4 = path_graph(4);
  CHECK_FALSE(precoloring_conflict(g4, {{0, 5}, {3, 5}}).has_value());
  CHECK_THROWS_AS(precoloring_conflict(g4, Precoloring{{7, 1}}), std::invalid_argument);
}

TEST_CASE("dimacs parsing") {
  Graph g = load_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));

  CHECK_THROWS_AS(load_dimacs("p edge 2 1\ne 1 1\n"), parse_error);
  CHECK_THROWS_AS(load_dimacs("p edge 2 1\n"), parse_error);
  CHECK_THROWS_AS(load_dimacs("p edge 2 2\ne 1 2\ne 1 2\n"), parse_error);
  CHECK_THROWS_AS(load_dimacs("p edge 2 1\ne 1 5\n"), parse_error);
  CHECK_THROWS_AS(load_dimacs("e 1 2\n"), parse_error);
  CHECK_THROWS_AS(load_dimacs("p edge x y\n"), parse_error);
  CHECK_THROWS_AS(load_dimacs(""), parse_error);
}

TEST_CASE("dimacs round trip is the identity") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 10; ++round) {
    Graph g = random_graph(9, 0.3, rng);
    Graph back = load_dimacs(save_dimacs(g));
    REQUIRE(back.n() == g.n());
    REQUIRE(back.edges() == g.edges());
    REQUIRE(save_dimacs(back) == save_dimacs(g));
  }
}

TEST_CASE("precoloring and coloring files") {
  Precoloring d = load_precoloring("# comment\n2 5\n1 1 # trailing\n", 3);
  CHECK(d == Precoloring{{0, 1}, {1, 5}});
  CHECK(load_precoloring(save_precoloring(d), 3) == d);
  CHECK_THROWS_AS(load_precoloring("4 1\n", 3), parse_error);
  CHECK_THROWS_AS(load_precoloring("1 0\n", 3), parse_error);
  CHECK_THROWS_AS(load_precoloring("1 2\n1 3\n", 3), parse_error);

  Coloring f = load_coloring("1 2\n2 1\n3 4\n", 3);
  CHECK(f == Coloring{2, 1, 4});
  CHECK(load_coloring(save_coloring(f), 3) == f);
  CHECK_THROWS_AS(load_coloring("1 2\n2 1\n", 3), parse_error);
}
