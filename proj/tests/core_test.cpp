#include <catch_amalgamated.hpp>

#include <vector>

#include "pne/core.hpp"

using namespace pne;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("player graphs canonicalize edges to sorted u < v") {
  const PlayerGraph g(3, {{2, 1}, {1, 0}});
  REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.player_count() == 3);
  CHECK(!g.is_weighted());
  CHECK(g.weight(0) == 1);
  CHECK(g.weight(1) == 1);

  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  const auto nb = g.neighbors(1);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0].first == 0);
  CHECK(nb[0].second == 0);
  CHECK(nb[1].first == 2);
  CHECK(nb[1].second == 1);
}

TEST_CASE("edge weights follow their edges through canonicalization") {
  const PlayerGraph g(3, {{2, 1}, {0, 1}}, {{Rational(5), Rational(7)}});
  REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.is_weighted());
  CHECK(g.weight(0) == 7);
  CHECK(g.weight(1) == 5);
}

TEST_CASE("player graphs reject malformed input") {
  CHECK_THROWS_WITH(PlayerGraph(0, {}), ContainsSubstring("positive"));
  CHECK_THROWS_WITH(PlayerGraph(2, {{1, 1}}), ContainsSubstring("self-loop"));
  CHECK_THROWS_WITH(PlayerGraph(3, {{0, 1}, {1, 0}}), ContainsSubstring("duplicate edge"));
  CHECK_THROWS_WITH(PlayerGraph(3, {{0, 3}}), ContainsSubstring("out of range"));
  CHECK_THROWS_WITH(PlayerGraph(2, {{0, 1}}, {{Rational(-1)}}),
                    ContainsSubstring("negative weight"));
  CHECK_THROWS_WITH(PlayerGraph(2, {{0, 1}}, {std::vector<Rational>{}}),
                    ContainsSubstring("parallel"));
}

TEST_CASE("graph equality covers weights") {
  const PlayerGraph a(2, {{0, 1}});
  const PlayerGraph b(2, {{0, 1}});
  const PlayerGraph w(2, {{0, 1}}, {{Rational(1)}});
  CHECK(a == b);
  CHECK(!(a == w));
}

TEST_CASE("tuple index is a row-major bijection") {
  const TupleIndex idx({2, 3});
  CHECK(idx.axes() == 2);
  CHECK(idx.size() == 6);
  CHECK(idx.stride(0) == 3);
  CHECK(idx.stride(1) == 1);

  std::size_t expected = 0;
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      const std::vector<std::uint32_t> t{a, b};
      REQUIRE(idx.flat(t) == expected);
      REQUIRE(idx.tuple(expected) == t);
      REQUIRE(idx.coordinate(expected, 0) == a);
      REQUIRE(idx.coordinate(expected, 1) == b);
      ++expected;
    }
  }

  CHECK_THROWS_WITH(TupleIndex({}), ContainsSubstring("no axes"));
  CHECK_THROWS_WITH(TupleIndex({2, 0}), ContainsSubstring("zero-sized axis"));
}

TEST_CASE("a 2x3 grid has 6 players and 7 edges") {
  const GridSpec grid({2, 3});
  CHECK(grid.player_count() == 6);

  const PlayerGraph g = build_grid_graph(grid);
  const std::vector<Edge> expected{{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {4, 5}};
  CHECK(g.edges() == expected);
}

TEST_CASE("grid graphs coincide with cartesian products of paths") {
  const PlayerGraph path2(2, {{0, 1}});
  const PlayerGraph path3(3, {{0, 1}, {1, 2}});
  const ProductGraph product = cartesian_graph_product({path2, path3});

  CHECK(product.graph == build_grid_graph(GridSpec({2, 3})));

  // Axis tags: the 3 column edges come from the 2-path, the 4 row edges
  // from the 3-path.
  REQUIRE(product.edge_axis.size() == 7);
  std::size_t axis0 = 0;
  for (std::size_t k = 0; k < product.edge_axis.size(); ++k) {
    if (product.edge_axis[k] == 0) {
      ++axis0;
      CHECK(product.graph.edges()[k].v - product.graph.edges()[k].u == 3);
    } else {
      CHECK(product.graph.edges()[k].v - product.graph.edges()[k].u == 1);
    }
  }
  CHECK(axis0 == 3);
}

TEST_CASE("three 2-paths multiply into the cube") {
  const PlayerGraph path2(2, {{0, 1}});
  const ProductGraph cube = cartesian_graph_product({path2, path2, path2});
  CHECK(cube.graph.player_count() == 8);
  CHECK(cube.graph.edges().size() == 12);
}

TEST_CASE("a single-factor product is the factor itself") {
  const PlayerGraph path3(3, {{0, 1}, {1, 2}});
  const ProductGraph p = cartesian_graph_product({path3});
  CHECK(p.graph == path3);
  CHECK(p.edge_axis == std::vector<std::uint32_t>{0, 0});

  CHECK_THROWS_WITH(cartesian_graph_product({}), ContainsSubstring("no factors"));
}

TEST_CASE("is_consecutive_path recognizes exactly the 0-1-...-n paths") {
  CHECK(is_consecutive_path(PlayerGraph(3, {{0, 1}, {1, 2}})));
  CHECK(is_consecutive_path(PlayerGraph(1, {})));
  CHECK(!is_consecutive_path(build_grid_graph(GridSpec({2, 3}))));
  CHECK(!is_consecutive_path(PlayerGraph(3, {{0, 1}})));          // disconnected
  CHECK(!is_consecutive_path(PlayerGraph(3, {{0, 2}, {1, 2}})));  // path, wrong labels
}
