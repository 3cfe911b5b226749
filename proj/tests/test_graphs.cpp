#include <catch2/catch_amalgamated.hpp>

#include "fiblat/graphs.hpp"

using namespace fiblat;

TEST_CASE("word graph of Delta_n", "[graphs]") {
  auto const g1 = word_graph(MonoidContext(1));
  CHECK(g1.word_vertices.size() == 1);
  CHECK(g1.edges.empty());

  auto const g3 = word_graph(MonoidContext(3));
  CHECK(g3.word_vertices.size() == 11);
  CHECK(g3.edges.size() == 11);

  auto const g4 = word_graph(MonoidContext(4));
  CHECK(g4.word_vertices.size() == 45);
  CHECK(g4.edges.size() == 59);

  CHECK_THROWS_AS(word_graph(MonoidContext(9)), ResourceLimitError);
}

TEST_CASE("tree graph", "[graphs]") {
  CHECK(tree_graph(2).vertex_count() == 1);
  auto const t4 = tree_graph(4);
  CHECK(t4.vertex_count() == 11);
  CHECK(t4.edges.size() == 11);
  CHECK(tree_graph(5).vertex_count() == 45);
}

TEST_CASE("the Delta-word vertex has one edge per relation site", "[graphs]") {
  // rho_3^4 admits an expansion at each of its three (3,3) pairs
  auto const g = word_graph(MonoidContext(3));
  int delta_vertex = -1;
  for (std::size_t i = 0; i < g.word_vertices.size(); ++i) {
    if (g.word_vertices[i] == Word{3, 3, 3, 3}) delta_vertex = static_cast<int>(i);
  }
  REQUIRE(delta_vertex >= 0);
  int degree = 0;
  for (auto const& [a, b] : g.edges) {
    if (a == delta_vertex || b == delta_vertex) ++degree;
  }
  CHECK(degree == 3);
}

TEST_CASE("graph isomorphism under phi", "[graphs]") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(verify_isomorphism(n));
  }
}

TEST_CASE("connectivity", "[graphs]") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(is_connected(word_graph(MonoidContext(n))));
    CHECK(is_connected(tree_graph(n + 1)));
  }
}
