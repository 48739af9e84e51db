#include <catch2/catch_amalgamated.hpp>

#include "width2/embedding.hpp"
#include "width2/families.hpp"
#include "width2/recognition.hpp"

using namespace width2;

TEST_CASE("double forks have a path heart and four pendants") {
  for (int n = 2; n <= 6; ++n) {
    Graph g = double_fork(n);
    REQUIRE(g.n == n + 4);
    REQUIRE(g.edge_count() == n + 3);
    REQUIRE(g.degree(0) == 3);
    REQUIRE(g.degree(n - 1) == 3);
    for (int pendant = n; pendant < n + 4; ++pendant) REQUIRE(g.degree(pendant) == 1);
  }
  REQUIRE_THROWS_AS(double_fork(1), std::invalid_argument);
}

TEST_CASE("half graphs are staircases") {
  Graph h = half_graph(3);
  REQUIRE(h.n == 6);
  REQUIRE(h.edge_count() == 6);
  REQUIRE(h.has_edge(0, 3));
  REQUIRE(h.has_edge(0, 5));
  REQUIRE_FALSE(h.has_edge(2, 3));
  REQUIRE(is_bipartite(h));
}

TEST_CASE("codes and orders of the two ladder families line up") {
  for (int k = 2; k <= 8; ++k) {
    REQUIRE(isomorphic(intersection_order(bichain_B1(k)), poset_P1(k)));
    REQUIRE(isomorphic(intersection_order(bichain_B2(k)), poset_P2(k)));
    REQUIRE(isomorphic(inc(poset_P2(k)), path_graph(k)));
  }
  REQUIRE(isomorphic(inc(poset_P1(8)), half_graph(4)));
}

TEST_CASE("the fence code reads the path in zigzag order") {
  // the second linear order begins 2, 0, 4, 1: positions of the low values
  Bichain b = bichain_B2(8);
  std::vector<int> pos(b.sigma.size());
  for (std::size_t i = 0; i < b.sigma.size(); ++i) pos[b.sigma[i]] = static_cast<int>(i);
  REQUIRE(pos[0] == 2);
  REQUIRE(pos[1] == 0);
  REQUIRE(pos[2] == 4);
  REQUIRE(pos[3] == 1);
}

TEST_CASE("combs and kites are recognized on the expected side") {
  REQUIRE(recognize_bipartite_permutation(comb_graph(4)).has_value());
  // the first two kite shapes leave the class, the third stays inside it
  for (int k = 3; k <= 5; ++k) {
    REQUIRE_FALSE(recognize_bipartite_permutation(kite_truncation(1, k)).has_value());
    REQUIRE_FALSE(recognize_bipartite_permutation(kite_truncation(2, k)).has_value());
    REQUIRE(recognize_bipartite_permutation(kite_truncation(3, k)).has_value());
  }
}

TEST_CASE("sturmian orientations alternate by the rotation word") {
  SturmianOrientation s = sturmian_orientation(1, 2, 6);
  REQUIRE(s.word.size() == 6);
  for (int letter : s.word) REQUIRE((letter == 0 || letter == 1));
  REQUIRE(s.arcs.size() == 6);
  // the arcs orient a path, so every vertex meets at most two arcs
  std::vector<int> deg(7, 0);
  for (auto [a, b] : s.arcs) {
    ++deg[a];
    ++deg[b];
  }
  for (int d : deg) REQUIRE(d <= 2);
}
