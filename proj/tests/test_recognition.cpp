#include <catch2/catch_amalgamated.hpp>

#include "width2/enumeration.hpp"
#include "width2/families.hpp"
#include "width2/recognition.hpp"

using namespace width2;

TEST_CASE("recognition accepts the staircase families and their paths") {
  for (int k = 2; k <= 6; ++k) {
    REQUIRE(recognize_bipartite_permutation(half_graph(k)).has_value());
    REQUIRE(recognize_bipartite_permutation(path_graph(k)).has_value());
    REQUIRE(recognize_bipartite_permutation(double_fork(k)).has_value());
  }
}

TEST_CASE("recognition rejects odd cycles, long even cycles and triangles") {
  REQUIRE_FALSE(recognize_bipartite_permutation(cycle_graph(3)).has_value());
  REQUIRE_FALSE(recognize_bipartite_permutation(cycle_graph(5)).has_value());
  REQUIRE_FALSE(recognize_bipartite_permutation(cycle_graph(6)).has_value());
  REQUIRE_FALSE(recognize_bipartite_permutation(cycle_graph(8)).has_value());
  REQUIRE(recognize_bipartite_permutation(cycle_graph(4)).has_value());
}

TEST_CASE("accepted graphs are the incomparability graphs of narrow orders") {
  for (const Graph& g : all_graphs(6)) {
    std::optional<Poset> p = recognize_bipartite_permutation(g);
    bool narrow = clique_number(g) <= 2 && transitively_orientable_plain(complement(g));
    REQUIRE(p.has_value() == narrow);
    if (p) {
      REQUIRE(width(*p) <= 2);
      REQUIRE(inc(*p) == g);
    }
  }
}

TEST_CASE("every transitive orientation is a partial order on the same edges") {
  for (const Graph& g : all_graphs(5))
    for (const Poset& o : transitive_orientations(g)) {
      REQUIRE(comp(o) == g);
      for (int u = 0; u < o.n; ++u)
        for (int v = 0; v < o.n; ++v)
          for (int w = 0; w < o.n; ++w)
            if (o.leq(u, v) && o.leq(v, w)) REQUIRE(o.leq(u, w));
    }
}

TEST_CASE("orientation lists contain each order and its dual") {
  for (const Poset& p : all_posets(5)) {
    std::vector<Poset> os = transitive_orientations(comp(p));
    REQUIRE(std::count(os.begin(), os.end(), p) == 1);
    REQUIRE(std::count(os.begin(), os.end(), dual(p)) == 1);
  }
}
