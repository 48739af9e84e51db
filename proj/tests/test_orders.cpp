#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "width2/embedding.hpp"
#include "width2/enumeration.hpp"
#include "width2/families.hpp"

using namespace width2;

TEST_CASE("transitive closure and antisymmetry on construction") {
  Poset p = poset_from_relations(4, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(p.leq(0, 3));
  REQUIRE(width(p) == 1);
  REQUIRE_THROWS_AS(poset_from_relations(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("intersection order of a permutation") {
  // sigma = 2 0 3 1 gives the four-element fence, not a four-cycle of covers
  Bichain b{{2, 0, 3, 1}};
  Poset o = intersection_order(b);
  REQUIRE(o.leq(0, 2));
  REQUIRE(o.leq(1, 2));
  REQUIRE(o.leq(1, 3));
  REQUIRE_FALSE(o.leq(0, 3));
  REQUIRE(width(o) == 2);
  REQUIRE(isomorphic(inc(o), path_graph(4)));
}

TEST_CASE("transpose preserves the intersection order up to isomorphism") {
  for (const std::vector<int>& perm : all_permutations(5)) {
    Bichain b{perm};
    Poset o = intersection_order(b);
    REQUIRE(isomorphic(intersection_order(transpose(b)), o));
    REQUIRE(isomorphic(intersection_order(dual(b)), dual(o)));
  }
}

TEST_CASE("comparability and incomparability graphs partition the pairs") {
  for (const Poset& p : all_posets(5)) {
    Graph c = comp(p), i = inc(p);
    for (int u = 0; u < p.n; ++u)
      for (int v = u + 1; v < p.n; ++v)
        REQUIRE(c.has_edge(u, v) != i.has_edge(u, v));
  }
}

TEST_CASE("width two orders are exactly those with 321-avoiding codes") {
  for (const std::vector<int>& perm : all_permutations(6)) {
    bool narrow = width(intersection_order(Bichain{perm})) <= 2;
    REQUIRE(avoids(perm, {2, 1, 0}) == narrow);
  }
}

TEST_CASE("enumeration counts match the catalogue") {
  CHECK(all_graphs(4).size() == 11);
  CHECK(all_graphs(5).size() == 34);
  CHECK(all_graphs(6).size() == 156);
  CHECK(all_posets(5).size() == 63);
  CHECK(all_posets(6).size() == 318);
  long long perms = 0;
  for (int k = 1; k <= 6; ++k) perms += static_cast<long long>(all_permutations(k).size());
  CHECK(perms == 873);
  CHECK(permutations_avoiding_321(6).size() == 132);
}

TEST_CASE("canonical forms separate isomorphism classes") {
  // the path and the star share an edge count at four vertices yet differ
  Graph star(4);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  REQUIRE_FALSE(isomorphic(path_graph(4), star));
  REQUIRE(isomorphic(half_graph(2), path_graph(4)));
  std::set<Code> codes;
  for (const Graph& g : all_graphs(5)) codes.insert(canonical_code(g));
  REQUIRE(codes.size() == all_graphs(5).size());
}
