#include <catch2/catch_amalgamated.hpp>

#include "width2/families.hpp"
#include "width2/wqo.hpp"

using namespace width2;

TEST_CASE("membership respects the hereditary closure of an age") {
  ClassSpec<Graph> age{Presentation::AgeOf, {double_fork(5)}, Universe::BipartitePermutation, 8};
  REQUIRE(member(age, path_graph(5)));
  REQUIRE(member(age, double_fork(5)));
  REQUIRE_FALSE(member(age, double_fork(3)));
  REQUIRE_FALSE(member(age, cycle_graph(4)));
}

TEST_CASE("avoiding a path caps the members and keeps the class well ordered") {
  ClassSpec<Graph> c{Presentation::Avoiders, {path_graph(6)}, Universe::BipartitePermutation, 8};
  REQUIRE(member(c, path_graph(5)));
  REQUIRE_FALSE(member(c, path_graph(6)));
  REQUIRE(enumerate_members(c, 6).size() == 59);
  WqoVerdict v = decide_wqo(c);
  REQUIRE(v.wqo);
  REQUIRE(v.max_fork_length == 6);
}

TEST_CASE("the unrestricted universe is not well ordered and names fork witnesses") {
  ClassSpec<Graph> c{Presentation::Avoiders, {}, Universe::BipartitePermutation, 8};
  WqoVerdict v = decide_wqo(c);
  REQUIRE_FALSE(v.wqo);
  REQUIRE(v.max_fork_length == -1);
  REQUIRE(v.witnesses.size() == 7);
  for (std::size_t i = 0; i < v.witnesses.size(); ++i)
    REQUIRE(isomorphic(v.witnesses[i], double_fork(static_cast<int>(i) + 2)));
}

TEST_CASE("deciding a class given by generators whose universe disallows it throws") {
  ClassSpec<Graph> c{Presentation::Avoiders, {}, Universe::All, 8};
  REQUIRE_THROWS_AS(decide_wqo(c), std::invalid_argument);
}

TEST_CASE("fork embeddability stabilizes past the structure size") {
  StabilizationReport r = fork_stabilization_check(5, 10);
  REQUIRE(r.pass);
  REQUIRE(r.structures == 52);
  REQUIRE(r.failures == 0);
}

TEST_CASE("sums of distinct forks embed exactly by inclusion of index sets") {
  PowersetReport r = powerset_embedding_check({2, 3, 4});
  REQUIRE(r.pass);
  REQUIRE(r.pairs == 64);
}

TEST_CASE("class level audits agree with the decision procedure") {
  ClassSpec<Graph> age{Presentation::AgeOf, {double_fork(4)}, Universe::BipartitePermutation, 8};
  ForkBoundReport t2 = fork_bound_audit(age, 8);
  REQUIRE(t2.decomposition_ok);
  REQUIRE(t2.consistent);
  REQUIRE(t2.members == 33);
  REQUIRE(t2.max_fork == 4);
  REQUIRE(t2.deg3_sup == 3);

  ClassSpec<Poset> cls{Presentation::AgeOf, {poset_P2(12)}, Universe::WidthTwoPosets, 8};
  UniversalDepthReport t1 = universal_depth_audit(cls, 8);
  REQUIRE(t1.all_embedded);
  REQUIRE(t1.members == 225);
  REQUIRE(t1.k_star == 8);
  REQUIRE(t1.max_m == 2);
}
