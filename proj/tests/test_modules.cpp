#include <catch2/catch_amalgamated.hpp>

#include "width2/enumeration.hpp"
#include "width2/equivalence.hpp"
#include "width2/families.hpp"
#include "width2/modules.hpp"
#include "width2/recognition.hpp"

using namespace width2;

TEST_CASE("paths of four vertices are prime, smaller graphs are not") {
  REQUIRE(is_prime(path_graph(4)));
  REQUIRE_FALSE(is_prime(path_graph(3)));
  REQUIRE_FALSE(is_prime(cycle_graph(4)));
  REQUIRE(is_prime(path_graph(5)));
}

TEST_CASE("strong modules of an order agree with its comparability graph") {
  for (const Poset& p : all_posets(6)) REQUIRE(strong_module_audit(p));
}

TEST_CASE("chain module quotients collapse exactly the chain intervals") {
  // two chains glued by a ladder: 0<1<2 and 3<4<5 with 0<4 and 3<2
  Poset p = poset_from_relations(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {3, 2}});
  ChainModuleQuotient q = chain_module_quotient(p);
  REQUIRE(q.classes.size() >= 2);
  vset covered = 0;
  for (vset c : q.classes) {
    REQUIRE((covered & c) == 0);
    covered |= c;
  }
  REQUIRE(covered == full_set(p.n));
  REQUIRE(q.quotient.n == static_cast<int>(q.classes.size()));
}

TEST_CASE("chain module detection separates chains from antichain modules") {
  // a chain is its own module family of intervals
  REQUIRE(proper_modules_all_chains(poset_from_relations(3, {{0, 1}, {1, 2}})));
  // two incomparable elements under a common top form a non-chain module
  REQUIRE_FALSE(proper_modules_all_chains(poset_from_relations(3, {{0, 2}, {1, 2}})));
}

TEST_CASE("chain module patterns embed alike in orders and both graphs") {
  for (const Poset& p : width2_posets(4)) {
    if (!proper_modules_all_chains(p)) continue;
    for (const Poset& q : width2_posets(5)) REQUIRE(chain_modules_equivalence_audit(p, q));
  }
}

TEST_CASE("twin testing decides primality for connected bipartite graphs") {
  for (int n = 3; n <= 7; ++n)
    for (const Graph& g : bipartite_graphs(n)) {
      if (!is_connected(g)) continue;
      REQUIRE(prime_bipartite_check(g) == is_prime(g));
    }
}

TEST_CASE("prime orders transfer primality to their codes and back") {
  for (const std::vector<int>& perm : all_permutations(5))
    REQUIRE(prime_correspondence_audit(Bichain{perm}));
}
