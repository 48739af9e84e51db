#include <catch2/catch_amalgamated.hpp>

#include "width2/enumeration.hpp"
#include "width2/equivalence.hpp"
#include "width2/families.hpp"
#include "width2/realizer.hpp"
#include "width2/recognition.hpp"

using namespace width2;

namespace {

Poset chain(int n) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i + 1 < n; ++i) rels.push_back({i, i + 1});
  return poset_from_relations(n, rels);
}

}  // namespace

TEST_CASE("chains have a single realizer pair") {
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(is_uniquely_realizable(chain(n)));
    REQUIRE(unique_realizability_criterion(chain(n)));
  }
}

TEST_CASE("realizer pairs are unordered") {
  // both extensions of the two-element antichain form the same pair
  Poset a = poset_from_relations(2, {});
  REQUIRE(realizers(a).size() == 1);
  REQUIRE(is_uniquely_realizable(a));
  // the three-element antichain admits three genuinely different pairs
  Poset a3 = poset_from_relations(3, {});
  REQUIRE(realizers(a3).size() == 3);
  REQUIRE_FALSE(is_uniquely_realizable(a3));
}

TEST_CASE("dimension at most two matches realizer existence") {
  for (const Poset& p : all_posets(6))
    REQUIRE(has_dimension_at_most_two(p) == !realizers(p).empty());
}

TEST_CASE("the standard three-dimensional example has no realizer pair") {
  Poset s3 = poset_from_relations(6, {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}});
  REQUIRE(realizers(s3).empty());
  REQUIRE_FALSE(has_dimension_at_most_two(s3));
}

TEST_CASE("the structural uniqueness test matches the realizer count") {
  for (const Poset& p : all_posets(6)) {
    if (!has_dimension_at_most_two(p)) continue;
    REQUIRE(unique_realizability_criterion(p) == is_uniquely_realizable(p));
  }
}

TEST_CASE("order embedding of uniquely realizable posets is pattern containment") {
  std::vector<Poset> unique_posets;
  for (const Poset& p : width2_posets_up_to(5))
    if (is_uniquely_realizable(p)) unique_posets.push_back(p);
  for (const Poset& p : unique_posets)
    for (const Poset& q : unique_posets) REQUIRE(unique_realizer_equivalence_audit(p, q));
}

TEST_CASE("orientations of the incomparability graph rebuild the bichain") {
  for (const Poset& p : width2_posets(5)) {
    for (const Poset& o : transitive_orientations(inc(p))) {
      Bichain b = bichain_from_orientation(p, o);
      REQUIRE(intersection_order(b).n == p.n);
      REQUIRE(isomorphic(intersection_order(b), p));
    }
  }
}
