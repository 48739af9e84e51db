#include <catch2/catch_amalgamated.hpp>

#include "width2/enumeration.hpp"
#include "width2/rational.hpp"
#include "width2/universal.hpp"

using namespace width2;

TEST_CASE("rational arithmetic stays reduced and ordered") {
  Rat a(1, 3), b(2, 6);
  REQUIRE(a == b);
  REQUIRE(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  REQUIRE(Rat(-1, 2) < Rat(1, 3));
  REQUIRE_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("the circle constant enclosure is tight enough to sort angles") {
  REQUIRE(PiRational::pi(Rat(1, 3)) < PiRational(Rat(2)));
  REQUIRE(PiRational::pi() > PiRational(Rat(3)));
  REQUIRE(PiRational::pi(Rat(1, 7)) < PiRational(Rat(1, 2)));
  REQUIRE(PiRational::pi(Rat(113, 355)) < PiRational(Rat(1)));
}

TEST_CASE("long induced paths sit inside the universal order") {
  for (int n = 1; n <= 3; ++n) {
    LongPath lp = construct_long_path(n);
    REQUIRE(lp.points.size() == static_cast<std::size_t>(6 * n + 1));
    REQUIRE(lp.validated);
    REQUIRE(lp.level_pair_edges_ok);
  }
}

TEST_CASE("the unit square sample peaks at seven points") {
  REQUIRE(max_induced_path_sample(1, 12) == 7);
}

TEST_CASE("every small connected narrow order embeds into the universal order") {
  for (const Poset& p : width2_posets(5)) {
    if (!is_connected(inc(p))) continue;
    DEmbedding e = embed_into_D(p);
    REQUIRE(poset_of_points(e.image) == p);
    REQUIRE(e.m >= 1);
  }
}
