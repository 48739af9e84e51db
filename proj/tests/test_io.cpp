#include <catch2/catch_amalgamated.hpp>

#include "width2/families.hpp"
#include "width2/io.hpp"

using namespace width2;

TEST_CASE("graph documents parse and print canonically") {
  Document d = parse_document("graph 2\n0 1\n");
  REQUIRE(std::holds_alternative<Graph>(d));
  REQUIRE(std::get<Graph>(d).has_edge(0, 1));
  // edge order and duplicates are immaterial on input
  Document e = parse_document("graph 4\n2 1\n1 2\n0 3\n");
  REQUIRE(print_document(e) == "graph 4\n0 3\n1 2\n");
}

TEST_CASE("poset documents close transitively") {
  Document d = parse_document("poset 3\n0 < 1\n1 < 2\n");
  const Poset& p = std::get<Poset>(d);
  REQUIRE(p.leq(0, 2));
  // printing keeps covering pairs only, so the closure is implicit again
  REQUIRE(print_document(d) == "poset 3\n0 < 1\n1 < 2\n");
}

TEST_CASE("bichain documents carry one permutation line") {
  Document d = parse_document("bichain 3\n2 1 0\n");
  Poset o = intersection_order(std::get<Bichain>(d));
  REQUIRE(is_antichain(o, vset(0b111)));
  REQUIRE(print_document(d) == "bichain 3\n2 1 0\n");
}

TEST_CASE("labelled documents round-trip") {
  std::string text =
      "labelled graph 3\n0 1\n1 2\nlabel 0 1\nlabel 2 2\norder 1 <= 2\n";
  Document d = parse_document(text);
  const auto& l = std::get<LabelledStructure>(d);
  REQUIRE(l.labels == std::vector<int>{1, 0, 2});
  REQUIRE(l.label_leq[1][2]);
  REQUIRE_FALSE(l.label_leq[2][1]);
  REQUIRE(parse_document(print_document(d)) == d);
}

TEST_CASE("parse then print is a fixed point over generated structures") {
  for (int k = 2; k <= 8; ++k) {
    Document docs[] = {Document(double_fork(k)), Document(poset_P2(k)),
                       Document(bichain_B1(k))};
    for (const Document& d : docs) {
      std::string once = print_document(d);
      REQUIRE(parse_document(once) == d);
      REQUIRE(print_document(parse_document(once)) == once);
    }
  }
}

TEST_CASE("a dashed line ends the payload") {
  Document d = parse_document("graph 2\n0 1\n---\nkind=graph\nnoise here\n");
  REQUIRE(std::get<Graph>(d).has_edge(0, 1));
}

TEST_CASE("malformed input names the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("graph 2\n0 2\n") == 2);
  CHECK(line_of("graph 2\n\n\n0 five\n") == 4);
  CHECK(line_of("poset 3\n0 < 1\n1 < 1\n") == 3);
  CHECK(line_of("poset 2\n0 < 1\n1 < 0\n") == 1);  // cycle reported at the header
  CHECK(line_of("bichain 3\n0 0 2\n") == 2);
  CHECK(line_of("borked 3\n") == 1);
  CHECK(line_of("graph 2\n0 1 2\n") == 2);
  CHECK(line_of("labelled graph 2\n0 1\nlabel 0 1\nlabel 0 2\n") == 4);
}
