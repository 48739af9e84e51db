#include <catch2/catch_amalgamated.hpp>

#include "width2/embedding.hpp"
#include "width2/enumeration.hpp"
#include "width2/families.hpp"
#include "width2/wqo.hpp"

using namespace width2;

TEST_CASE("embedding maps are injective and relation preserving") {
  Graph pat = path_graph(3), tgt = double_fork(4);
  auto e = embeds(pat, tgt);
  REQUIRE(e.has_value());
  for (int i = 0; i < pat.n; ++i)
    for (int j = i + 1; j < pat.n; ++j) {
      REQUIRE(e->map[i] != e->map[j]);
      REQUIRE(pat.has_edge(i, j) == tgt.has_edge(e->map[i], e->map[j]));
    }
}

TEST_CASE("embeddability is reflexive and transitive on small graphs") {
  const std::vector<Graph>& gs = all_graphs(4);
  for (const Graph& g : gs) REQUIRE(embeds(g, g).has_value());
  for (const Graph& a : gs)
    for (const Graph& b : all_graphs(5))
      if (embeds(a, b))
        for (const Graph& c : all_graphs(6))
          if (embeds(b, c)) REQUIRE(embeds(a, c).has_value());
}

TEST_CASE("duality widens poset embedding when allowed") {
  // a three-chain with a pendant below embeds into its own dual only flipped
  Poset p = poset_from_relations(3, {{0, 1}, {0, 2}});
  Poset q = dual(p);
  REQUIRE_FALSE(embeds(p, q).has_value());
  EmbedOptions opt;
  opt.allow_dual = true;
  auto e = embeds(p, q, opt);
  REQUIRE(e.has_value());
  REQUIRE(e->variant == Variant::dual_target);
}

TEST_CASE("transposition widens bichain embedding when allowed") {
  Bichain b{{1, 2, 0}};
  Bichain t = transpose(b);
  EmbedOptions opt;
  opt.allow_transpose = true;
  if (!embeds(b, t).has_value()) {
    auto e = embeds(b, t, opt);
    REQUIRE(e.has_value());
    REQUIRE(e->variant == Variant::transpose_target);
  }
}

TEST_CASE("labels restrict embeddings to order compatible images") {
  // an edge with both ends marked needs an adjacent marked pair in the target
  LabelledStructure marked_edge(path_graph(2), {1, 1}, 2, {});
  LabelledStructure gap(path_graph(3), {1, 0, 1}, 2, {});
  REQUIRE(embeds(marked_edge, marked_edge).has_value());
  REQUIRE_FALSE(embeds(marked_edge, gap).has_value());
  // a smaller label may land on a bigger one only when the order says so
  LabelledStructure low(path_graph(1), {0}, 2, {});
  LabelledStructure high(path_graph(1), {1}, 2, {});
  REQUIRE_FALSE(embeds(low, high).has_value());
  LabelledStructure low_leq(path_graph(1), {0}, 2, {{0, 1}});
  LabelledStructure high_leq(path_graph(1), {1}, 2, {{0, 1}});
  REQUIRE(embeds(low_leq, high_leq).has_value());
}

TEST_CASE("labelled paths with marked ends form an antichain") {
  AntichainReport r = labelled_path_antichain(6);
  REQUIRE(r.antichain);
  REQUIRE(r.pairs == 12);
}
