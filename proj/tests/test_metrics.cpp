#include <catch2/catch_amalgamated.hpp>

#include "width2/enumeration.hpp"
#include "width2/families.hpp"
#include "width2/metrics.hpp"

using namespace width2;

TEST_CASE("graph distance is a metric on connected graphs") {
  for (const Graph& g : all_graphs(6)) {
    if (!is_connected(g)) continue;
    MetricReport r = metric_report(g);
    for (int u = 0; u < g.n; ++u) {
      REQUIRE(r.dist[u][u] == 0);
      for (int v = 0; v < g.n; ++v) {
        REQUIRE(r.dist[u][v] == r.dist[v][u]);
        for (int w = 0; w < g.n; ++w)
          REQUIRE(r.dist[u][w] <= r.dist[u][v] + r.dist[v][w]);
      }
    }
  }
}

TEST_CASE("oscillation sits in the window below graph distance") {
  for (const Poset& p : width2_posets(7)) {
    Graph g = inc(p);
    if (!is_connected(g)) continue;
    MetricReport r = metric_report(g, &p);
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v) {
        int slack = r.dist[u][v] - r.oscillation[u][v];
        REQUIRE(slack >= 0);
        REQUIRE(slack <= 2 * (r.dist[u][v] / 3));
        REQUIRE(r.detour[u][v] >= r.dist[u][v]);
      }
  }
}

TEST_CASE("oscillation on the fence order grows along the path") {
  Poset p = poset_P2(5);
  MetricReport r = metric_report(inc(p), &p);
  REQUIRE(r.has_oscillation);
  REQUIRE(r.oscillation[0][4] == 2);
  REQUIRE(r.oscillation[0][3] == 3);
  REQUIRE(r.oscillation[0][0] == 0);
}

TEST_CASE("metric inequality audits pass on small connected orders") {
  for (const Poset& p : width2_posets(6)) {
    if (!is_connected(inc(p))) continue;
    AuditResult a = audit_metric_inequalities(p);
    REQUIRE(a.pass);
  }
}

TEST_CASE("balls exchange with down sets, up sets and convex hulls") {
  for (const Poset& p : width2_posets(5)) {
    if (!is_connected(inc(p))) continue;
    for (int x = 0; x < p.n; ++x)
      for (int r = 1; r <= 3; ++r) REQUIRE(convex_boule_audit(p, vset(1) << x, r));
  }
}

TEST_CASE("degree three diameter of a double fork grows with the handle") {
  MetricReport r3 = metric_report(double_fork(3));
  MetricReport r6 = metric_report(double_fork(6));
  REQUIRE(r3.deg3_diameter == 2);
  REQUIRE(r6.deg3_diameter == 5);
}
