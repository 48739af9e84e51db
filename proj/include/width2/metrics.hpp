#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "width2/embedding.hpp"
#include "width2/graph.hpp"
#include "width2/poset.hpp"
#include "width2/recognition.hpp"

namespace width2 {

// ---- induced paths ---------------------------------------------------------

namespace detail {

// Extends an induced path whose tip is `last`. `blocked` holds vertices
// adjacent to some non-tip path vertex; they would create a chord.
template <class Visit>
inline void induced_path_dfs(const Graph& g, int last, vset used, vset blocked, int len,
                             Visit&& visit) {
  visit(last, len);
  vset cand = g.adj[last] & ~used & ~blocked;
  for_bits(cand, [&](int v) {
    induced_path_dfs(g, v, used | (vset(1) << v), blocked | (g.adj[last] & ~(vset(1) << v)),
                     len + 1, visit);
  });
}

}  // namespace detail

// Vertex count of a longest induced path.
inline int longest_induced_path(const Graph& g) {
  int best = g.n > 0 ? 1 : 0;
  for (int s = 0; s < g.n; ++s)
    detail::induced_path_dfs(g, s, vset(1) << s, 0, 1, [&](int, int len) {
      best = std::max(best, len);
    });
  return best;
}

// Edge counts of longest induced paths from x to every reachable vertex.
inline std::vector<int> detour_from(const Graph& g, int x) {
  std::vector<int> best(g.n, -1);
  detail::induced_path_dfs(g, x, vset(1) << x, 0, 0, [&](int v, int len) {
    best[v] = std::max(best[v], len);
  });
  return best;
}

// ---- metric report ---------------------------------------------------------

struct MetricReport {
  int n = 0;
  std::vector<std::vector<int>> dist;         // -1 between components
  int diameter = 0;                           // max finite distance
  std::vector<std::vector<int>> detour;       // longest induced path, edges
  int max_detour = 0;
  int deg3_diameter = -1;                     // -1 when fewer than two degree-3 vertices
  bool has_oscillation = false;
  std::vector<std::vector<int>> oscillation;  // d_P, only when a poset was supplied
};

// Oscillation distance between comparable x < y: two more than the longest
// monotone sequence x = u_0 < ... < u_k = y that switches chain at every
// step, or 2 when no such sequence exists. Chains are the parity classes of
// the connected incomparability graph.
namespace detail {

inline std::vector<std::vector<int>> oscillation_table(const Poset& p) {
  Graph g = inc(p);
  if (width(p) > 2) throw std::invalid_argument("oscillation needs width at most two");
  if (!is_connected(g)) throw std::invalid_argument("oscillation needs connected incomparability");
  auto [a, b] = two_chain_partition(p);
  vset chain_a = 0;
  for (int v : a) chain_a |= vset(1) << v;
  auto same_chain = [&](int u, int v) { return has_bit(chain_a, u) == has_bit(chain_a, v); };

  std::vector<std::vector<int>> d(p.n, std::vector<int>(p.n, 0));
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (x == y) continue;
      if (p.incomparable(x, y)) {
        d[x][y] = 1;
        continue;
      }
      int lo = p.leq(x, y) ? x : y, hi = lo == x ? y : x;
      // longest alternating path lo -> hi inside the interval, by increasing
      // chain length over a topological scan (p.leq is the DAG order)
      std::vector<int> iv;
      for (int u = 0; u < p.n; ++u)
        if (p.leq(lo, u) && p.leq(u, hi)) iv.push_back(u);
      std::sort(iv.begin(), iv.end(), [&](int u, int v) { return p.lt(u, v); });
      std::vector<int> steps(p.n, -1);
      steps[lo] = 0;
      for (int u : iv)
        for (int v : iv)
          if (steps[u] >= 0 && p.lt(u, v) && !same_chain(u, v))
            steps[v] = std::max(steps[v], steps[u] + 1);
      d[x][y] = steps[hi] >= 1 ? steps[hi] + 2 : 2;
    }
  return d;
}

}  // namespace detail

inline MetricReport metric_report(const Graph& g, const Poset* p = nullptr) {
  MetricReport r;
  r.n = g.n;
  r.dist.resize(g.n);
  r.detour.resize(g.n);
  for (int x = 0; x < g.n; ++x) {
    r.dist[x] = bfs_distances(g, x);
    r.detour[x] = detour_from(g, x);
    for (int y = 0; y < g.n; ++y) {
      r.diameter = std::max(r.diameter, r.dist[x][y]);
      r.max_detour = std::max(r.max_detour, r.detour[x][y]);
    }
  }
  std::vector<int> deg3;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) >= 3) deg3.push_back(v);
  if (deg3.size() >= 2)
    for (std::size_t i = 0; i < deg3.size(); ++i)
      for (std::size_t j = i + 1; j < deg3.size(); ++j)
        r.deg3_diameter = std::max(r.deg3_diameter, r.dist[deg3[i]][deg3[j]]);
  if (p) {
    if (inc(*p) != g) throw std::invalid_argument("poset does not match graph");
    r.oscillation = detail::oscillation_table(*p);
    r.has_oscillation = true;
  }
  return r;
}

// ---- balls and convexity ---------------------------------------------------

inline vset ball(const Graph& g, vset x, int r) {
  if (!x) throw std::invalid_argument("ball of empty set");
  vset cur = x;
  for (int i = 0; i < r; ++i) {
    vset next = cur;
    for_bits(cur, [&](int v) { next |= g.adj[v]; });
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

inline vset down_set(const Poset& p, vset x) {
  vset out = 0;
  for (int v = 0; v < p.n; ++v)
    for_bits(x, [&](int u) {
      if (p.leq(v, u)) out |= vset(1) << v;
    });
  return out;
}

inline vset up_set(const Poset& p, vset x) {
  vset out = 0;
  for_bits(x, [&](int u) { out |= p.up[u]; });
  return out;
}

inline vset conv_order(const Poset& p, vset x) {
  if (!x) throw std::invalid_argument("hull of empty set");
  return down_set(p, x) & up_set(p, x);
}

// Intersection of all balls containing x.
inline vset conv_graph(const Graph& g, vset x) {
  if (!x) throw std::invalid_argument("hull of empty set");
  vset out = full_set(g.n);
  for (int c = 0; c < g.n; ++c)
    for (int r = 0; r <= g.n; ++r) {
      vset b = ball(g, vset(1) << c, r);
      if ((x & ~b) == 0) {
        out &= b;
        break;
      }
    }
  return out;
}

inline bool is_order_convex(const Poset& p, vset x) { return !x || conv_order(p, x) == x; }

// The subgraph induced on x realizes every distance of g between members.
inline bool is_isometric(const Graph& g, vset x) {
  Graph h = induced_subgraph(g, x);
  std::vector<int> verts;
  for_bits(x, [&](int v) { verts.push_back(v); });
  for (int i = 0; i < h.n; ++i) {
    std::vector<int> dh = bfs_distances(h, i);
    std::vector<int> dg = bfs_distances(g, verts[i]);
    for (int j = 0; j < h.n; ++j)
      if (dh[j] != dg[verts[j]]) return false;
  }
  return true;
}

// ---- inequality audits -------------------------------------------------------

struct AuditResult {
  bool pass = true;
  std::string failure;  // first counterexample, human-readable
};

namespace detail {
inline void audit_fail(AuditResult& r, const std::string& msg) {
  if (r.pass) {
    r.pass = false;
    r.failure = msg;
  }
}
}  // namespace detail

// Checks, over all pairs of a connected width-2 poset: the oscillation
// distance sits within the graphic-distance window, dominates the detour
// floor, the detour is pinned between diameter and 3*diameter - 1, distance
// is monotone along nested intervals, and every ball is order convex and
// isometric. The detour window is skipped on a single point, where it reads
// 0 <= -1.
inline AuditResult audit_metric_inequalities(const Poset& p) {
  if (width(p) > 2) throw std::invalid_argument("audit needs width at most two");
  Graph g = inc(p);
  if (!is_connected(g)) throw std::invalid_argument("audit needs connected incomparability");
  AuditResult res;
  MetricReport m = metric_report(g, &p);
  auto pair_str = [](int x, int y) { return std::to_string(x) + "," + std::to_string(y); };
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      int dg = m.dist[x][y], dp = m.oscillation[x][y];
      if (dg - dp < 0 || dg - dp > 2 * (dg / 3))
        detail::audit_fail(res, "distance window fails at " + pair_str(x, y));
      if (x != y) {
        int D = m.detour[x][y];
        int eps = D % 3 == 1 ? 1 : 2;
        if (dp < D / 3 + eps) detail::audit_fail(res, "detour floor fails at " + pair_str(x, y));
      }
    }
  if (p.n >= 2 && !(m.diameter <= m.max_detour && m.max_detour <= 3 * m.diameter - 1))
    detail::audit_fail(res, "detour window fails: delta=" + std::to_string(m.diameter) +
                                " D=" + std::to_string(m.max_detour));
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      if (!p.leq(x, y)) continue;
      for (int u = 0; u < p.n; ++u)
        for (int v = 0; v < p.n; ++v)
          if (p.leq(x, u) && p.leq(u, v) && p.leq(v, y) && m.dist[u][v] > m.dist[x][y])
            detail::audit_fail(res, "interval monotonicity fails at " + pair_str(x, y));
    }
  for (int c = 0; c < p.n; ++c)
    for (int r = 0; r <= m.diameter; ++r) {
      vset b = ball(g, vset(1) << c, r);
      if (!is_order_convex(p, b))
        detail::audit_fail(res, "ball not order convex: center " + std::to_string(c));
      if (!is_isometric(g, b))
        detail::audit_fail(res, "ball not isometric: center " + std::to_string(c));
    }
  return res;
}

// Ball-versus-hull exchange identities, one set X and one radius at a time.
inline bool convex_boule_audit(const Poset& p, vset x, int r) {
  Graph g = inc(p);
  vset dn = down_set(p, x), up = up_set(p, x), cv = conv_order(p, x);
  vset bx = ball(g, x, r);
  bool ok = true;
  ok &= ball(g, dn, r) == (dn | bx) && (dn | bx) == down_set(p, bx);
  ok &= ball(g, up, r) == (up | bx) && (up | bx) == up_set(p, bx);
  ok &= ball(g, up & dn, r) == (ball(g, up, r) & ball(g, dn, r));
  ok &= ball(g, cv, r) == (cv | bx) && (cv | bx) == conv_order(p, bx);
  return ok;
}

// ---- caterpillars ----------------------------------------------------------

inline bool is_caterpillar(const Graph& g) {
  if (!is_connected(g) || !is_forest(g)) return false;
  vset inner = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) >= 2) inner |= vset(1) << v;
  if (!inner) return true;  // single vertex or single edge
  return is_path_graph(induced_subgraph(g, inner));
}

// A comb is a caterpillar in which no vertex carries two leaves; the
// 3-vertex path is the smallest caterpillar that fails.
inline bool is_comb(const Graph& g) {
  if (!is_caterpillar(g)) return false;
  for (int v = 0; v < g.n; ++v) {
    int leaves = 0;
    for_bits(g.adj[v], [&](int w) {
      if (g.degree(w) == 1) ++leaves;
    });
    if (leaves >= 2) return false;
  }
  return true;
}

struct CaterpillarAudit {
  bool girth_clear;    // no induced C3 or C4
  bool acyclic;
  bool caterpillar_components;
  bool equivalent;     // the three answers agree
};

inline CaterpillarAudit caterpillar_audit(const Poset& p) {
  if (width(p) > 2) throw std::invalid_argument("audit needs width at most two");
  Graph g = inc(p);
  CaterpillarAudit a;
  a.girth_clear = !embeds(cycle_graph(3), g).has_value() && !embeds(cycle_graph(4), g).has_value();
  a.acyclic = is_forest(g);
  a.caterpillar_components = true;
  for (vset c : components(g))
    if (!is_caterpillar(induced_subgraph(g, c))) a.caterpillar_components = false;
  a.equivalent = a.girth_clear == a.acyclic && a.acyclic == a.caterpillar_components;
  return a;
}

// ---- fork-tail decomposition -------------------------------------------------

struct ForkTailDecomposition {
  vset core = 0;                 // radius-2 ball around the hull of the degree-3 set
  std::vector<vset> tails;       // components outside the core, at most two
  bool tails_are_paths = true;
  bool attachment_ok = true;     // each tail meets the core through exactly one edge
  bool orientation_ok = true;    // one tail below the core, one above
  int core_diameter = -1;        // measured in the whole graph
  bool diameter_bound_ok = true; // core_diameter <= deg3Diameter + 4
};

inline ForkTailDecomposition fork_tail_decomposition(const Poset& p) {
  if (width(p) > 2) throw std::invalid_argument("decomposition needs width at most two");
  Graph g = inc(p);
  if (!is_connected(g)) throw std::invalid_argument("decomposition needs connected incomparability");
  ForkTailDecomposition d;
  vset deg3 = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) >= 3) deg3 |= vset(1) << v;
  d.core = deg3 ? ball(g, conv_order(p, deg3), 2) : 0;
  vset rest = full_set(g.n) & ~d.core;
  if (rest) {
    Graph h = induced_subgraph(g, rest);
    std::vector<int> verts;
    for_bits(rest, [&](int v) { verts.push_back(v); });
    for (vset c : components(h)) {
      vset tail = 0;
      for_bits(c, [&](int i) { tail |= vset(1) << verts[i]; });
      d.tails.push_back(tail);
    }
  }
  if (d.tails.size() > 2) {
    d.tails_are_paths = false;
    d.attachment_ok = false;
  }
  int below = 0, above = 0;
  for (vset t : d.tails) {
    if (!is_path_graph(induced_subgraph(g, t))) d.tails_are_paths = false;
    if (d.core) {
      int edges = 0;
      vset ends = 0;
      for_bits(t, [&](int v) {
        vset hit = g.adj[v] & d.core;
        edges += popcount(hit);
        ends |= hit;
      });
      if (edges != 1 || popcount(ends) != 1) d.attachment_ok = false;
      bool any_up = false, any_down = false;
      for_bits(t, [&](int v) {
        for_bits(d.core, [&](int k) {
          if (p.lt(v, k)) any_up = true;
          if (p.lt(k, v)) any_down = true;
        });
      });
      if (any_up && any_down) d.orientation_ok = false;
      if (any_up) ++below;
      if (any_down) ++above;
    }
  }
  if (below > 1 || above > 1) d.orientation_ok = false;
  MetricReport m = metric_report(g);
  if (popcount(d.core) >= 2) {
    d.core_diameter = 0;
    for_bits(d.core, [&](int u) {
      for_bits(d.core, [&](int v) { d.core_diameter = std::max(d.core_diameter, m.dist[u][v]); });
    });
  }
  d.diameter_bound_ok = d.core_diameter <= std::max(m.deg3_diameter, 0) + 4;
  return d;
}

}  // namespace width2
