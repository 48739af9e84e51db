#pragma once

#include <optional>
#include <vector>

#include "width2/embedding.hpp"
#include "width2/graph.hpp"
#include "width2/poset.hpp"

namespace width2 {

namespace detail {

// Backtracking orientation search with implication propagation: whenever
// a -> b and b -> c are both set, a -> c is forced, and a missing or
// oppositely set {a,c} kills the branch. first_only stops at one witness.
struct OrientSearch {
  const Graph& g;
  std::vector<vset> fwd;  // fwd[u] bit v: edge {u,v} oriented u -> v
  std::vector<vset> dec;  // dec[u] bit v: orientation of {u,v} decided
  std::vector<Poset> found;
  bool first_only;
  bool done = false;

  OrientSearch(const Graph& g_, bool first)
      : g(g_), fwd(g_.n, 0), dec(g_.n, 0), first_only(first) {}

  bool set_arc(int a, int b, std::vector<std::pair<int, int>>& trail) {
    if (has_bit(dec[a], b)) return has_bit(fwd[a], b);
    dec[a] |= vset(1) << b;
    dec[b] |= vset(1) << a;
    fwd[a] |= vset(1) << b;
    trail.emplace_back(a, b);
    // close a -> b against decided arcs on either side
    vset into_a = 0;
    for (int w = 0; w < g.n; ++w)
      if (has_bit(fwd[w], a)) into_a |= vset(1) << w;
    vset out_b = fwd[b];
    bool ok = true;
    for_bits(into_a, [&](int w) {
      if (!ok) return;
      if (!g.has_edge(w, b)) { ok = false; return; }       // w -> a -> b needs edge {w,b}
      ok = set_arc(w, b, trail);
    });
    if (!ok) return false;
    for_bits(out_b, [&](int c) {
      if (!ok) return;
      if (c == a) { ok = false; return; }
      if (!g.has_edge(a, c)) { ok = false; return; }       // a -> b -> c needs edge {a,c}
      ok = set_arc(a, c, trail);
    });
    return ok;
  }

  void undo(std::vector<std::pair<int, int>>& trail, size_t mark) {
    while (trail.size() > mark) {
      auto [a, b] = trail.back();
      trail.pop_back();
      fwd[a] &= ~(vset(1) << b);
      dec[a] &= ~(vset(1) << b);
      dec[b] &= ~(vset(1) << a);
    }
  }

  void run(std::vector<std::pair<int, int>>& trail) {
    if (done) return;
    int eu = -1, ev = -1;
    for (int u = 0; u < g.n && eu < 0; ++u) {
      vset und = g.adj[u] & ~dec[u] & ~full_set(u + 1);
      if (und) { eu = u; ev = lowest_bit(und); }
    }
    if (eu < 0) {
      Poset p(g.n);
      for (int u = 0; u < g.n; ++u) p.up[u] |= fwd[u];
      found.push_back(p);
      if (first_only) done = true;
      return;
    }
    for (int dir = 0; dir < 2; ++dir) {
      size_t mark = trail.size();
      int a = dir ? ev : eu, b = dir ? eu : ev;
      if (set_arc(a, b, trail)) run(trail);
      undo(trail, mark);
      if (done) return;
    }
  }
};

}  // namespace detail

// All transitive orientations of g, each returned as a poset whose
// comparability graph is exactly g.
inline std::vector<Poset> transitive_orientations(const Graph& g) {
  detail::OrientSearch s(g, false);
  std::vector<std::pair<int, int>> trail;
  s.run(trail);
  return s.found;
}

inline std::optional<Poset> first_transitive_orientation(const Graph& g) {
  detail::OrientSearch s(g, true);
  std::vector<std::pair<int, int>> trail;
  s.run(trail);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

// Independent existence check used by audits: plain edge-by-edge search with
// no propagation, rejecting a branch only on a violation among decided arcs.
inline bool transitively_orientable_plain(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) edges.emplace_back(u, v);
  std::vector<vset> fwd(g.n, 0), dec(g.n, 0);
  auto consistent = [&](int a, int b) {
    // every decided w -> a needs a decided-or-open w -> b over an edge, etc.
    for (int w = 0; w < g.n; ++w) {
      if (has_bit(fwd[w], a)) {
        if (!g.has_edge(w, b) && w != b) return false;
        if (has_bit(dec[w], b) && !has_bit(fwd[w], b)) return false;
      }
      if (has_bit(fwd[b], w)) {
        if (!g.has_edge(a, w) && w != a) return false;
        if (has_bit(dec[a], w) && !has_bit(fwd[a], w)) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == edges.size()) return true;
    auto [u, v] = edges[i];
    for (int dir = 0; dir < 2; ++dir) {
      int a = dir ? v : u, b = dir ? u : v;
      if (!consistent(a, b)) continue;
      fwd[a] |= vset(1) << b;
      dec[a] |= vset(1) << b;
      dec[b] |= vset(1) << a;
      if (self(self, i + 1)) return true;
      fwd[a] &= ~(vset(1) << b);
      dec[a] &= ~(vset(1) << b);
      dec[b] &= ~(vset(1) << a);
    }
    return false;
  };
  return rec(rec, 0);
}

// A graph is the incomparability graph of a width-<=2 poset iff it is
// triangle-free and its complement orients transitively; the witness poset is
// that orientation of the complement.
inline std::optional<Poset> recognize_bipartite_permutation(const Graph& g) {
  if (!triangle_free(g)) return std::nullopt;
  std::optional<Poset> p = first_transitive_orientation(complement(g));
  if (!p) return std::nullopt;
  return p;
}

inline Graph cycle_graph(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  if (k >= 3) g.add_edge(k - 1, 0);
  return g;
}

// Subdivided claw: a center, three middle vertices, three leaves.
inline Graph spider_graph() {
  Graph g(7);
  for (int i = 1; i <= 3; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i + 3);
  }
  return g;
}

// Secondary cross-validation for accepted graphs: bipartite, no induced even
// cycle of length >= 6, no induced subdivided claw. This is a partial
// obstruction list; rejection cannot be concluded from it.
inline bool obstruction_clear(const Graph& g) {
  if (!is_bipartite(g)) return false;
  for (int k = 6; k <= g.n; k += 2)
    if (embeds(cycle_graph(k), g)) return false;
  if (g.n >= 7 && embeds(spider_graph(), g)) return false;
  return true;
}

}  // namespace width2
