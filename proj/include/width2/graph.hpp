#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "width2/bits.hpp"

namespace width2 {

// Finite simple graph on vertices 0..n-1, adjacency stored as row bitmasks.
struct Graph {
  int n = 0;
  std::vector<vset> adj;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_, 0) {
    if (n_ < 0 || n_ > 64) throw std::invalid_argument("vertex count out of range");
  }

  bool has_edge(int u, int v) const { return has_bit(adj[u], v); }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    adj[u] |= vset(1) << v;
    adj[v] |= vset(1) << u;
  }

  int degree(int u) const { return popcount(adj[u]); }

  int edge_count() const {
    int twice = 0;
    for (int u = 0; u < n; ++u) twice += degree(u);
    return twice / 2;
  }

  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

inline Graph complement(const Graph& g) {
  Graph h(g.n);
  vset all = full_set(g.n);
  for (int u = 0; u < g.n; ++u) h.adj[u] = (~g.adj[u] & all) & ~(vset(1) << u);
  return h;
}

inline Graph induced_subgraph(const Graph& g, vset verts) {
  std::vector<int> keep;
  for_bits(verts, [&](int v) { keep.push_back(v); });
  Graph h(static_cast<int>(keep.size()));
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j)
      if (g.has_edge(keep[i], keep[j])) h.add_edge(i, j);
  return h;
}

// Component of `start` intersected with `within`.
inline vset component_of(const Graph& g, int start, vset within) {
  vset seen = vset(1) << start, frontier = seen;
  while (frontier) {
    vset next = 0;
    for_bits(frontier, [&](int v) { next |= g.adj[v] & within; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen & within;
}

inline bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  return component_of(g, 0, full_set(g.n)) == full_set(g.n);
}

inline std::vector<vset> components(const Graph& g) {
  std::vector<vset> out;
  vset rest = full_set(g.n);
  while (rest) {
    vset c = component_of(g, lowest_bit(rest), rest);
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

// BFS distances from src; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n, -1);
  dist[src] = 0;
  vset seen = vset(1) << src, frontier = seen;
  int d = 0;
  while (frontier) {
    ++d;
    vset next = 0;
    for_bits(frontier, [&](int v) { next |= g.adj[v]; });
    next &= ~seen;
    for_bits(next, [&](int v) { dist[v] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

// Two-coloring; empty result when an odd cycle exists.
inline bool is_bipartite(const Graph& g, vset* side_a = nullptr) {
  std::vector<int> color(g.n, -1);
  vset a = 0;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (color[v] == 0) a |= vset(1) << v;
      bool bad = false;
      for_bits(g.adj[v], [&](int w) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          bad = true;
        }
      });
      if (bad) return false;
    }
  }
  if (side_a) *side_a = a;
  return true;
}

inline bool triangle_free(const Graph& g) {
  for (int u = 0; u < g.n; ++u) {
    vset later = g.adj[u] & ~full_set(u + 1);
    bool hit = false;
    for_bits(later, [&](int v) { hit = hit || (g.adj[u] & g.adj[v]) != 0; });
    if (hit) return false;
  }
  return true;
}

inline int clique_number(const Graph& g) {
  // Plain branch and bound; fine at enumeration scale.
  int best = 0;
  auto rec = [&](auto&& self, vset chosen, vset cand) -> void {
    if (popcount(chosen) + popcount(cand) <= best) return;
    if (!cand) {
      best = std::max(best, popcount(chosen));
      return;
    }
    int v = lowest_bit(cand);
    self(self, chosen | (vset(1) << v), cand & g.adj[v]);
    self(self, chosen, cand & ~(vset(1) << v));
  };
  rec(rec, 0, full_set(g.n));
  return best;
}

inline bool is_forest(const Graph& g) {
  // Acyclic iff every component has |E| = |V| - 1.
  for (vset c : components(g)) {
    int verts = popcount(c), edges = 0;
    for_bits(c, [&](int v) { edges += popcount(g.adj[v] & c); });
    if (edges / 2 != verts - 1) return false;
  }
  return true;
}

// Is g exactly a simple path (possibly a single vertex or empty)?
inline bool is_path_graph(const Graph& g) {
  if (g.n == 0) return true;
  if (!is_connected(g)) return false;
  int ones = 0;
  for (int v = 0; v < g.n; ++v) {
    int d = g.degree(v);
    if (d > 2) return false;
    if (d <= 1) ++ones;
  }
  return g.n == 1 ? ones == 1 : ones == 2;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.n;
  Graph g(total);
  int base = 0;
  for (const Graph& p : parts) {
    for (int u = 0; u < p.n; ++u)
      for (int v = u + 1; v < p.n; ++v)
        if (p.has_edge(u, v)) g.add_edge(base + u, base + v);
    base += p.n;
  }
  return g;
}

}  // namespace width2
