#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "width2/bits.hpp"
#include "width2/graph.hpp"

namespace width2 {

// Finite poset on 0..n-1. up[u] holds the principal up-set of u including u
// itself, so bit v of up[u] means u <= v. The relation is kept reflexive,
// antisymmetric and transitively closed at all times.
struct Poset {
  int n = 0;
  std::vector<vset> up;

  Poset() = default;
  explicit Poset(int n_) : n(n_), up(n_, 0) {
    if (n_ < 0 || n_ > 64) throw std::invalid_argument("element count out of range");
    for (int v = 0; v < n_; ++v) up[v] = vset(1) << v;
  }

  bool leq(int u, int v) const { return has_bit(up[u], v); }
  bool lt(int u, int v) const { return u != v && leq(u, v); }
  bool incomparable(int u, int v) const { return u != v && !leq(u, v) && !leq(v, u); }

  vset strict_up(int u) const { return up[u] & ~(vset(1) << u); }

  vset strict_down(int u) const {
    vset d = 0;
    for (int w = 0; w < n; ++w)
      if (w != u && leq(w, u)) d |= vset(1) << w;
    return d;
  }

  bool operator==(const Poset& o) const { return n == o.n && up == o.up; }
};

// Builds the reflexive transitive closure of the given strict pairs and
// rejects cycles.
inline Poset poset_from_relations(int n, const std::vector<std::pair<int, int>>& rels) {
  Poset p(n);
  for (auto [u, v] : rels) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    p.up[u] |= vset(1) << v;
  }
  for (int k = 0; k < n; ++k)
    for (int u = 0; u < n; ++u)
      if (p.leq(u, k)) p.up[u] |= p.up[k];
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (p.leq(u, v) && p.leq(v, u)) throw std::invalid_argument("not antisymmetric");
  return p;
}

inline bool is_valid_poset(const Poset& p) {
  for (int u = 0; u < p.n; ++u) {
    if (!p.leq(u, u)) return false;
    for (int v = 0; v < p.n; ++v) {
      if (u != v && p.leq(u, v) && p.leq(v, u)) return false;
      if (p.leq(u, v) && (p.up[v] & ~p.up[u]) != 0) return false;
    }
  }
  return true;
}

// Comparability graph: edges join distinct comparable elements.
inline Graph comp(const Poset& p) {
  Graph g(p.n);
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v)
      if (p.leq(u, v) || p.leq(v, u)) g.add_edge(u, v);
  return g;
}

// Incomparability graph, the complement of comp on the same vertices.
inline Graph inc(const Poset& p) {
  Graph g(p.n);
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v)
      if (!p.leq(u, v) && !p.leq(v, u)) g.add_edge(u, v);
  return g;
}

inline Poset dual(const Poset& p) {
  Poset d(p.n);
  for (int u = 0; u < p.n; ++u)
    for (int v = 0; v < p.n; ++v)
      if (p.leq(u, v)) d.up[v] |= vset(1) << u;
  return d;
}

inline Poset induced_subposet(const Poset& p, vset verts) {
  std::vector<int> keep;
  for_bits(verts, [&](int v) { keep.push_back(v); });
  Poset q(static_cast<int>(keep.size()));
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      if (p.leq(keep[i], keep[j])) q.up[i] |= vset(1) << j;
  return q;
}

inline bool is_antichain(const Poset& p, vset s) {
  bool ok = true;
  for_bits(s, [&](int u) { ok = ok && (p.up[u] & s) == (vset(1) << u); });
  return ok;
}

inline bool is_chain(const Poset& p, vset s) {
  bool ok = true;
  for_bits(s, [&](int u) {
    for_bits(s, [&](int v) { ok = ok && (u == v || p.leq(u, v) || p.leq(v, u)); });
  });
  return ok;
}

// Width = maximum antichain size = clique number of inc.
inline int width(const Poset& p) {
  if (p.n == 0) return 0;
  return clique_number(inc(p));
}

// Unique partition of a width-<=2 poset with connected incomparability graph
// into two chains: the parity classes of incomparability distance from the
// smallest vertex. The second chain is empty iff n = 1.
inline std::pair<std::vector<int>, std::vector<int>> two_chain_partition(const Poset& p) {
  if (width(p) > 2) throw std::invalid_argument("width exceeds two");
  Graph g = inc(p);
  if (!is_connected(g)) throw std::invalid_argument("partition not unique");
  std::vector<int> dist = bfs_distances(g, 0);
  std::vector<int> even, odd;
  vset evens = 0, odds = 0;
  for (int v = 0; v < p.n; ++v) {
    if (dist[v] % 2 == 0) {
      even.push_back(v);
      evens |= vset(1) << v;
    } else {
      odd.push_back(v);
      odds |= vset(1) << v;
    }
  }
  if (!is_chain(p, evens) || !is_chain(p, odds))
    throw std::logic_error("parity classes are not chains");
  auto by_order = [&](std::vector<int>& c) {
    std::sort(c.begin(), c.end(), [&](int a, int b) { return p.lt(a, b); });
  };
  by_order(even);
  by_order(odd);
  return {even, odd};
}

// All linear extensions, each as the sequence of elements from bottom to top.
inline std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, vset placed) -> void {
    if (popcount(placed) == p.n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < p.n; ++v) {
      if (has_bit(placed, v)) continue;
      if ((p.strict_down(v) & ~placed) != 0) continue;  // some predecessor missing
      cur.push_back(v);
      self(self, placed | (vset(1) << v));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Relation bitmask of a linear order given as a bottom-to-top sequence;
// bit u*n+v set iff u <= v. Only valid for n <= 8.
inline std::uint64_t linear_order_mask(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size());
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m |= std::uint64_t(1) << (seq[i] * n + seq[j]);
  return m;
}

inline std::uint64_t relation_mask(const Poset& p) {
  std::uint64_t m = 0;
  for (int u = 0; u < p.n; ++u)
    for (int v = 0; v < p.n; ++v)
      if (p.leq(u, v)) m |= std::uint64_t(1) << (u * p.n + v);
  return m;
}

inline Poset direct_sum(const std::vector<Poset>& parts) {
  int total = 0;
  for (const Poset& q : parts) total += q.n;
  Poset p(total);
  int base = 0;
  for (const Poset& q : parts) {
    for (int u = 0; u < q.n; ++u) p.up[base + u] |= q.up[u] << base;
    base += q.n;
  }
  return p;
}

}  // namespace width2
