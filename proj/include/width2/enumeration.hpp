#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "width2/canonical.hpp"

namespace width2 {

// Exhaustive catalogues up to isomorphism, built by vertex extension with
// canonical-form rejection. Deleting a vertex of any (n+1)-vertex structure
// leaves an n-vertex one, so extending every canonical n-vertex structure in
// all ways reaches everything. Lists are sorted by canonical code and cached;
// the caches are not thread safe, warm them before any parallel phase.

inline const std::vector<Graph>& all_graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n <= 0) {
    out.push_back(Graph(0));
  } else {
    const std::vector<Graph>& prev = all_graphs(n - 1);
    std::map<Code, Graph> seen;
    for (const Graph& g : prev) {
      for (vset nb = 0; nb < (vset(1) << (n - 1)); ++nb) {
        Graph h(n);
        for (int u = 0; u < n - 1; ++u) h.adj[u] = g.adj[u];
        h.adj[n - 1] = nb;
        for_bits(nb, [&](int u) { h.adj[u] |= vset(1) << (n - 1); });
        seen.emplace(canonical_code(h), h);
      }
    }
    for (auto& [code, g] : seen) out.push_back(g);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<Graph> all_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k)
    for (const Graph& g : all_graphs(k)) out.push_back(g);
  return out;
}

// Extensions of a poset by one new element: choose a down-closed strict
// down-set D and an up-closed strict up-set U with D x U inside the order.
inline const std::vector<Poset>& all_posets(int n) {
  static std::map<int, std::vector<Poset>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Poset> out;
  if (n <= 0) {
    out.push_back(Poset(0));
  } else if (n == 1) {
    out.push_back(Poset(1));
  } else {
    const std::vector<Poset>& prev = all_posets(n - 1);
    std::map<Code, Poset> seen;
    for (const Poset& p : prev) {
      std::vector<vset> downs, ups;
      for (vset s = 0; s < (vset(1) << (n - 1)); ++s) {
        bool dc = true, uc = true;
        for_bits(s, [&](int v) {
          dc = dc && (p.strict_down(v) & ~s) == 0;
          uc = uc && (p.strict_up(v) & ~s) == 0;
        });
        if (dc) downs.push_back(s);
        if (uc) ups.push_back(s);
      }
      for (vset d : downs) {
        for (vset u : ups) {
          if (d & u) continue;
          bool ok = true;
          for_bits(d, [&](int x) { ok = ok && (u & ~p.strict_up(x)) == 0; });
          if (!ok) continue;
          Poset q(n);
          for (int v = 0; v < n - 1; ++v) q.up[v] |= p.up[v];
          int z = n - 1;
          q.up[z] |= u;
          for_bits(d, [&](int x) { q.up[x] |= vset(1) << z; });
          seen.emplace(canonical_code(q), q);
        }
      }
    }
    for (auto& [code, p] : seen) out.push_back(p);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<Poset> all_posets_up_to(int n) {
  std::vector<Poset> out;
  for (int k = 1; k <= n; ++k)
    for (const Poset& p : all_posets(k)) out.push_back(p);
  return out;
}

// All permutations of size n with no decreasing subsequence of length three,
// generated left to right with early pruning.
inline std::vector<std::vector<int>> permutations_avoiding_321(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(n, 0);
  auto creates_321 = [&](int next) {
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (cur[i] > cur[j] && cur[j] > next) return true;
    return false;
  };
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || creates_321(v)) continue;
      used[v] = 1;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  return out;
}

// Every poset of width <= 2 is the intersection order of a bichain whose
// permutation avoids 321, so this reaches all of them.
inline const std::vector<Poset>& width2_posets(int n) {
  static std::map<int, std::vector<Poset>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<Code, Poset> seen;
  for (const std::vector<int>& s : permutations_avoiding_321(n)) {
    Poset p = intersection_order(Bichain(s));
    seen.emplace(canonical_code(p), p);
  }
  std::vector<Poset> out;
  for (auto& [code, p] : seen) out.push_back(p);
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<Poset> width2_posets_up_to(int n) {
  std::vector<Poset> out;
  for (int k = 1; k <= n; ++k)
    for (const Poset& p : width2_posets(k)) out.push_back(p);
  return out;
}

inline const std::vector<Graph>& bipartite_graphs(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Graph> out;
  if (n <= 0) {
    out.push_back(Graph(0));
  } else if (n == 1) {
    out.push_back(Graph(1));
  } else {
    const std::vector<Graph>& prev = bipartite_graphs(n - 1);
    std::map<Code, Graph> seen;
    for (const Graph& g : prev) {
      for (vset nb = 0; nb < (vset(1) << (n - 1)); ++nb) {
        Graph h(n);
        for (int u = 0; u < n - 1; ++u) h.adj[u] = g.adj[u];
        h.adj[n - 1] = nb;
        for_bits(nb, [&](int u) { h.adj[u] |= vset(1) << (n - 1); });
        if (!is_bipartite(h)) continue;
        seen.emplace(canonical_code(h), h);
      }
    }
    for (auto& [code, g] : seen) out.push_back(g);
  }
  return cache.emplace(n, std::move(out)).first->second;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace width2
