#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "width2/bichain.hpp"
#include "width2/graph.hpp"
#include "width2/poset.hpp"
#include "width2/recognition.hpp"

namespace width2 {

// ---- modules -------------------------------------------------------------
//
// A module is a vertex set every outside vertex relates to uniformly. For a
// bichain this makes modules exactly the common intervals of the two linear
// orders. Enumeration is by exhaustive subset scan, intended for n <= 16.

inline bool is_module(const Graph& g, vset a) {
  for (int v = 0; v < g.n; ++v) {
    if (has_bit(a, v)) continue;
    vset hit = g.adj[v] & a;
    if (hit != 0 && hit != a) return false;
  }
  return true;
}

inline bool is_module(const Poset& p, vset a) {
  for (int v = 0; v < p.n; ++v) {
    if (has_bit(a, v)) continue;
    vset up_hit = p.up[v] & a;
    if (up_hit != 0 && up_hit != a) return false;  // v <= a must be uniform
    vset down_hit = 0;
    for_bits(a, [&](int x) {
      if (p.leq(x, v)) down_hit |= vset(1) << x;
    });
    if (down_hit != 0 && down_hit != a) return false;
  }
  return true;
}

inline bool is_module(const Bichain& b, vset a) {
  if (!a) return true;
  int lo = 64, hi = -1, slo = b.n, shi = -1, cnt = 0;
  for_bits(a, [&](int i) {
    lo = std::min(lo, i);
    hi = std::max(hi, i);
    slo = std::min(slo, b.sigma[i]);
    shi = std::max(shi, b.sigma[i]);
    ++cnt;
  });
  return hi - lo + 1 == cnt && shi - slo + 1 == cnt;
}

template <class S>
inline std::vector<vset> modules_of(const S& s) {
  if (s.n > 16) throw std::invalid_argument("module scan limited to 16 vertices");
  std::vector<vset> out;
  for (vset a = 1; a < (vset(1) << s.n); ++a)
    if (is_module(s, a)) out.push_back(a);
  return out;
}

template <class S>
inline bool is_prime(const S& s) {
  if (s.n <= 2) return true;
  for (vset a = 1; a < (vset(1) << s.n); ++a) {
    if (popcount(a) <= 1 || popcount(a) == s.n) continue;
    if (is_module(s, a)) return false;
  }
  return true;
}

inline bool overlap(vset a, vset b) {
  return (a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0;
}

// Strong modules overlap no module at all.
inline std::vector<vset> strong_modules(const std::vector<vset>& mods) {
  std::vector<vset> out;
  for (vset a : mods) {
    bool strong = true;
    for (vset b : mods)
      if (overlap(a, b)) {
        strong = false;
        break;
      }
    if (strong) out.push_back(a);
  }
  return out;
}

// Maximal proper strong modules; for n >= 2 they partition the ground set.
inline std::vector<vset> components_of_family(const std::vector<vset>& strong, int n) {
  std::vector<vset> out;
  for (vset a : strong) {
    if (a == full_set(n)) continue;
    bool maximal = true;
    for (vset b : strong)
      if (b != a && b != full_set(n) && (a & ~b) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class S>
struct ModuleFamily {
  std::vector<vset> modules;     // all nonempty modules, trivial ones included
  std::vector<vset> strong;      // strong modules
  std::vector<vset> components;  // maximal proper strong modules
  S quotient;                    // induced on one representative per component
};

namespace detail {
inline Graph restrict_structure(const Graph& s, vset verts) { return induced_subgraph(s, verts); }
inline Poset restrict_structure(const Poset& s, vset verts) { return induced_subposet(s, verts); }
inline Bichain restrict_structure(const Bichain& s, vset verts) {
  return induced_subbichain(s, verts);
}
}  // namespace detail

template <class S>
inline ModuleFamily<S> module_family(const S& s) {
  ModuleFamily<S> fam;
  fam.modules = modules_of(s);
  fam.strong = strong_modules(fam.modules);
  fam.components = components_of_family(fam.strong, s.n);
  vset reps = 0;
  for (vset c : fam.components) reps |= vset(1) << lowest_bit(c);
  fam.quotient = detail::restrict_structure(s, reps);
  return fam;
}

// The strong modules of a poset and of its comparability graph coincide.
inline bool strong_module_audit(const Poset& p) {
  std::vector<vset> sp = strong_modules(modules_of(p));
  std::vector<vset> sg = strong_modules(modules_of(comp(p)));
  std::sort(sp.begin(), sp.end());
  std::sort(sg.begin(), sg.end());
  return sp == sg;
}

// ---- chain modules -------------------------------------------------------

inline bool is_chain_module(const Poset& p, vset a) {
  return is_module(p, a) && is_chain(p, a);
}

struct ChainModuleQuotient {
  std::vector<vset> classes;  // totally ordered modules partitioning the set
  Poset quotient;
};

// Two elements are equivalent when some totally ordered module contains both;
// the classes themselves are totally ordered modules and the quotient has no
// nontrivial one left.
inline ChainModuleQuotient chain_module_quotient(const Poset& p) {
  std::vector<int> parent(p.n);
  for (int i = 0; i < p.n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (vset a = 1; a < (vset(1) << p.n); ++a) {
    if (popcount(a) < 2 || !is_chain_module(p, a)) continue;
    int r = find(lowest_bit(a));
    for_bits(a, [&](int v) { parent[find(v)] = r; });
  }
  std::vector<vset> classes;
  vset handled = 0;
  for (int v = 0; v < p.n; ++v) {
    if (has_bit(handled, v)) continue;
    vset cls = 0;
    for (int w = 0; w < p.n; ++w)
      if (find(w) == find(v)) cls |= vset(1) << w;
    classes.push_back(cls);
    handled |= cls;
  }
  ChainModuleQuotient q;
  q.classes = classes;
  vset reps = 0;
  for (vset c : classes) {
    if (!is_chain_module(p, c)) throw std::logic_error("equivalence class is not a chain module");
    reps |= vset(1) << lowest_bit(c);
  }
  q.quotient = induced_subposet(p, reps);
  for (vset a = 1; a < (vset(1) << q.quotient.n); ++a)
    if (popcount(a) >= 2 && is_chain_module(q.quotient, a))
      throw std::logic_error("quotient keeps a nontrivial chain module");
  return q;
}

// Lexicographic sum of the classes over the quotient rebuilds the poset.
inline bool chain_module_roundtrip(const Poset& p) {
  ChainModuleQuotient q = chain_module_quotient(p);
  Poset r(p.n);
  for (vset ca : q.classes)
    for (vset cb : q.classes) {
      int a = lowest_bit(ca), b = lowest_bit(cb);
      if (ca == cb) {
        for_bits(ca, [&](int x) {
          for_bits(ca, [&](int y) {
            if (p.leq(x, y)) r.up[x] |= vset(1) << y;
          });
        });
      } else if (p.leq(a, b)) {
        for_bits(ca, [&](int x) { r.up[x] |= cb; });
      }
    }
  return r == p;
}

// Primality criterion for bipartite graphs: connected with pairwise distinct
// neighborhoods. Structures on at most two vertices are prime by convention,
// which the two-vertex edgeless graph needs.
inline bool prime_bipartite_check(const Graph& g) {
  if (!is_bipartite(g)) throw std::invalid_argument("graph is not bipartite");
  if (g.n <= 2) return true;
  if (!is_connected(g)) return false;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adj[u] == g.adj[v] || (g.adj[u] & ~(vset(1) << v)) == (g.adj[v] & ~(vset(1) << u)))
        return false;
  return true;
}

}  // namespace width2
