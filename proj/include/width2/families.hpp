#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "width2/bichain.hpp"
#include "width2/embedding.hpp"
#include "width2/graph.hpp"
#include "width2/poset.hpp"
#include "width2/recognition.hpp"

namespace width2 {

// ---- double-ended forks ----------------------------------------------------
//
// DF_n: inner path 0..n-1, pendants n, n+1 on vertex 0 and n+2, n+3 on the
// other end. Defined from n = 2 up so the two decorated ends are distinct.

inline Graph double_fork(int n) {
  if (n < 2) throw std::invalid_argument("fork length must be at least 2");
  Graph g(n + 4);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, n);
  g.add_edge(0, n + 1);
  g.add_edge(n - 1, n + 2);
  g.add_edge(n - 1, n + 3);
  return g;
}

inline Poset fork_orientation(int n) {
  auto p = recognize_bipartite_permutation(double_fork(n));
  if (!p) throw std::logic_error("fork graph lost its orientation");
  return *p;
}

// Largest n with DF_n embedded in g, or 0 when no fork fits.
inline int max_fork_length(const Graph& g) {
  int best = 0;
  for (int n = 2; n + 4 <= g.n; ++n)
    if (embeds(double_fork(n), g)) best = n;
  return best;
}

// ---- half-graphs, paths, combs ----------------------------------------------

inline Graph half_graph(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) g.add_edge(i, k + j);
  return g;
}

inline Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph comb_graph(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  Graph g(2 * k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
  return g;
}

// ---- the posets P1, P2 and bichains B1, B2 -----------------------------------

// P1: natural order with the relations even -> odd removed.
inline Poset poset_P1(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  Poset p(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!(i % 2 == 0 && j % 2 == 1)) p.up[i] |= vset(1) << j;
  if (!is_valid_poset(p)) throw std::logic_error("family generator broke an invariant");
  return p;
}

// P2: u < v when v - u >= 2; consecutive integers are the only incomparable
// pairs, so the incomparability graph is the path in natural order.
inline Poset poset_P2(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  Poset p(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) p.up[i] |= vset(1) << j;
  return p;
}

// sigma of B1 sends odd positions to the low values in order and even
// positions to the high values in order.
inline Bichain bichain_B1(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  std::vector<int> sigma(k);
  for (int i = 0; i < k; ++i) sigma[i] = i % 2 ? (i - 1) / 2 : k / 2 + i / 2;
  return Bichain(sigma);
}

namespace detail {

// Prefix of the infinite permutation behind B2: 1, 3, 0, 5, 2, 7, 4, ...
inline std::vector<int> b2_sigma_prefix(int len) {
  std::vector<int> s(len);
  for (int i = 0; i < len; ++i) {
    if (i == 0)
      s[i] = 1;
    else if (i == 1)
      s[i] = 3;
    else if (i % 2 == 0)
      s[i] = i - 2;
    else
      s[i] = i + 2;
  }
  return s;
}

// Vertices of the incomparability path of o(B2) in path order: 0, 2, 1, 4, 3, ...
inline std::vector<int> b2_path_prefix(int k) {
  std::vector<int> e(k);
  for (int i = 0; i < k; ++i) e[i] = i == 0 ? 0 : i % 2 ? i + 1 : i - 1;
  return e;
}

}  // namespace detail

// The finite B2 takes the first k elements along that path, then re-ranks;
// a plain initial segment of positions would leave the last even element
// isolated in the incomparability graph.
inline Bichain bichain_B2(int k) {
  if (k < 1) throw std::invalid_argument("size must be positive");
  std::vector<int> members = detail::b2_path_prefix(k);
  std::sort(members.begin(), members.end());
  std::vector<int> raw = detail::b2_sigma_prefix(members.back() + 1);
  std::vector<std::pair<int, int>> vals;  // (raw sigma value, rank by position)
  for (std::size_t i = 0; i < members.size(); ++i) vals.push_back({raw[members[i]], int(i)});
  std::sort(vals.begin(), vals.end());
  std::vector<int> sigma(k);
  for (std::size_t r = 0; r < vals.size(); ++r) sigma[vals[r].second] = int(r);
  return Bichain(sigma);
}

// ---- kites -------------------------------------------------------------------
//
// Path x_0..x_{k-1} decorated with every legal extra vertex of the kite's
// shape: type 1 hangs a vertex on each edge, type 2 on each even triple,
// type 3 on each even pair at distance two.

inline Graph kite_truncation(int type, int k) {
  if (type < 1 || type > 3) throw std::invalid_argument("kite type must be 1, 2, or 3");
  if (k < 1) throw std::invalid_argument("size must be positive");
  std::vector<std::vector<int>> pendants;
  if (type == 1) {
    for (int i = 0; i + 1 < k; ++i) pendants.push_back({i, i + 1});
  } else if (type == 2) {
    for (int i = 0; i + 2 < k; i += 2) pendants.push_back({i, i + 1, i + 2});
  } else {
    for (int i = 0; i + 2 < k; i += 2) pendants.push_back({i, i + 2});
  }
  Graph g(k + int(pendants.size()));
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  for (std::size_t y = 0; y < pendants.size(); ++y)
    for (int x : pendants[y]) g.add_edge(k + int(y), x);
  return g;
}

inline Graph direct_sum(const std::vector<Graph>& parts) { return disjoint_union(parts); }

// ---- Sturmian orientations ----------------------------------------------------

struct SturmianOrientation {
  std::vector<int> word;                  // mechanical word of the slope
  std::vector<std::pair<int, int>> arcs;  // edge {i, i+1} directed by letter i
  std::set<std::string> factors(int ell) const {
    std::set<std::string> out;
    if (ell < 1 || ell > int(word.size())) return out;
    for (std::size_t i = 0; i + ell <= word.size(); ++i) {
      std::string f;
      for (int j = 0; j < ell; ++j) f += char('0' + word[i + j]);
      out.insert(f);
    }
    return out;
  }
};

inline SturmianOrientation sturmian_orientation(int p, int q, int len) {
  if (p <= 0 || q <= 0 || p >= q) throw std::invalid_argument("slope must satisfy 0 < p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("slope must be in lowest terms");
  if (len < 1) throw std::invalid_argument("length must be positive");
  SturmianOrientation s;
  for (int i = 0; i < len; ++i) {
    long long hi = (long long)(i + 1) * p / q, lo = (long long)i * p / q;
    s.word.push_back(int(hi - lo));
  }
  for (int i = 0; i < len; ++i) {
    if (s.word[i])
      s.arcs.push_back({i, i + 1});
    else
      s.arcs.push_back({i + 1, i});
  }
  return s;
}

}  // namespace width2
