#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "width2/graph.hpp"
#include "width2/poset.hpp"
#include "width2/rational.hpp"

namespace width2 {

// ---- the poset D -----------------------------------------------------------
//
// D lives on [0,2pi) x Z with (q,n) <= (q',n') iff q <= q' and n <= n', or
// q > q' and n' >= n+2. D(m) is the slice |level| <= m. Incomparable pairs
// sit on consecutive levels with the upper point carrying the smaller first
// coordinate.

struct DPoint {
  PiRational q;
  int level = 0;

  DPoint(PiRational q_, int level_) : q(q_), level(level_) {
    if (q.sign() < 0 || q >= PiRational::pi(Rat(2)))
      throw std::invalid_argument("first coordinate out of [0, 2pi)");
  }

  friend bool operator==(const DPoint& x, const DPoint& y) {
    return x.q == y.q && x.level == y.level;
  }
};

inline bool d_leq(const DPoint& x, const DPoint& y) {
  if (x.q <= y.q && x.level <= y.level) return true;
  return x.q > y.q && y.level >= x.level + 2;
}

enum class DOrder { Less, Equal, Greater, Incomparable };

inline DOrder d_compare(const DPoint& x, const DPoint& y) {
  if (x == y) return DOrder::Equal;
  if (d_leq(x, y)) return DOrder::Less;
  if (d_leq(y, x)) return DOrder::Greater;
  return DOrder::Incomparable;
}

// The closed-form description of incomparability, kept separate from d_leq so
// the two can be audited against each other.
inline bool d_incomparable_formula(const DPoint& x, const DPoint& y) {
  return (x.q < y.q && y.level == x.level - 1) || (y.q < x.q && x.level == y.level - 1);
}

// Finite suborder of D on the given distinct points.
inline Poset poset_of_points(const std::vector<DPoint>& pts) {
  int n = static_cast<int>(pts.size());
  Poset p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && pts[i] == pts[j]) throw std::invalid_argument("duplicate point");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d_leq(pts[i], pts[j])) p.up[i] |= vset(1) << j;
  if (!is_valid_poset(p)) throw std::logic_error("d_leq failed to induce a poset");
  return p;
}

struct DSampleAudit {
  bool partial_order = false;          // antisymmetry and transitivity
  bool incomparability_formula = false;
  bool parity_chains = false;          // levels of equal parity form chains
  bool pass() const { return partial_order && incomparability_formula && parity_chains; }
};

inline DSampleAudit d_sample_audit(const std::vector<DPoint>& pts) {
  DSampleAudit a;
  Poset p = poset_of_points(pts);
  a.partial_order = is_valid_poset(p);
  a.incomparability_formula = true;
  a.parity_chains = true;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i == j) continue;
      if (p.incomparable(i, j) != d_incomparable_formula(pts[i], pts[j]))
        a.incomparability_formula = false;
      bool same_parity = ((pts[i].level - pts[j].level) % 2) == 0;
      if (same_parity && p.incomparable(i, j)) a.parity_chains = false;
    }
  return a;
}

// Random points of D(4) with coordinates in Q + Q*pi, distinct by draw.
inline std::vector<DPoint> random_d_sample(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 582), half(0, 1), lev(-4, 4);
  std::vector<DPoint> pts;
  while (static_cast<int>(pts.size()) < count) {
    PiRational q = half(rng) ? PiRational(Rat(num(rng) % 291, 97), Rat(1, 2))
                             : PiRational(Rat(num(rng), 97));
    DPoint cand(q, lev(rng));
    if (std::find(pts.begin(), pts.end(), cand) == pts.end()) pts.push_back(cand);
  }
  return pts;
}

// ---- the isomorphism with R_{pi,2} ------------------------------------------
//
// R_{pi,2} orders pairs (x, i) with i in {0,1} by: same i and x <= y, or
// different i and x + pi <= y. The map (q,n) -> (n*pi + q, n mod 2) is an
// isomorphism from D onto its image.

struct RPoint {
  PiRational x;
  int parity = 0;
};

inline RPoint to_Rpi2(const DPoint& p) {
  return {PiRational(p.q.a, p.q.b + Rat(p.level)), ((p.level % 2) + 2) % 2};
}

inline bool rpi2_leq(const RPoint& u, const RPoint& v) {
  if (u.parity == v.parity) return u.x <= v.x;
  return PiRational(u.x.a, u.x.b + Rat(1)) <= v.x;
}

inline bool rpi2_map_audit(const std::vector<DPoint>& pts) {
  std::vector<RPoint> img;
  for (const DPoint& p : pts) img.push_back(to_Rpi2(p));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (d_leq(pts[i], pts[j]) != rpi2_leq(img[i], img[j])) return false;
  return true;
}

// ---- long induced paths ------------------------------------------------------

struct LongPath {
  std::vector<DPoint> points;
  bool validated = false;      // consecutive pairs incomparable, all others comparable
  bool level_pair_edges_ok = false;  // exactly 3 path edges between consecutive levels
};

// The explicit incomparability path on 6n+1 points inside D(n): a seed of
// four points at the two bottom levels, then the triple (x1,x2,x3) shifted by
// (k/(2n), k) for each k up to 2n-1. The stage step k/(2n) must stay strictly
// below the 1/n spread of the seed triple and must never decrease; otherwise
// a later triple lands on or left of an earlier one and a chord appears.
inline LongPath construct_long_path(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<PiRational> q(6 * n + 1, PiRational());
  std::vector<int> lev(6 * n + 1, 0);
  q[0] = PiRational(Rat(0), Rat(1, n));
  lev[0] = -n;
  q[1] = PiRational(Rat(-1, 2 * n), Rat(1, n));
  lev[1] = -n + 1;
  q[2] = PiRational(Rat(1, n), Rat(1, n));
  lev[2] = -n;
  q[3] = PiRational(Rat(1, 2 * n), Rat(1, n));
  lev[3] = -n + 1;
  for (int k = 1; k <= 2 * n - 1; ++k)
    for (int j = 1; j <= 3; ++j) {
      q[3 * k + j] = q[j] + PiRational(Rat(k, 2 * n));
      lev[3 * k + j] = lev[j] + k;
    }
  LongPath lp;
  for (int i = 0; i <= 6 * n; ++i) {
    if (lev[i] < -n || lev[i] > n) throw std::logic_error("path leaves the slice");
    lp.points.emplace_back(q[i], lev[i]);
  }
  lp.validated = true;
  for (int i = 0; i <= 6 * n && lp.validated; ++i)
    for (int j = i + 1; j <= 6 * n; ++j) {
      bool incomp = d_compare(lp.points[i], lp.points[j]) == DOrder::Incomparable;
      if (incomp != (j == i + 1)) {
        lp.validated = false;
        break;
      }
    }
  std::map<int, int> edges_at;  // keyed by the lower level of the pair
  for (int i = 0; i + 1 <= 6 * n; ++i)
    ++edges_at[std::min(lev[i], lev[i + 1])];
  lp.level_pair_edges_ok = static_cast<int>(edges_at.size()) == 2 * n;
  for (auto [l, c] : edges_at)
    if (c != 3) lp.level_pair_edges_ok = false;
  return lp;
}

namespace detail {

// Longest induced path of g by exhaustive extension; returns the vertex list.
inline std::vector<int> longest_induced_path_witness(const Graph& g) {
  std::vector<int> best, cur;
  auto rec = [&](auto&& self, int last, vset used, vset blocked) -> void {
    if (cur.size() > best.size()) best = cur;
    vset cand = g.adj[last] & ~used & ~blocked;
    for_bits(cand, [&](int v) {
      cur.push_back(v);
      self(self, v, used | (vset(1) << v), blocked | (g.adj[last] & ~(vset(1) << v)));
      cur.pop_back();
    });
  };
  for (int s = 0; s < g.n; ++s) {
    cur = {s};
    rec(rec, s, vset(1) << s, 0);
  }
  return best;
}

}  // namespace detail

// Exhaustive maximum induced-path order over the grid
// {2*pi*p/denominatorBound : 0 <= p < denominatorBound} x [-n, n].
// The result is checked against the three-edges-per-level-pair bound before
// being returned, so a value above 6n+1 raises instead of propagating.
inline int max_induced_path_sample(int n, int denominatorBound) {
  if (n < 1 || denominatorBound < 2) throw std::invalid_argument("bad sample parameters");
  int count = denominatorBound * (2 * n + 1);
  if (count > 64) throw std::invalid_argument("grid too large");
  std::vector<DPoint> pts;
  for (int p = 0; p < denominatorBound; ++p)
    for (int l = -n; l <= n; ++l)
      pts.emplace_back(PiRational(Rat(0), Rat(2 * p, denominatorBound)), l);
  Graph g(count);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (d_compare(pts[i], pts[j]) == DOrder::Incomparable) g.add_edge(i, j);
  std::vector<int> path = detail::longest_induced_path_witness(g);
  std::map<int, int> edges_at;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    ++edges_at[std::min(pts[path[i]].level, pts[path[i + 1]].level)];
  for (auto [l, c] : edges_at)
    if (c > 3) throw std::logic_error("level-pair edge bound violated");
  if (static_cast<int>(path.size()) > 6 * n + 1)
    throw std::logic_error("induced path exceeds the counting bound");
  return static_cast<int>(path.size());
}

// ---- embedding finite posets into D(m) -----------------------------------------

struct DEmbedding {
  int m = 0;
  std::vector<DPoint> image;  // image[v] realizes vertex v
};

namespace detail {

// One slice depth: search level assignments along a BFS order of inc(P), so
// every vertex after the first is pinned to its neighbor's level +-1, then
// order the first coordinates by a topological sort of the forced strict
// constraints. Verification against d_leq is part of the contract, not a
// debug aid.
inline std::optional<std::vector<DPoint>> embed_at_depth(const Poset& p, int m) {
  Graph g = inc(p);
  std::vector<int> order;
  std::vector<int> dist = bfs_distances(g, 0);
  for (int d = 0; d <= p.n; ++d)
    for (int v = 0; v < p.n; ++v)
      if (dist[v] == d) order.push_back(v);
  std::vector<int> level(p.n, 0);
  std::vector<char> assigned(p.n, 0);

  auto try_levels = [&](auto&& self, std::size_t idx) -> std::optional<std::vector<DPoint>> {
    if (idx == order.size()) {
      // strict q constraints: u -> v means q_u < q_v
      std::vector<vset> succ(p.n, 0);
      std::vector<int> indeg(p.n, 0);
      for (int u = 0; u < p.n; ++u)
        for (int v = 0; v < p.n; ++v) {
          if (u == v) continue;
          bool arc = (p.lt(u, v) && level[v] <= level[u] + 1) ||
                     (p.incomparable(u, v) && level[u] == level[v] + 1);
          if (arc) {
            succ[u] |= vset(1) << v;
            ++indeg[v];
          }
        }
      std::vector<int> rank_of(p.n, -1);
      vset ready = 0;
      for (int v = 0; v < p.n; ++v)
        if (indeg[v] == 0) ready |= vset(1) << v;
      for (int r = 0; r < p.n; ++r) {
        if (!ready) return std::nullopt;  // cyclic constraints at these levels
        int v = lowest_bit(ready);
        ready &= ~(vset(1) << v);
        rank_of[v] = r;
        for_bits(succ[v], [&](int w) {
          if (--indeg[w] == 0) ready |= vset(1) << w;
        });
      }
      std::vector<DPoint> img;
      for (int v = 0; v < p.n; ++v)
        img.emplace_back(PiRational(Rat(6 * (rank_of[v] + 1), p.n + 1)), level[v]);
      for (int u = 0; u < p.n; ++u)
        for (int v = 0; v < p.n; ++v)
          if (u != v && p.leq(u, v) != d_leq(img[u], img[v])) return std::nullopt;
      return img;
    }
    int v = order[idx];
    for (int l = -m; l <= m; ++l) {
      bool ok = true;
      for (int u = 0; u < p.n && ok; ++u) {
        if (!assigned[u]) continue;
        if (p.lt(u, v) && level[u] > l) ok = false;
        if (p.lt(v, u) && l > level[u]) ok = false;
        if (p.incomparable(u, v) && std::abs(level[u] - l) != 1) ok = false;
      }
      if (!ok) continue;
      level[v] = l;
      assigned[v] = 1;
      if (auto r = self(self, idx + 1)) return r;
      assigned[v] = 0;
    }
    return std::nullopt;
  };
  return try_levels(try_levels, 0);
}

}  // namespace detail

// Minimal m with P order-isomorphic to a subset of D(m), by iterative
// deepening. Requires width <= 2 and connected incomparability; the returned
// image is re-verified through d_leq before it leaves.
inline DEmbedding embed_into_D(const Poset& p) {
  if (p.n == 0) throw std::invalid_argument("empty poset");
  if (width(p) > 2) throw std::invalid_argument("width exceeds two");
  if (!is_connected(inc(p))) throw std::invalid_argument("incomparability must be connected");
  for (int m = 1; m <= p.n + 1; ++m)
    if (auto img = detail::embed_at_depth(p, m)) return {m, *img};
  throw std::logic_error("embedding search exceeded its level budget");
}

// ---- multichain lifts -----------------------------------------------------------
//
// D(m) restricted to C x [-m, m] for a chain C of first coordinates only
// depends on the order type of C, so every order-preserving injection f of C
// lifts to a local isomorphism (f, id). The check draws random injections
// and compares both order and incomparability across the lift.

struct MultichainReport {
  int trials = 0;
  int failures = 0;
  bool pass = true;
};

inline MultichainReport multichain_lift_check(const std::vector<Rat>& chain, int m, int trials,
                                              std::uint64_t seed = 20240817) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!(chain[i] < chain[i + 1])) throw std::invalid_argument("chain must be strictly increasing");
  int s = static_cast<int>(chain.size());
  auto point = [&](int i, int l) { return DPoint(PiRational(chain[i]), l); };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  MultichainReport rep;
  std::vector<int> all(s);
  for (int i = 0; i < s; ++i) all[i] = i;

  for (int t = 0; t < trials; ++t) {
    std::vector<int> domain, target;
    if (t == 0) {
      domain = all;  // identity lift first
      target = all;
    } else {
      for (int i = 0; i < s; ++i)
        if (coin(rng)) domain.push_back(i);
      if (domain.empty()) domain.push_back(int(rng() % s));
      std::vector<int> pool = all;
      std::shuffle(pool.begin(), pool.end(), rng);
      target.assign(pool.begin(), pool.begin() + domain.size());
      std::sort(target.begin(), target.end());
    }
    bool ok = true;
    for (std::size_t i = 0; i < domain.size() && ok; ++i)
      for (std::size_t j = 0; j < domain.size() && ok; ++j)
        for (int li = -m; li <= m && ok; ++li)
          for (int lj = -m; lj <= m && ok; ++lj) {
            if (i == j && li == lj) continue;
            DOrder before = d_compare(point(domain[i], li), point(domain[j], lj));
            DOrder after = d_compare(point(target[i], li), point(target[j], lj));
            if (before != after) ok = false;
          }
    ++rep.trials;
    if (!ok) {
      ++rep.failures;
      rep.pass = false;
    }
  }
  return rep;
}

}  // namespace width2
