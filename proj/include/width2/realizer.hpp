#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "width2/bichain.hpp"
#include "width2/graph.hpp"
#include "width2/modules.hpp"
#include "width2/poset.hpp"
#include "width2/recognition.hpp"

namespace width2 {

// ---- realizers -----------------------------------------------------------
//
// A realizer pair is an unordered pair of linear extensions whose
// intersection is the poset. A chain keeps its single extension, paired with
// itself. Limited to n <= 8 so a linear order fits one relation mask.

struct RealizerPair {
  std::vector<int> first, second;  // linear orders, smallest element first
};

inline std::vector<RealizerPair> realizers(const Poset& p) {
  if (p.n > 8) throw std::invalid_argument("realizer scan limited to 8 elements");
  std::vector<std::vector<int>> exts = linear_extensions(p);
  std::vector<std::uint64_t> masks;
  masks.reserve(exts.size());
  for (const auto& e : exts) masks.push_back(linear_order_mask(e));
  std::uint64_t target = relation_mask(p);
  std::vector<RealizerPair> out;
  for (std::size_t i = 0; i < exts.size(); ++i)
    for (std::size_t j = i; j < exts.size(); ++j)
      if ((masks[i] & masks[j]) == target) out.push_back({exts[i], exts[j]});
  return out;
}

inline bool has_dimension_at_most_two(const Poset& p) {
  return first_transitive_orientation(inc(p)).has_value();
}

inline bool is_uniquely_realizable(const Poset& p) { return realizers(p).size() == 1; }

// Structural criterion for unique realizability: at most one incomparability
// component has more than one vertex, and every proper module of the poset
// induced on that component is totally ordered.
inline bool unique_realizability_criterion(const Poset& p) {
  if (!has_dimension_at_most_two(p)) return false;
  Graph g = inc(p);
  std::vector<vset> comps = components(g);
  vset big = 0;
  int big_count = 0;
  for (vset c : comps)
    if (popcount(c) >= 2) {
      big = c;
      ++big_count;
    }
  if (big_count == 0) return true;  // chain
  if (big_count >= 2) return false;
  Poset q = induced_subposet(p, big);
  for (vset m : modules_of(q)) {
    if (popcount(m) < 2 || m == full_set(q.n)) continue;
    if (!is_chain(q, m)) return false;
  }
  return true;
}

// Bichain with intersection order p, built from one transitive orientation q
// of inc(p): the linear extensions p + q and p + dual(q) intersect in exactly
// p, so positions come from the first and sigma values from the second.
// Works at any size, unlike the realizer scan.
inline Bichain bichain_from_orientation(const Poset& p, const Poset& q) {
  if (q.n != p.n) throw std::invalid_argument("orientation size mismatch");
  Poset l1(p.n), l2(p.n);
  for (int u = 0; u < p.n; ++u) {
    l1.up[u] = p.up[u] | q.up[u];
    l2.up[u] = p.up[u];
  }
  Poset qd = dual(q);
  for (int u = 0; u < p.n; ++u) l2.up[u] |= qd.up[u];
  if (!is_valid_poset(l1) || !is_valid_poset(l2))
    throw std::invalid_argument("not an orientation of the incomparability graph");
  for (int u = 0; u < p.n; ++u)
    for (int v = 0; v < p.n; ++v)
      if (!l1.leq(u, v) && !l1.leq(v, u))
        throw std::invalid_argument("orientation misses an incomparable pair");
  std::vector<int> pos(p.n, 0), val(p.n, 0);
  for (int v = 0; v < p.n; ++v) {
    pos[v] = popcount(l1.strict_down(v));
    val[v] = popcount(l2.strict_down(v));
  }
  std::vector<int> sigma(p.n);
  for (int v = 0; v < p.n; ++v) sigma[pos[v]] = val[v];
  return Bichain(sigma);
}

// Bichain carried by a width-two poset with a single realizer pair. The pair
// orders first = positions, second = sigma values; the lexicographically
// smaller of sigma and its inverse is taken so the answer does not depend on
// which side of the pair came first.
inline Bichain bichain_of_uniquely_realizable(const Poset& p) {
  std::vector<RealizerPair> rs = realizers(p);
  if (rs.size() != 1) throw std::invalid_argument("poset is not uniquely realizable");
  const RealizerPair& r = rs.front();
  std::vector<int> pos(p.n), val(p.n);
  for (int k = 0; k < p.n; ++k) pos[r.first[k]] = k;
  for (int k = 0; k < p.n; ++k) val[r.second[k]] = k;
  std::vector<int> sigma(p.n);
  for (int v = 0; v < p.n; ++v) sigma[pos[v]] = val[v];
  Bichain b(sigma);
  Bichain t = transpose(b);
  return t.sigma < b.sigma ? t : b;
}

}  // namespace width2
