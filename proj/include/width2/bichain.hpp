#pragma once

#include <stdexcept>
#include <vector>

#include "width2/poset.hpp"

namespace width2 {

// A bichain is a pair of linear orders on a common finite ground set, stored
// in canonical coordinates: the first order is the index order on 0..n-1 and
// the second order ranks i before j iff sigma[i] < sigma[j]. Isomorphisms of
// bichains must preserve the first order, hence are trivial: sigma itself is
// the canonical form.
struct Bichain {
  int n = 0;
  std::vector<int> sigma;

  Bichain() = default;
  explicit Bichain(std::vector<int> s) : n(static_cast<int>(s.size())), sigma(std::move(s)) {
    std::vector<char> seen(n, 0);
    for (int v : sigma) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("sigma is not a permutation");
      seen[v] = 1;
    }
  }

  bool leq1(int i, int j) const { return i <= j; }
  bool leq2(int i, int j) const { return sigma[i] <= sigma[j]; }

  bool operator==(const Bichain& o) const { return sigma == o.sigma; }
};

// Intersection order o(B): i <= j iff both linear orders agree.
inline Poset intersection_order(const Bichain& b) {
  Poset p(b.n);
  for (int i = 0; i < b.n; ++i)
    for (int j = i + 1; j < b.n; ++j)
      if (b.sigma[i] < b.sigma[j]) p.up[i] |= vset(1) << j;
  // index order is already transitive together with sigma comparisons
  return p;
}

// Transpose swaps the two orders; in canonical coordinates that inverts sigma.
inline Bichain transpose(const Bichain& b) {
  std::vector<int> inv(b.n);
  for (int i = 0; i < b.n; ++i) inv[b.sigma[i]] = i;
  return Bichain(inv);
}

// Dual reverses both orders; canonical coordinates reverse-complement sigma.
inline Bichain dual(const Bichain& b) {
  std::vector<int> s(b.n);
  for (int i = 0; i < b.n; ++i) s[i] = b.n - 1 - b.sigma[b.n - 1 - i];
  return Bichain(s);
}

// Pattern containment: does pi contain an increasing-position subsequence
// order-isomorphic to pattern?
inline bool contains_pattern(const std::vector<int>& pi, const std::vector<int>& pattern) {
  int k = static_cast<int>(pattern.size());
  int m = static_cast<int>(pi.size());
  if (k > m) return false;
  std::vector<int> pos(k, -1);
  auto rec = [&](auto&& self, int idx, int from) -> bool {
    if (idx == k) return true;
    for (int at = from; at <= m - (k - idx); ++at) {
      bool ok = true;
      for (int prev = 0; prev < idx && ok; ++prev)
        ok = (pattern[prev] < pattern[idx]) == (pi[pos[prev]] < pi[at]);
      if (!ok) continue;
      pos[idx] = at;
      if (self(self, idx + 1, at + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

inline bool avoids(const std::vector<int>& pi, const std::vector<int>& pattern) {
  return !contains_pattern(pi, pattern);
}

// Restriction of a bichain to a subset of positions, re-canonicalized.
inline Bichain induced_subbichain(const Bichain& b, vset positions) {
  std::vector<int> keep, vals;
  for_bits(positions, [&](int i) {
    keep.push_back(i);
    vals.push_back(b.sigma[i]);
  });
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> s(vals.size());
  for (size_t i = 0; i < vals.size(); ++i)
    s[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), vals[i]) - sorted.begin());
  return Bichain(s);
}

}  // namespace width2
