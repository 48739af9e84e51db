#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "width2/bichain.hpp"
#include "width2/graph.hpp"
#include "width2/poset.hpp"

namespace width2 {

// 128-bit relation code. Graphs use one bit per unordered pair, posets two
// bits per pair, both in the pair order (0,1),(0,2),(1,2),(0,3),...: the bits
// contributed when vertex k is appended involve only vertices placed before
// it, which makes the lexicographic minimum computable by branch and bound.
// Capacity: graphs to 16 vertices, posets to 11.
struct Code {
  std::uint64_t hi = 0, lo = 0;
  auto operator<=>(const Code&) const = default;
};

namespace detail {

struct CodeBuilder {
  Code c;
  int used = 0;
  void push_block(std::uint64_t blk, int bits) {
    for (int b = bits - 1; b >= 0; --b) {
      bool bit = (blk >> b) & 1;
      if (used < 64)
        c.hi |= std::uint64_t(bit) << (63 - used);
      else
        c.lo |= std::uint64_t(bit) << (127 - used);
      ++used;
    }
  }
};

// The lexicographic minimum must extend by a candidate whose next block is
// minimal, so only tied candidates branch. twin_pair[v] marks vertices whose
// swap with v is an automorphism; a tied candidate twinned with one already
// tried at this node spans an equal subtree and is skipped.
template <class Rel>
Code min_code(int n, int bits_per_pair, Rel&& rel, const std::vector<vset>& twin_pair) {
  std::vector<int> placed;
  placed.reserve(n);
  Code best;
  bool have_best = false;

  auto block_of = [&](int v) {
    std::uint64_t blk = 0;
    for (int j : placed)
      for (int b = bits_per_pair - 1; b >= 0; --b) blk = blk << 1 | ((rel(j, v) >> b) & 1);
    return blk;
  };

  auto rec = [&](auto&& self, vset unplaced, CodeBuilder cb) -> void {
    if (!unplaced) {
      if (!have_best || cb.c < best) {
        best = cb.c;
        have_best = true;
      }
      return;
    }
    std::uint64_t min_blk = ~std::uint64_t(0);
    std::vector<std::pair<int, std::uint64_t>> cands;
    for_bits(unplaced, [&](int v) {
      std::uint64_t blk = block_of(v);
      cands.emplace_back(v, blk);
      if (blk < min_blk) min_blk = blk;
    });
    vset tried = 0;
    int width_bits = static_cast<int>(placed.size()) * bits_per_pair;
    for (auto [v, blk] : cands) {
      if (blk != min_blk) continue;
      if (twin_pair[v] & tried) continue;
      tried |= vset(1) << v;
      CodeBuilder nb = cb;
      nb.push_block(blk, width_bits);
      placed.push_back(v);
      self(self, unplaced & ~(vset(1) << v), nb);
      placed.pop_back();
    }
  };
  rec(rec, full_set(n), CodeBuilder{});
  return best;
}

}  // namespace detail

inline Code canonical_code(const Graph& g) {
  if (g.n > 16) throw std::invalid_argument("canonical code limited to 16 vertices");
  std::vector<vset> twin(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      vset rest = full_set(g.n) & ~((vset(1) << u) | (vset(1) << v));
      if ((g.adj[u] & rest) == (g.adj[v] & rest)) {
        twin[u] |= vset(1) << v;
        twin[v] |= vset(1) << u;
      }
    }
  auto rel = [&](int u, int v) -> unsigned { return g.has_edge(u, v) ? 1u : 0u; };
  return detail::min_code(g.n, 1, rel, twin);
}

inline Code canonical_code(const Poset& p) {
  if (p.n > 11) throw std::invalid_argument("canonical code limited to 11 elements");
  std::vector<vset> twin(p.n, 0);
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v) {
      if (!p.incomparable(u, v)) continue;  // swapping a comparable pair never fixes the order
      bool same = true;
      for (int w = 0; w < p.n && same; ++w) {
        if (w == u || w == v) continue;
        same = p.leq(u, w) == p.leq(v, w) && p.leq(w, u) == p.leq(w, v);
      }
      if (same) {
        twin[u] |= vset(1) << v;
        twin[v] |= vset(1) << u;
      }
    }
  auto rel = [&](int u, int v) -> unsigned {
    return (p.leq(u, v) ? 2u : 0u) | (p.leq(v, u) ? 1u : 0u);
  };
  return detail::min_code(p.n, 2, rel, twin);
}

// Bichains are their own canonical form.
inline Code canonical_code(const Bichain& b) {
  Code c;
  for (size_t i = 0; i < b.sigma.size(); ++i) {
    if (i < 8)
      c.hi |= std::uint64_t(b.sigma[i] & 0xff) << (56 - 8 * i);
    else
      c.lo |= std::uint64_t(b.sigma[i] & 0xff) << (56 - 8 * (i - 8));
  }
  return c;
}

}  // namespace width2
