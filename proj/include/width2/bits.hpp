#pragma once

#include <bit>
#include <cstdint>

namespace width2 {

// Vertex sets are uint64_t bitmasks throughout; structures are capped at
// 64 vertices and the enumeration helpers far below that.
using vset = std::uint64_t;

inline int popcount(vset s) { return std::popcount(s); }

inline int lowest_bit(vset s) { return std::countr_zero(s); }

inline vset full_set(int n) { return n >= 64 ? ~vset(0) : (vset(1) << n) - 1; }

inline bool has_bit(vset s, int i) { return (s >> i) & 1; }

// Calls f(i) for each member of s in increasing order.
template <class F>
inline void for_bits(vset s, F&& f) {
  while (s) {
    int i = std::countr_zero(s);
    f(i);
    s &= s - 1;
  }
}

}  // namespace width2
