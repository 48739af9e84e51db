#pragma once

#include <vector>

#include "width2/bichain.hpp"
#include "width2/embedding.hpp"
#include "width2/modules.hpp"
#include "width2/poset.hpp"
#include "width2/realizer.hpp"

namespace width2 {

// ---- embedding equivalences ----------------------------------------------
//
// Three bridges between order embeddings, graph embeddings and permutation
// patterns. Each audit returns true when the advertised equivalence holds for
// the given pair; the test suite sweeps them over enumerated inputs.

inline bool proper_modules_all_chains(const Poset& p) {
  for (vset m : modules_of(p)) {
    if (popcount(m) < 2 || m == full_set(p.n)) continue;
    if (!is_chain(p, m)) return false;
  }
  return true;
}

// For a pattern whose proper modules are chains: embedding into Q or its dual
// is the same as a comparability-graph embedding, which in turn matches an
// incomparability-graph embedding.
inline bool chain_modules_equivalence_audit(const Poset& p, const Poset& q) {
  bool order_side = embeds(p, q, {true, false}).has_value();
  bool comp_side = embeds(comp(p), comp(q)).has_value();
  bool inc_side = embeds(inc(p), inc(q)).has_value();
  return order_side == comp_side && comp_side == inc_side;
}

// For uniquely realizable posets: order embedding matches pattern containment
// of the carried permutations, up to transposing the target.
inline bool unique_realizer_equivalence_audit(const Poset& p, const Poset& q) {
  bool order_side = embeds(p, q, {false, false}).has_value();
  Bichain bp = bichain_of_uniquely_realizable(p);
  Bichain bq = bichain_of_uniquely_realizable(q);
  bool pattern_side = contains_pattern(bq.sigma, bp.sigma) ||
                      contains_pattern(transpose(bq).sigma, bp.sigma);
  return order_side == pattern_side;
}

// Primality transfers between a bichain and its intersection order.
inline bool prime_correspondence_audit(const Bichain& b) {
  return is_prime(b) == is_prime(intersection_order(b));
}

}  // namespace width2
