#pragma once

#include <vector>

#include "moser/sequences.hpp"

namespace moser {

/// One solution (k, l) of value(k) + mix * value(l) = target over a family.
struct DecompositionPair {
  u64 k;
  u64 l;
  SequenceFamily family;
  u64 mix;

  u64 recombine() const {
    return checked_add(family.value(k), checked_mul(mix, family.value(l)));
  }
  bool indices_equal(u64 ek, u64 el) const { return k == ek && l == el; }
};

/// The unique (k, l) with m_r(k) + r * m_r(l) = n, by digit de-interleaving.
DecompositionPair decompose_moser(u64 n, u64 r);

/// The unique (k, l), both >= 1, with s_k + r * s_l = n.
/// Requires n == 1 (mod r) and n >= r + 1.
DecompositionPair decompose_s(u64 n, u64 r);

/// The unique (k, l) with a_c(k) + 2 * a_c(l) = n for odd n >= 3c.
DecompositionPair decompose_shifted(u64 n, u64 c);

/// Every ordered pair (k, l) with value(k) + mix * value(l) = n, found by an
/// exhaustive double scan of family values up to n. Independent of the digit
/// solvers; used to certify existence and uniqueness.
std::vector<DecompositionPair> oracle_decompose(u64 n,
                                                const SequenceFamily& family,
                                                u64 mix);

/// Same, with the family's own mix multiplier.
std::vector<DecompositionPair> oracle_decompose(u64 n,
                                                const SequenceFamily& family);

}  // namespace moser
