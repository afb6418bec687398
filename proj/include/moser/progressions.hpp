#pragma once

#include <utility>
#include <vector>

#include "moser/decompose.hpp"

namespace moser {

/// The unique (k, l) with s_k(a,b) + 2 s_l(a,b) = n over the affine family.
/// Requires n to be a term 3a + 2bm of the progression, m >= 0.
DecompositionPair decompose_affine(u64 n, u64 a, u64 b);

enum class ModulusVariant { OddModulus, EvenModulus };

/// Exhaustively verifies, for every m <= bound with m == 3 (mod 2^(2r-1))
/// (odd variant, family (1,1)) or m == 3 (mod 2^(2r)) (even variant, family
/// (1,2)), that m has exactly one representation u + 2v with u, v values at
/// indices of the form 2^(r-1) (j-1) + 1.
bool congruence_refinement_check(u64 r, ModulusVariant variant, u64 bound);

/// First `count` terms of the nondecreasing merge of affine (1,1) and (1,2);
/// 1 appears twice.
std::vector<u64> t_prefix(u64 count);

/// Merged values <= limit.
std::vector<u64> t_values_up_to(u64 limit);

/// All unordered value pairs {u, v}, u <= v, with u + v = target and both
/// values in the merged sequence. {1,1} counts once.
struct RepresentationSet {
  u64 target;
  std::vector<std::pair<u64, u64>> pairs;  // ascending by first element
};

RepresentationSet even_representations(u64 n, u64 cap);

/// How "k, l differ from n" is read when searching forced even numbers.
enum class AvoidancePolicy {
  Value,             // forbid the value t_n; any remaining value may repeat
  IndexAllowRepeat,  // forbid index n; k may equal l
  IndexDistinct,     // forbid index n; also require k != l
};

/// Least even N whose every representation as a sum of two merged-sequence
/// values needs t_n, under the given policy. Throws when no such N exists
/// up to search_cap.
u64 v_term(u64 n, u64 search_cap, AvoidancePolicy policy = AvoidancePolicy::Value);

/// All even N <= bound with exactly one representation.
std::vector<u64> unique_evens(u64 bound);

struct DensityCounts {
  u64 uniques;
  u64 evens;
};

/// |unique_evens(bound)| over the number of evens <= bound. Reported only;
/// nothing is asserted about it.
DensityCounts unique_even_density(u64 bound);

}  // namespace moser
