#pragma once

#include <utility>
#include <vector>

#include "moser/decompose.hpp"

namespace moser {

/// The index pair of the unique s decomposition s_k + 2 s_l = n of an odd
/// number n > 1.
struct OddCoordinates {
  u64 n;
  u64 k;
  u64 l;
  bool operator==(const OddCoordinates&) const = default;
};

OddCoordinates coordinates(u64 n);  // odd n >= 3

/// Two odd numbers > 1 are collinear when they share the k or the l
/// coordinate. 1 is collinear to nothing.
bool collinear(u64 m, u64 n);

/// Number of odd i < n not collinear to n; psi(1) = 0.
u64 psi(u64 n);

/// (n, psi(n)) for every odd n <= max_n, computed in one shared sweep.
/// `jobs` parallelizes the coordinate phase; the result is identical for
/// any job count.
std::vector<std::pair<u64, u64>> psi_sweep(u64 max_n, unsigned jobs = 1);

/// psi(4m - 1) == psi(4m + 1).
bool psi_pair_check(u64 m);

}  // namespace moser
