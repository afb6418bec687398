#pragma once

#include <vector>

#include "moser/decompose.hpp"

namespace moser {

struct LatticePoint {
  u64 k;
  u64 l;
  bool operator==(const LatticePoint&) const = default;
};

/// Coordinates of n in the square [1, r^t] x [1, r^t]; n must satisfy
/// n == 1 (mod r) and r + 1 <= n <= r^(2t+1) + 1.
LatticePoint to_lattice(u64 n, u64 r, u64 t);

/// Inverse map: s_k + r * s_l.
u64 from_lattice(LatticePoint p, u64 r);

enum class PathObjective { Min, Max };

struct PathResult {
  std::vector<u64> sequence;  // the visited numbers, in walk order
  double length;
  double tolerance;  // length comparisons use this tolerance
};

/// Exhaustive open-path optimum over all orders of the square's points.
/// Ties break to the lexicographically least number sequence. The square
/// may hold at most 10 points.
PathResult path_tsp(u64 r, u64 t, PathObjective objective);

}  // namespace moser
