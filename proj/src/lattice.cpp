#include "moser/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace moser {

LatticePoint to_lattice(u64 n, u64 r, u64 t) {
  u64 top = checked_add(checked_pow(r, 2 * t + 1), 1);
  if (n < r + 1 || n > top || n % r != 1)
    throw std::domain_error("number lies outside the mapped interval");
  DecompositionPair p = decompose_s(n, r);
  return {p.k, p.l};
}

u64 from_lattice(LatticePoint p, u64 r) {
  if (p.k < 1 || p.l < 1)
    throw std::domain_error("lattice coordinates start at 1");
  return checked_add(s_term(p.k, r), checked_mul(r, s_term(p.l, r)));
}

PathResult path_tsp(u64 r, u64 t, PathObjective objective) {
  constexpr double tolerance = 1e-9;
  u64 points = checked_pow(r, 2 * t);
  if (points > 10)
    throw std::domain_error("instance too large for exhaustive search");

  std::vector<u64> numbers;
  std::vector<std::pair<double, double>> coords;
  u64 top = checked_add(checked_pow(r, 2 * t + 1), 1);
  for (u64 n = r + 1; n <= top; n += r) {
    LatticePoint p = to_lattice(n, r, t);
    numbers.push_back(n);
    coords.emplace_back(static_cast<double>(p.k), static_cast<double>(p.l));
  }

  std::vector<std::size_t> order(numbers.size());
  std::iota(order.begin(), order.end(), 0);
  auto path_length = [&](const std::vector<std::size_t>& perm) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
      len += std::hypot(coords[perm[i]].first - coords[perm[i + 1]].first,
                        coords[perm[i]].second - coords[perm[i + 1]].second);
    return len;
  };

  // numbers is ascending, so std::next_permutation walks candidate paths in
  // lexicographic order of the number sequence; the first optimum seen wins.
  std::vector<std::size_t> best = order;
  double best_length = path_length(order);
  while (std::next_permutation(order.begin(), order.end())) {
    double len = path_length(order);
    bool better = objective == PathObjective::Min ? len < best_length - tolerance
                                                  : len > best_length + tolerance;
    if (better) {
      best = order;
      best_length = len;
    }
  }

  PathResult result;
  result.length = best_length;
  result.tolerance = tolerance;
  for (std::size_t i : best) result.sequence.push_back(numbers[i]);
  return result;
}

}  // namespace moser
