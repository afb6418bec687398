#include "moser/collinearity.hpp"

#include <thread>

namespace moser {

namespace {

void require_odd(u64 n) {
  if (n % 2 == 0) throw std::domain_error("argument must be odd");
}

// Coordinates of every odd i in [3, max_n], in ascending order.
std::vector<OddCoordinates> coordinate_table(u64 max_n, unsigned jobs) {
  std::vector<OddCoordinates> table;
  if (max_n < 3) return table;
  u64 entries = (max_n - 3) / 2 + 1;
  table.resize(entries);
  auto fill = [&table](u64 begin, u64 end) {
    for (u64 idx = begin; idx < end; ++idx) {
      u64 n = 3 + 2 * idx;
      DecompositionPair p = decompose_s(n, 2);
      table[idx] = {n, p.k, p.l};
    }
  };
  if (jobs <= 1 || entries < 2 * jobs) {
    fill(0, entries);
    return table;
  }
  std::vector<std::thread> workers;
  u64 chunk = entries / jobs + 1;
  for (unsigned w = 0; w < jobs; ++w) {
    u64 begin = w * chunk;
    u64 end = std::min(entries, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back(fill, begin, end);
  }
  for (std::thread& t : workers) t.join();
  return table;
}

}  // namespace

OddCoordinates coordinates(u64 n) {
  require_odd(n);
  if (n < 3) throw std::domain_error("coordinates need odd n >= 3");
  DecompositionPair p = decompose_s(n, 2);
  return {n, p.k, p.l};
}

bool collinear(u64 m, u64 n) {
  require_odd(m);
  require_odd(n);
  if (m == 1 || n == 1) return false;
  OddCoordinates cm = coordinates(m);
  OddCoordinates cn = coordinates(n);
  return cm.k == cn.k || cm.l == cn.l;
}

u64 psi(u64 n) {
  require_odd(n);
  if (n == 1) return 0;
  OddCoordinates target = coordinates(n);
  u64 count = 1;  // i = 1 is never collinear
  for (u64 i = 3; i < n; i += 2) {
    OddCoordinates ci = coordinates(i);
    if (ci.k != target.k && ci.l != target.l) ++count;
  }
  return count;
}

std::vector<std::pair<u64, u64>> psi_sweep(u64 max_n, unsigned jobs) {
  std::vector<std::pair<u64, u64>> out;
  if (max_n < 1) return out;
  out.reserve(max_n / 2 + 1);
  out.emplace_back(1, 0);
  std::vector<OddCoordinates> table = coordinate_table(max_n, jobs);

  // Coordinates determine i uniquely, so for ascending n the collinear
  // predecessors are counted exactly by the two per-coordinate tallies.
  u64 index_bound = max_n >= 3 ? counting(max_n, 2) + 2 : 2;
  std::vector<u64> seen_k(index_bound, 0), seen_l(index_bound, 0);
  for (const OddCoordinates& c : table) {
    u64 odd_below = (c.n - 1) / 2;
    out.emplace_back(c.n, odd_below - seen_k[c.k] - seen_l[c.l]);
    ++seen_k[c.k];
    ++seen_l[c.l];
  }
  return out;
}

bool psi_pair_check(u64 m) {
  if (m < 1) throw std::domain_error("m must be at least 1");
  u64 high = checked_add(checked_mul(4, m), 1);
  return psi(high - 2) == psi(high);
}

}  // namespace moser
