#include "moser/progressions.hpp"

#include <algorithm>
#include <unordered_set>

namespace moser {

namespace {

void require_even_target(u64 n) {
  if (n % 2 != 0 || n < 2)
    throw std::domain_error("target must be an even number >= 2");
}

// Distinct merged values <= limit (drops the duplicated 1).
std::vector<u64> distinct_t_values(u64 limit) {
  std::vector<u64> v = t_values_up_to(limit);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::pair<u64, u64>> value_pairs(u64 target,
                                             const std::vector<u64>& values) {
  std::unordered_set<u64> lookup(values.begin(), values.end());
  std::vector<std::pair<u64, u64>> pairs;
  for (u64 u : values) {
    if (u > target / 2) break;
    u64 v = target - u;
    if (v >= u && lookup.count(v)) pairs.emplace_back(u, v);
  }
  return pairs;
}

}  // namespace

DecompositionPair decompose_affine(u64 n, u64 a, u64 b) {
  if (a < 1 || b < 1)
    throw std::domain_error("affine parameters a, b must be positive");
  u64 head = checked_mul(3, a);
  if (n < head || (n - head) % (2 * b) != 0)
    throw std::domain_error("target is not a term of the progression 3a + 2bm");
  // s_k(a,b) + 2 s_l(a,b) = n collapses to s_k + 2 s_l = (n - 3a)/b + 3.
  DecompositionPair inner = decompose_s((n - head) / b + 3, 2);
  return {inner.k, inner.l, affine_family(a, b), 2};
}

bool congruence_refinement_check(u64 r, ModulusVariant variant, u64 bound) {
  if (r < 1) throw std::domain_error("refinement level r must be at least 1");
  if (bound < 3) throw std::domain_error("bound must be at least 3");
  u64 modulus = checked_pow(2, variant == ModulusVariant::EvenModulus ? 2 * r
                                                                      : 2 * r - 1);
  u64 family_b = variant == ModulusVariant::EvenModulus ? 2 : 1;
  u64 stride = checked_pow(2, r - 1);

  std::vector<u64> values;
  for (u64 j = 1;; ++j) {
    u64 index = checked_add(checked_mul(stride, j - 1), 1);
    u64 v = affine_s(index, 1, family_b);
    if (v > bound) break;
    values.push_back(v);
  }
  std::unordered_set<u64> lookup(values.begin(), values.end());

  for (u64 m = 3; m <= bound; m = checked_add(m, modulus)) {
    u64 representations = 0;
    for (u64 u : values) {
      if (u >= m) break;
      u64 rest = m - u;
      if (rest % 2 == 0 && lookup.count(rest / 2)) ++representations;
    }
    if (representations != 1) return false;
  }
  return true;
}

std::vector<u64> t_prefix(u64 count) { return t_family().prefix(count); }

std::vector<u64> t_values_up_to(u64 limit) {
  return t_family().values_up_to(limit);
}

RepresentationSet even_representations(u64 n, u64 cap) {
  require_even_target(n);
  if (cap < n) throw std::domain_error("cap must be at least the target");
  return {n, value_pairs(n, distinct_t_values(n))};
}

u64 v_term(u64 n, u64 search_cap, AvoidancePolicy policy) {
  if (n < 1) throw std::domain_error("index must be at least 1");
  if (search_cap < 2) throw std::domain_error("search cap must be at least 2");
  std::vector<u64> indexed = t_prefix(n);  // ensures t_n exists
  u64 forbidden_value = indexed.back();
  std::vector<u64> values = t_values_up_to(search_cap);

  auto representable = [&](u64 target) {
    for (std::size_t ki = 0; ki < values.size(); ++ki) {
      u64 u = values[ki];
      if (u > target / 2) break;
      for (std::size_t li = ki; li < values.size(); ++li) {
        u64 v = values[li];
        if (u + v > target) break;
        if (u + v != target) continue;
        switch (policy) {
          case AvoidancePolicy::Value:
            if (u != forbidden_value && v != forbidden_value) return true;
            break;
          case AvoidancePolicy::IndexAllowRepeat:
            if (ki + 1 != n && li + 1 != n) return true;
            break;
          case AvoidancePolicy::IndexDistinct:
            if (ki + 1 != n && li + 1 != n && ki != li) return true;
            break;
        }
      }
    }
    return false;
  };

  for (u64 target = 2; target <= search_cap; target += 2)
    if (!representable(target)) return target;
  throw std::runtime_error("search cap exhausted: every even number has an avoiding representation");
}

std::vector<u64> unique_evens(u64 bound) {
  if (bound < 2) throw std::domain_error("bound must be at least 2");
  std::vector<u64> values = distinct_t_values(bound);
  std::unordered_set<u64> lookup(values.begin(), values.end());
  std::vector<u64> out;
  for (u64 n = 2; n <= bound; n += 2) {
    u64 pairs = 0;
    for (u64 u : values) {
      if (u > n / 2) break;
      if (lookup.count(n - u) && ++pairs > 1) break;
    }
    if (pairs == 1) out.push_back(n);
  }
  return out;
}

DensityCounts unique_even_density(u64 bound) {
  if (bound < 2) throw std::domain_error("bound must be at least 2");
  return {static_cast<u64>(unique_evens(bound).size()), bound / 2};
}

}  // namespace moser
