#include "moser/decompose.hpp"

namespace moser {

namespace {

// Digits at even positions form one index, digits at odd positions the other.
std::pair<u64, u64> deinterleave(const RadixExpansion& e) {
  u64 even = 0, odd = 0;
  u64 place = 1;
  for (std::size_t i = 0; i < e.size(); i += 2) {
    even = checked_add(even, checked_mul(e.digit(i), place));
    if (i + 1 < e.size()) odd = checked_add(odd, checked_mul(e.digit(i + 1), place));
    if (i + 2 < e.size()) place = checked_mul(place, e.base);
  }
  return {even, odd};
}

}  // namespace

DecompositionPair decompose_moser(u64 n, u64 r) {
  auto [k, l] = deinterleave(expand(n, r));
  return {k, l, moser_family(r), r};
}

DecompositionPair decompose_s(u64 n, u64 r) {
  if (r < 2) throw std::domain_error("base parameter r must be at least 2");
  if (n < r + 1 || n % r != 1)
    throw std::domain_error("s decomposition needs n == 1 (mod r), n >= r+1");
  RadixExpansion e = expand(n - r, r);
  if (e.digit(0) != 1)
    throw std::logic_error("lowest digit of n - r is not 1");
  u64 k = 1, l = 1;
  u64 place = 1;
  for (std::size_t i = 0; 2 * i + 1 < e.size(); ++i) {
    k = checked_add(k, checked_mul(e.digit(2 * i + 1), place));
    if (2 * i + 2 < e.size())
      l = checked_add(l, checked_mul(e.digit(2 * i + 2), place));
    if (2 * i + 3 < e.size()) place = checked_mul(place, r);
  }
  return {k, l, s_family(r), r};
}

DecompositionPair decompose_shifted(u64 n, u64 c) {
  if (c < 3 || c % 2 == 0)
    throw std::domain_error("shift parameter c must be odd and at least 3");
  if (n % 2 == 0 || n < 3 * c)
    throw std::domain_error("shifted decomposition needs odd n >= 3c");
  DecompositionPair inner = decompose_moser((n - 3 * c) / 2, 2);
  return {inner.k, inner.l, shifted_family(c), 2};
}

std::vector<DecompositionPair> oracle_decompose(u64 n,
                                                const SequenceFamily& family,
                                                u64 mix) {
  if (mix < 1) throw std::domain_error("mix multiplier must be positive");
  std::vector<u64> values = family.values_up_to(n);
  u64 base_index = family.first_index();
  std::vector<DecompositionPair> found;
  for (std::size_t ki = 0; ki < values.size(); ++ki) {
    u64 rem = n - values[ki];
    if (rem % mix != 0) continue;
    u64 target = rem / mix;
    for (std::size_t li = 0; li < values.size(); ++li) {
      if (values[li] > target) break;
      if (values[li] == target)
        found.push_back({base_index + ki, base_index + li, family, mix});
    }
  }
  return found;
}

std::vector<DecompositionPair> oracle_decompose(u64 n,
                                                const SequenceFamily& family) {
  return oracle_decompose(n, family, family.mix());
}

}  // namespace moser
