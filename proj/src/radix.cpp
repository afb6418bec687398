#include "moser/radix.hpp"

namespace moser {

namespace {

void require_base(u64 base) {
  if (base < 2) throw std::domain_error("base must be at least 2");
}

}  // namespace

RadixExpansion expand(u64 n, u64 base) {
  require_base(base);
  RadixExpansion e;
  e.base = base;
  while (n > 0) {
    e.digits.push_back(n % base);
    n /= base;
  }
  return e;
}

u64 reassemble(const RadixExpansion& e) {
  require_base(e.base);
  if (!e.digits.empty() && e.digits.back() == 0)
    throw std::domain_error("expansion is not canonical: trailing zero digit");
  u64 acc = 0;
  u64 place = 1;
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (e.digits[i] >= e.base)
      throw std::domain_error("digit out of range for base");
    acc = checked_add(acc, checked_mul(e.digits[i], place));
    if (i + 1 < e.digits.size()) place = checked_mul(place, e.base);
  }
  return acc;
}

u64 valuation(u64 n, u64 base) {
  require_base(base);
  if (n == 0) throw std::domain_error("valuation is undefined for 0");
  u64 tau = 0;
  while (n % base == 0) {
    n /= base;
    ++tau;
  }
  return tau;
}

}  // namespace moser
