#pragma once

#include <cstddef>
#include <vector>

#include "moser/checked.hpp"

namespace moser {

/// Positional expansion of a nonnegative integer, least significant digit
/// first. Canonical form: no trailing zero digit; zero has an empty list.
struct RadixExpansion {
  u64 base = 2;
  std::vector<u64> digits;

  u64 digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
  std::size_t size() const { return digits.size(); }
};

RadixExpansion expand(u64 n, u64 base);

/// Sum of digit[i] * base^i. Rejects non-canonical or out-of-range digits.
u64 reassemble(const RadixExpansion& e);

/// Largest tau with base^tau dividing n. Requires n >= 1.
u64 valuation(u64 n, u64 base);

}  // namespace moser
