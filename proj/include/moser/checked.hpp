#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace moser {

using u64 = std::uint64_t;

// Every quantity in this library lives in the 63-bit nonnegative range.
// Arithmetic that would leave it reports a range error instead of wrapping.
inline constexpr u64 value_max = (u64{1} << 63) - 1;

inline std::optional<u64> try_add(u64 a, u64 b) noexcept {
  u64 sum = a + b;
  if (sum < a || sum > value_max) return std::nullopt;
  return sum;
}

inline std::optional<u64> try_mul(u64 a, u64 b) noexcept {
  if (a != 0 && b > value_max / a) return std::nullopt;
  return a * b;
}

inline std::optional<u64> try_pow(u64 base, u64 exp) noexcept {
  u64 acc = 1;
  u64 square = base;
  for (;;) {
    if (exp & 1) {
      auto next = try_mul(acc, square);
      if (!next) return std::nullopt;
      acc = *next;
    }
    exp >>= 1;
    if (exp == 0) return acc;
    auto next = try_mul(square, square);
    if (!next) return std::nullopt;
    square = *next;
  }
}

inline u64 checked_add(u64 a, u64 b) {
  if (auto v = try_add(a, b)) return *v;
  throw std::overflow_error("addition exceeds the 63-bit value range");
}

inline u64 checked_mul(u64 a, u64 b) {
  if (auto v = try_mul(a, b)) return *v;
  throw std::overflow_error("multiplication exceeds the 63-bit value range");
}

inline u64 checked_pow(u64 base, u64 exp) {
  if (auto v = try_pow(base, exp)) return *v;
  throw std::overflow_error("power exceeds the 63-bit value range");
}

}  // namespace moser
