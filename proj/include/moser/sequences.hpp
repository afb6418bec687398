#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moser/radix.hpp"

namespace moser {

/// m_r(n), 0-indexed: relocate the base-r digits of n to even power
/// positions, i.e. sum of digit[i] * r^(2i).
u64 moser_term(u64 n, u64 r);

/// First `count` values m_r(0..count-1) via the incremental recursion
/// driven by the r-adic valuation of the index.
std::vector<u64> moser_prefix(u64 count, u64 r);

/// s_n = r * m_r(n-1) + 1, 1-indexed.
u64 s_term(u64 n, u64 r);

/// [s_1, ..., s_count] via the incremental recursion.
std::vector<u64> s_prefix(u64 count, u64 r);

/// a_c(n) = 2 * m_2(n) + c for odd c >= 3; 0-indexed.
u64 shifted_a(u64 n, u64 c);

/// s_n(a, b) = a + b * (s_n - 1) over the base-2 s sequence; 1-indexed.
u64 affine_s(u64 n, u64 a, u64 b);

/// Index n with moser_term(n, r) == value, when value is a term.
std::optional<u64> moser_index(u64 value, u64 r);

/// Index n with s_term(n, r) == value, when value is a term.
std::optional<u64> s_index(u64 value, u64 r);

/// Number of indices n >= 1 with s_n <= x.
u64 counting(u64 x, u64 r);

struct PowerBoundary {
  u64 s_low;   // s at index r^t, equals (r^(2t+1) + 1) / (r + 1)
  u64 s_high;  // s at index r^t + 1, equals r^(2t+1) + 1
};

/// The two s terms straddling index r^t; s_high is exactly (r+1) * s_low.
PowerBoundary power_boundary(u64 r, u64 t);

/// Deterministic trial division.
bool is_prime(u64 v);

struct CompositeWitness {
  u64 index;
  u64 value;
  bool operator==(const CompositeWitness&) const = default;
};

/// First `count` composite values of a_c, ascending by index.
std::vector<CompositeWitness> composite_witnesses(u64 c, u64 count);

struct PrimeSplit {
  u64 primes = 0;
  u64 composites = 0;
};

/// Primality tally over a_c(0..count-1).
PrimeSplit prime_split(u64 c, u64 count);

enum class FamilyKind { Moser, S, ShiftedA, AffineS, TUnion };

/// Descriptor of one generated sequence. Parameters are validated on
/// construction; all generation goes through value()/prefix()/values_up_to().
class SequenceFamily {
 public:
  FamilyKind kind() const { return kind_; }
  u64 r() const { return r_; }
  u64 c() const { return c_; }
  u64 a() const { return a_; }
  u64 b() const { return b_; }

  /// Index of the first term: 0 for Moser and ShiftedA, 1 otherwise.
  u64 first_index() const;

  /// Multiplier in the family's two-term representation value(k) + mix * value(l).
  u64 mix() const;

  u64 value(u64 index) const;
  std::vector<u64> prefix(u64 count) const;
  std::vector<u64> values_up_to(u64 limit) const;  // nondecreasing, <= limit

  std::string name() const;

  bool operator==(const SequenceFamily&) const = default;

 private:
  SequenceFamily(FamilyKind kind, u64 r, u64 c, u64 a, u64 b)
      : kind_(kind), r_(r), c_(c), a_(a), b_(b) {}

  friend SequenceFamily moser_family(u64 r);
  friend SequenceFamily s_family(u64 r);
  friend SequenceFamily shifted_family(u64 c);
  friend SequenceFamily affine_family(u64 a, u64 b);
  friend SequenceFamily t_family();

  FamilyKind kind_;
  u64 r_;
  u64 c_;
  u64 a_;
  u64 b_;
};

SequenceFamily moser_family(u64 r);
SequenceFamily s_family(u64 r);
SequenceFamily shifted_family(u64 c);  // c odd, c >= 3; fixed to base 2
SequenceFamily affine_family(u64 a, u64 b);
SequenceFamily t_family();  // merge of affine (1,1) and (1,2), 1 doubled

}  // namespace moser
