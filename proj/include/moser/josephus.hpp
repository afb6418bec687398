#pragma once

#include <vector>

#include "moser/decompose.hpp"

namespace moser {

enum class Direction { LeftToRight, RightToLeft };
enum class Action { Skip, Remove };

struct Elimination {
  Direction direction;  // direction of travel when the person was removed
  u64 person;
  bool operator==(const Elimination&) const = default;
};

/// Back-and-forth elimination on a line of persons 1..n. The walk starts at
/// person 1 moving right and alternates skip, remove, skip, remove without
/// ever resetting. Reaching the last remaining person in the current
/// direction reverses the walk, which continues with the next person inward;
/// the person at the end is visited exactly once per arrival.
class JosephusLine {
 public:
  explicit JosephusLine(u64 n);

  bool done() const { return remaining_ == 1; }
  u64 remaining() const { return remaining_; }
  Direction direction() const { return direction_; }
  Action next_action() const { return next_action_; }

  /// The remaining labels in line order.
  std::vector<u64> people() const;

  /// Advances to and performs the next removal.
  Elimination step();

  /// The lone survivor; requires done().
  u64 survivor() const;

 private:
  u64 neighbor(u64 person, Direction d) const {
    return d == Direction::LeftToRight ? next_[person] : prev_[person];
  }

  std::vector<u64> next_, prev_;  // 0 marks the ends of the line
  u64 current_ = 1;
  u64 leftmost_ = 1;
  u64 remaining_ = 0;
  Direction direction_ = Direction::LeftToRight;
  Action next_action_ = Action::Skip;
};

u64 simulate_survivor(u64 n);
u64 simulate_survivor(u64 n, std::vector<Elimination>& trace);

/// Survivor from the odd-position bits of the binary expansion of n
/// (n odd) or n - 1 (n even).
u64 survivor_closed(u64 n);

struct RecurrenceReport {
  u64 at_even;    // survivor for a line of 2m
  u64 at_odd;     // survivor for a line of 2m - 1
  u64 from_half;  // 2m + 1 - 2 * survivor(m)
  bool holds() const { return at_even == at_odd && at_odd == from_half; }
};
RecurrenceReport survivor_recurrence_check(u64 m);

/// (k, l) of the s decomposition of odd n >= 3, read off two survivors:
/// s_k = W(n - 2) and s_l = W((n - 1) / 2).
DecompositionPair decomposition_via_w(u64 n);

/// W(s_n - 2) for n >= 2; throws if it differs from s_{n-1}.
u64 w_step_down(u64 n);

/// Orbit of n under V(x) = W(x - 2), stopping at the first value <= 2.
/// The stop value is always 1 and the orbit walks the s sequence down.
std::vector<u64> v_iterate(u64 n);

/// For every N in [2, n_max], checks that the survivors W((s_n - 1) / 2)
/// sum to (s_N - 1) / 2 and that each summand is (4^(t+1) + 2) / 6 with
/// t the 2-adic valuation of n - 1.
bool half_step_sum_check(u64 n_max);

}  // namespace moser
