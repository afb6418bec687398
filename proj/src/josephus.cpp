#include "moser/josephus.hpp"

namespace moser {

namespace {

Direction opposite(Direction d) {
  return d == Direction::LeftToRight ? Direction::RightToLeft
                                     : Direction::LeftToRight;
}

}  // namespace

JosephusLine::JosephusLine(u64 n) : remaining_(n) {
  if (n == 0) throw std::domain_error("the line needs at least one person");
  next_.resize(n + 1);
  prev_.resize(n + 1);
  for (u64 p = 1; p <= n; ++p) {
    next_[p] = p < n ? p + 1 : 0;
    prev_[p] = p - 1;
  }
}

Elimination JosephusLine::step() {
  if (done()) throw std::logic_error("line already reduced to a survivor");
  for (;;) {
    bool at_end = neighbor(current_, direction_) == 0;
    if (next_action_ == Action::Remove) {
      Direction travel = direction_;
      u64 removed = current_;
      u64 forward = next_[current_];
      u64 backward = prev_[current_];
      if (forward != 0) prev_[forward] = backward;
      if (backward != 0) next_[backward] = forward;
      if (removed == leftmost_) leftmost_ = forward;
      --remaining_;
      next_action_ = Action::Skip;
      if (remaining_ == 1) {
        current_ = forward != 0 ? forward : backward;
      } else {
        if (at_end) direction_ = opposite(direction_);
        current_ = direction_ == Direction::LeftToRight ? forward : backward;
      }
      return {travel, removed};
    }
    next_action_ = Action::Remove;
    if (at_end) direction_ = opposite(direction_);
    current_ = neighbor(current_, direction_);
  }
}

u64 JosephusLine::survivor() const {
  if (!done()) throw std::logic_error("more than one person remains");
  return current_;
}

std::vector<u64> JosephusLine::people() const {
  std::vector<u64> labels;
  labels.reserve(remaining_);
  for (u64 p = leftmost_; p != 0; p = next_[p]) labels.push_back(p);
  return labels;
}

u64 simulate_survivor(u64 n) {
  JosephusLine line(n);
  while (!line.done()) line.step();
  return line.survivor();
}

u64 simulate_survivor(u64 n, std::vector<Elimination>& trace) {
  JosephusLine line(n);
  trace.clear();
  while (!line.done()) trace.push_back(line.step());
  return line.survivor();
}

u64 survivor_closed(u64 n) {
  if (n == 0) throw std::domain_error("the line needs at least one person");
  u64 m = n % 2 == 1 ? n : n - 1;
  u64 w = 1;
  for (unsigned j = 1; (u64{1} << j) <= m; j += 2)
    if ((m >> j) & 1) w += u64{1} << j;
  return w;
}

RecurrenceReport survivor_recurrence_check(u64 m) {
  if (m < 1) throw std::domain_error("m must be at least 1");
  u64 two_m = checked_mul(2, m);
  return {survivor_closed(two_m), survivor_closed(two_m - 1),
          checked_add(two_m, 1) - 2 * survivor_closed(m)};
}

DecompositionPair decomposition_via_w(u64 n) {
  if (n % 2 == 0 || n < 3)
    throw std::domain_error("decomposition needs odd n >= 3");
  u64 sk = survivor_closed(n - 2);
  u64 sl = survivor_closed((n - 1) / 2);
  auto k = s_index(sk, 2);
  auto l = s_index(sl, 2);
  if (!k || !l)
    throw std::logic_error("survivor value is not an s term");
  return {*k, *l, s_family(2), 2};
}

u64 w_step_down(u64 n) {
  if (n < 2) throw std::domain_error("step down needs n >= 2");
  u64 w = survivor_closed(s_term(n, 2) - 2);
  if (w != s_term(n - 1, 2))
    throw std::logic_error("survivor does not step the s sequence down");
  return w;
}

std::vector<u64> v_iterate(u64 n) {
  if (n < 3) throw std::domain_error("iteration needs n >= 3");
  // The orbit can only walk the s sequence downward, so its length is
  // bounded by the number of s terms below n.
  u64 cap = counting(n, 2) + 2;
  std::vector<u64> orbit;
  u64 x = n;
  for (;;) {
    if (orbit.size() > cap)
      throw std::runtime_error("iteration exceeded the descent bound");
    x = survivor_closed(x - 2);
    orbit.push_back(x);
    if (x <= 2) return orbit;
  }
}

bool half_step_sum_check(u64 n_max) {
  if (n_max < 2) throw std::domain_error("n_max must be at least 2");
  std::vector<u64> s = s_prefix(n_max, 2);
  u64 sum = 0;
  for (u64 n = 2; n <= n_max; ++n) {
    u64 w = survivor_closed((s[n - 1] - 1) / 2);
    u64 t = valuation(n - 1, 2);
    if (w != (checked_pow(4, t + 1) + 2) / 6) return false;
    sum = checked_add(sum, w);
    if (sum != (s[n - 1] - 1) / 2) return false;
  }
  return true;
}

}  // namespace moser
