#include "moser/sequences.hpp"

#include <algorithm>

namespace moser {

namespace {

void require_r(u64 r) {
  if (r < 2) throw std::domain_error("base parameter r must be at least 2");
}

void require_c(u64 c) {
  if (c < 3 || c % 2 == 0)
    throw std::domain_error("shift parameter c must be odd and at least 3");
}

void require_ab(u64 a, u64 b) {
  if (a < 1 || b < 1)
    throw std::domain_error("affine parameters a, b must be positive");
}

std::optional<u64> try_moser(u64 n, u64 r) noexcept {
  u64 acc = 0;
  u64 place = 1;
  while (n > 0) {
    u64 digit = n % r;
    n /= r;
    auto term = try_mul(digit, place);
    if (!term) return std::nullopt;
    auto sum = try_add(acc, *term);
    if (!sum) return std::nullopt;
    acc = *sum;
    if (n > 0) {
      auto next = try_mul(place, r);
      if (next) next = try_mul(*next, r);
      if (!next) return std::nullopt;
      place = *next;
    }
  }
  return acc;
}

std::optional<u64> try_s_term(u64 n, u64 r) noexcept {
  auto m = try_moser(n - 1, r);
  if (!m) return std::nullopt;
  auto scaled = try_mul(r, *m);
  if (!scaled) return std::nullopt;
  return try_add(*scaled, 1);
}

std::optional<u64> try_affine(u64 n, u64 a, u64 b) noexcept {
  auto s = try_s_term(n, 2);
  if (!s) return std::nullopt;
  auto scaled = try_mul(b, *s - 1);
  if (!scaled) return std::nullopt;
  return try_add(a, *scaled);
}

// nullopt sorts as +infinity
bool le(std::optional<u64> x, std::optional<u64> y) {
  if (!x) return false;
  if (!y) return true;
  return *x <= *y;
}

// Step increments of the two recursions. Both numerators are exact
// multiples of r + 1.
u64 moser_step(u64 n, u64 r) {
  u64 tau = valuation(n, r);
  return checked_add(checked_pow(r, 2 * tau + 1), 1) / (r + 1);
}

u64 s_step(u64 n, u64 r) {
  u64 t = valuation(n - 1, r);
  return checked_add(checked_pow(r, 2 * (t + 1)), r) / (r + 1);
}

}  // namespace

u64 moser_term(u64 n, u64 r) {
  require_r(r);
  if (auto v = try_moser(n, r)) return *v;
  throw std::overflow_error("moser term exceeds the 63-bit value range");
}

std::vector<u64> moser_prefix(u64 count, u64 r) {
  require_r(r);
  if (count < 1) throw std::domain_error("count must be at least 1");
  std::vector<u64> out;
  out.reserve(count);
  out.push_back(0);
  for (u64 n = 1; n < count; ++n)
    out.push_back(checked_add(out.back(), moser_step(n, r)));
  return out;
}

u64 s_term(u64 n, u64 r) {
  require_r(r);
  if (n < 1) throw std::domain_error("s sequence is 1-indexed");
  if (auto v = try_s_term(n, r)) return *v;
  throw std::overflow_error("s term exceeds the 63-bit value range");
}

std::vector<u64> s_prefix(u64 count, u64 r) {
  require_r(r);
  if (count < 1) throw std::domain_error("count must be at least 1");
  std::vector<u64> out;
  out.reserve(count);
  out.push_back(1);
  for (u64 n = 2; n <= count; ++n)
    out.push_back(checked_add(out.back(), s_step(n, r)));
  return out;
}

u64 shifted_a(u64 n, u64 c) {
  require_c(c);
  return checked_add(checked_mul(2, moser_term(n, 2)), c);
}

u64 affine_s(u64 n, u64 a, u64 b) {
  require_ab(a, b);
  return checked_add(a, checked_mul(b, s_term(n, 2) - 1));
}

std::optional<u64> moser_index(u64 value, u64 r) {
  require_r(r);
  // Terms are exactly the numbers whose base-r^2 digits stay below r;
  // reading those digits back in base r inverts the relocation.
  auto square = try_mul(r, r);
  u64 index = 0;
  u64 place = 1;
  while (value > 0) {
    u64 digit;
    if (square) {
      digit = value % *square;
      value /= *square;
    } else {
      digit = value;
      value = 0;
    }
    if (digit >= r) return std::nullopt;
    index = checked_add(index, checked_mul(digit, place));
    if (value > 0) place = checked_mul(place, r);
  }
  return index;
}

std::optional<u64> s_index(u64 value, u64 r) {
  require_r(r);
  if (value == 0 || (value - 1) % r != 0) return std::nullopt;
  auto inner = moser_index((value - 1) / r, r);
  if (!inner) return std::nullopt;
  return *inner + 1;
}

u64 counting(u64 x, u64 r) {
  require_r(r);
  if (x == 0) return 0;
  // s_n >= r*(n-1) + 1, so any index beyond (x-1)/r + 1 is out.
  u64 lo = 0;
  u64 hi = (x - 1) / r + 2;
  while (hi - lo > 1) {
    u64 mid = lo + (hi - lo) / 2;
    auto s = try_s_term(mid, r);
    if (s && *s <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

PowerBoundary power_boundary(u64 r, u64 t) {
  require_r(r);
  u64 high = checked_add(checked_pow(r, 2 * t + 1), 1);
  return {high / (r + 1), high};
}

bool is_prime(u64 v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (u64 d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

std::vector<CompositeWitness> composite_witnesses(u64 c, u64 count) {
  require_c(c);
  if (count < 1) throw std::domain_error("count must be at least 1");
  std::vector<CompositeWitness> out;
  out.reserve(count);
  constexpr u64 scan_limit = u64{1} << 24;
  for (u64 n = 0; out.size() < count; ++n) {
    if (n >= scan_limit)
      throw std::runtime_error("composite scan limit exhausted");
    u64 v = shifted_a(n, c);
    if (!is_prime(v)) out.push_back({n, v});
  }
  return out;
}

PrimeSplit prime_split(u64 c, u64 count) {
  require_c(c);
  if (count < 1) throw std::domain_error("count must be at least 1");
  PrimeSplit split;
  for (u64 n = 0; n < count; ++n) {
    if (is_prime(shifted_a(n, c)))
      ++split.primes;
    else
      ++split.composites;
  }
  return split;
}

u64 SequenceFamily::first_index() const {
  switch (kind_) {
    case FamilyKind::Moser:
    case FamilyKind::ShiftedA:
      return 0;
    default:
      return 1;
  }
}

u64 SequenceFamily::mix() const {
  switch (kind_) {
    case FamilyKind::Moser:
    case FamilyKind::S:
      return r_;
    case FamilyKind::ShiftedA:
    case FamilyKind::AffineS:
      return 2;
    case FamilyKind::TUnion:
      return 1;
  }
  throw std::logic_error("unreachable family kind");
}

u64 SequenceFamily::value(u64 index) const {
  switch (kind_) {
    case FamilyKind::Moser:
      return moser_term(index, r_);
    case FamilyKind::S:
      return s_term(index, r_);
    case FamilyKind::ShiftedA:
      return shifted_a(index, c_);
    case FamilyKind::AffineS:
      return affine_s(index, a_, b_);
    case FamilyKind::TUnion: {
      if (index < 1) throw std::domain_error("merged sequence is 1-indexed");
      return prefix(index).back();
    }
  }
  throw std::logic_error("unreachable family kind");
}

std::vector<u64> SequenceFamily::prefix(u64 count) const {
  if (count < 1) throw std::domain_error("count must be at least 1");
  switch (kind_) {
    case FamilyKind::Moser:
      return moser_prefix(count, r_);
    case FamilyKind::S:
      return s_prefix(count, r_);
    case FamilyKind::ShiftedA: {
      std::vector<u64> out = moser_prefix(count, 2);
      for (u64& v : out) v = checked_add(checked_mul(2, v), c_);
      return out;
    }
    case FamilyKind::AffineS: {
      std::vector<u64> out = s_prefix(count, 2);
      for (u64& v : out) v = checked_add(a_, checked_mul(b_, v - 1));
      return out;
    }
    case FamilyKind::TUnion: {
      // Nondecreasing merge of affine (1,1) and (1,2); 1 appears twice.
      std::vector<u64> out;
      out.reserve(count);
      u64 i = 1, j = 1;
      auto vi = try_affine(i, 1, 1), vj = try_affine(j, 1, 2);
      while (out.size() < count) {
        if (!vi && !vj)
          throw std::overflow_error("merged term exceeds the 63-bit value range");
        if (le(vi, vj)) {
          out.push_back(*vi);
          vi = try_affine(++i, 1, 1);
        } else {
          out.push_back(*vj);
          vj = try_affine(++j, 1, 2);
        }
      }
      return out;
    }
  }
  throw std::logic_error("unreachable family kind");
}

std::vector<u64> SequenceFamily::values_up_to(u64 limit) const {
  std::vector<u64> out;
  if (kind_ == FamilyKind::TUnion) {
    u64 i = 1, j = 1;
    auto vi = try_affine(i, 1, 1), vj = try_affine(j, 1, 2);
    for (;;) {
      auto v = le(vi, vj) ? vi : vj;
      if (!v || *v > limit) break;
      out.push_back(*v);
      if (le(vi, vj))
        vi = try_affine(++i, 1, 1);
      else
        vj = try_affine(++j, 1, 2);
    }
    return out;
  }
  for (u64 index = first_index();; ++index) {
    u64 v;
    try {
      v = value(index);
    } catch (const std::overflow_error&) {
      break;  // terms increase, so past the value range is past the limit
    }
    if (v > limit) break;
    out.push_back(v);
  }
  return out;
}

std::string SequenceFamily::name() const {
  switch (kind_) {
    case FamilyKind::Moser:
      return "moser_term(r=" + std::to_string(r_) + ")";
    case FamilyKind::S:
      return "s(r=" + std::to_string(r_) + ")";
    case FamilyKind::ShiftedA:
      return "shifted(c=" + std::to_string(c_) + ")";
    case FamilyKind::AffineS:
      return "affine(a=" + std::to_string(a_) + ",b=" + std::to_string(b_) + ")";
    case FamilyKind::TUnion:
      return "t";
  }
  throw std::logic_error("unreachable family kind");
}

SequenceFamily moser_family(u64 r) {
  require_r(r);
  return {FamilyKind::Moser, r, 3, 1, 1};
}

SequenceFamily s_family(u64 r) {
  require_r(r);
  return {FamilyKind::S, r, 3, 1, 1};
}

SequenceFamily shifted_family(u64 c) {
  require_c(c);
  return {FamilyKind::ShiftedA, 2, c, 1, 1};
}

SequenceFamily affine_family(u64 a, u64 b) {
  require_ab(a, b);
  return {FamilyKind::AffineS, 2, 3, a, b};
}

SequenceFamily t_family() { return {FamilyKind::TUnion, 2, 3, 1, 1}; }

}  // namespace moser
