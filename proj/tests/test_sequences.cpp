#include <doctest.h>

#include <algorithm>

#include "moser/sequences.hpp"

using namespace moser;

namespace {

// Independent digit route: 1 + sum of digit[i] * r^(2i+1) over n - 1.
u64 s_digit_route(u64 n, u64 r) {
  RadixExpansion e = expand(n - 1, r);
  u64 acc = 1;
  u64 place = r;
  for (std::size_t i = 0; i < e.size(); ++i) {
    acc += e.digit(i) * place;
    place *= r * r;
  }
  return acc;
}

}  // namespace

TEST_CASE("moser digit formula") {
  CHECK(moser_term(27, 2) == 325);
  CHECK(moser_term(0, 7) == 0);
  CHECK(moser_term(4, 3) == 10);
  CHECK(moser_term(5, 2) == 17);
  CHECK(moser_term(3, 2) == 5);
  CHECK_THROWS_AS(moser_term(10, 1), std::domain_error);
  CHECK_THROWS_AS(moser_term(u64{1} << 62, 2), std::overflow_error);
}

TEST_CASE("moser_prefix equals the digit formula") {
  CHECK(moser_prefix(8, 2) == std::vector<u64>{0, 1, 4, 5, 16, 17, 20, 21});
  CHECK(moser_prefix(1, 9) == std::vector<u64>{0});
  CHECK(moser_prefix(5, 3) == std::vector<u64>{0, 1, 2, 9, 10});
  CHECK_THROWS_AS(moser_prefix(0, 2), std::domain_error);
  for (u64 r : {2, 3, 4, 5}) {
    std::vector<u64> prefix = moser_prefix(10'000, r);
    for (u64 n = 0; n < prefix.size(); ++n)
      if (prefix[n] != moser_term(n, r)) FAIL("recursion diverged at n=", n, " r=", r);
  }
}

TEST_CASE("s_term agrees with both closed routes") {
  CHECK(s_term(5, 2) == 33);
  for (u64 r = 2; r <= 7; ++r) CHECK(s_term(1, r) == 1);
  CHECK(s_term(3, 2) == 9);
  CHECK_THROWS_AS(s_term(0, 2), std::domain_error);
  for (u64 r : {2, 3, 4, 5}) {
    for (u64 n = 1; n <= 100'000; ++n)
      if (s_term(n, r) != s_digit_route(n, r))
        FAIL("digit route diverged at n=", n, " r=", r);
  }
}

TEST_CASE("s_prefix equals mapped s_term") {
  CHECK(s_prefix(8, 2) == std::vector<u64>{1, 3, 9, 11, 33, 35, 41, 43});
  CHECK(s_prefix(1, 5) == std::vector<u64>{1});
  CHECK(s_prefix(4, 3) == std::vector<u64>{1, 4, 7, 28});
  for (u64 r : {2, 3, 4, 5}) {
    std::vector<u64> prefix = s_prefix(100'000, r);
    for (u64 n = 1; n <= prefix.size(); ++n)
      if (prefix[n - 1] != s_term(n, r)) FAIL("s recursion diverged at n=", n, " r=", r);
  }
}

TEST_CASE("shifted family") {
  CHECK(shifted_a(0, 3) == 3);
  CHECK(shifted_a(3, 3) == 13);
  CHECK(shifted_a(2, 7) == 15);
  CHECK_THROWS_AS(shifted_a(1, 4), std::domain_error);
  CHECK_THROWS_AS(shifted_a(1, 1), std::domain_error);
}

TEST_CASE("affine family") {
  CHECK(affine_s(3, 1, 2) == 17);
  for (u64 a : {1, 2, 9})
    for (u64 b : {1, 3, 4}) CHECK(affine_s(1, a, b) == a);
  CHECK(affine_s(5, 1, 1) == 33);
  CHECK_THROWS_AS(affine_s(1, 0, 1), std::domain_error);
}

TEST_CASE("base-2 terms are sums of distinct powers of 4") {
  for (u64 n = 0; n <= 10'000; ++n) {
    u64 v = moser_term(n, 2);
    while (v > 0) {
      if (v % 4 > 1) FAIL("term with base-4 digit above 1 at n=", n);
      v /= 4;
    }
  }
}

TEST_CASE("every family is strictly increasing") {
  auto strictly_increasing = [](const std::vector<u64>& v) {
    return std::adjacent_find(v.begin(), v.end(),
                              [](u64 a, u64 b) { return a >= b; }) == v.end();
  };
  for (u64 r : {2, 3, 5}) {
    CHECK(strictly_increasing(moser_prefix(3000, r)));
    CHECK(strictly_increasing(s_prefix(3000, r)));
  }
  CHECK(strictly_increasing(shifted_family(5).prefix(3000)));
  CHECK(strictly_increasing(affine_family(2, 3).prefix(3000)));
}

TEST_CASE("term index inversion") {
  for (u64 r : {2, 3, 4}) {
    for (u64 n = 0; n <= 2000; ++n) {
      auto idx = moser_index(moser_term(n, r), r);
      REQUIRE(idx.has_value());
      CHECK(*idx == n);
    }
    for (u64 n = 1; n <= 2000; ++n) {
      auto idx = s_index(s_term(n, r), r);
      REQUIRE(idx.has_value());
      CHECK(*idx == n);
    }
  }
  CHECK_FALSE(moser_index(2, 2).has_value());
  CHECK_FALSE(moser_index(3, 2).has_value());
  CHECK_FALSE(s_index(2, 2).has_value());
  CHECK_FALSE(s_index(5, 2).has_value());
}

TEST_CASE("composite witnesses") {
  CHECK(composite_witnesses(3, 1) == std::vector<CompositeWitness>{{4, 35}});
  CHECK(composite_witnesses(9, 1) == std::vector<CompositeWitness>{{0, 9}});
  CHECK_THROWS_AS(composite_witnesses(3, 0), std::domain_error);
  std::vector<CompositeWitness> witnesses = composite_witnesses(3, 25);
  REQUIRE(witnesses.size() == 25);
  u64 previous_index = 0;
  for (const CompositeWitness& w : witnesses) {
    CHECK(w.value == shifted_a(w.index, 3));
    CHECK_FALSE(is_prime(w.value));
    if (&w != &witnesses.front()) CHECK(w.index > previous_index);
    previous_index = w.index;
  }
}

TEST_CASE("trial division primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(35));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(65535));
}

TEST_CASE("counting function") {
  CHECK(counting(43, 2) == 8);
  CHECK(counting(0, 2) == 0);
  CHECK(counting(33, 2) == 5);
  SUBCASE("matches a linear scan") {
    for (u64 r : {2, 3, 5}) {
      u64 scanned = 0;
      for (u64 x = 0; x <= 2000; ++x) {
        while (s_term(scanned + 1, r) <= x) ++scanned;
        CHECK(counting(x, r) == scanned);
      }
    }
  }
  SUBCASE("two-sided square-root growth") {
    for (u64 j = 0; j <= 15; ++j) {
      u64 x = checked_pow(4, j);
      u64 count = counting(x, 2);
      u64 root = checked_pow(2, j);
      CHECK(2 * count >= root);
      CHECK(count <= 2 * root);
    }
  }
}

TEST_CASE("power boundary") {
  PowerBoundary b = power_boundary(2, 2);
  CHECK(b.s_low == 11);
  CHECK(b.s_high == 33);
  b = power_boundary(2, 0);
  CHECK(b.s_low == 1);
  CHECK(b.s_high == 3);
  b = power_boundary(3, 1);
  CHECK(b.s_low == 7);
  CHECK(b.s_high == 28);
  for (u64 r : {2, 3, 4, 5}) {
    for (u64 t = 0; t <= 6; ++t) {
      PowerBoundary pb = power_boundary(r, t);
      CHECK(pb.s_high == (r + 1) * pb.s_low);
      CHECK(pb.s_low == s_term(checked_pow(r, t), r));
      CHECK(pb.s_high == s_term(checked_pow(r, t) + 1, r));
    }
  }
}

TEST_CASE("family descriptors") {
  CHECK(moser_family(3).value(4) == 10);
  CHECK(moser_family(2).first_index() == 0);
  CHECK(s_family(3).first_index() == 1);
  CHECK(s_family(3).mix() == 3);
  CHECK(shifted_family(7).value(2) == 15);
  CHECK(shifted_family(3).mix() == 2);
  CHECK(t_family().mix() == 1);
  CHECK(t_family().value(2) == 1);
  CHECK_THROWS_AS(shifted_family(4), std::domain_error);
  CHECK_THROWS_AS(moser_family(1), std::domain_error);
  CHECK_THROWS_AS(affine_family(0, 2), std::domain_error);

  SUBCASE("values_up_to matches prefix") {
    for (const SequenceFamily& family :
         {moser_family(2), s_family(3), shifted_family(5), affine_family(1, 2),
          t_family()}) {
      std::vector<u64> bounded = family.values_up_to(500);
      std::vector<u64> listed = family.prefix(bounded.size() + 1);
      REQUIRE(listed.size() == bounded.size() + 1);
      for (std::size_t i = 0; i < bounded.size(); ++i)
        CHECK(bounded[i] == listed[i]);
      CHECK(listed.back() > 500);
    }
  }
}
