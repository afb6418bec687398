// Acceptance suite: one numbered end-to-end check per line, each with its
// stated exactness and time budget pinned in code. Run with no arguments for
// all checks or with `--criterion N` for one.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "moser/cli.hpp"
#include "moser/collinearity.hpp"
#include "moser/fixtures.hpp"
#include "moser/josephus.hpp"
#include "moser/lattice.hpp"
#include "moser/progressions.hpp"

using namespace moser;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& message) {
    if (ok) {
      ok = false;
      detail = message;
    }
  }
};

std::string joined(const std::vector<u64>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

// 1: the first 18 base-2 Moser terms match the reference list, in under 1 ms.
Outcome criterion1() {
  Outcome result;
  const std::vector<u64> expected = {0,  1,  4,  5,  16, 17, 20, 21, 64,
                                     65, 68, 69, 80, 81, 84, 85, 256, 257};
  auto start = std::chrono::steady_clock::now();
  std::vector<u64> got = moser_prefix(18, 2);
  auto elapsed = std::chrono::steady_clock::now() - start;
  if (got != expected) result.fail("prefix is [" + joined(got) + "]");
  if (elapsed > std::chrono::milliseconds(1)) result.fail("exceeded 1 ms");
  return result;
}

// 2: digit formula and recursion agree for r in {2,3,4,5}, n up to 1e5.
Outcome criterion2() {
  Outcome result;
  for (u64 r : {2, 3, 4, 5}) {
    std::vector<u64> prefix = moser_prefix(100'001, r);
    for (u64 n = 0; n <= 100'000; ++n) {
      if (prefix[n] != moser_term(n, r)) {
        result.fail("divergence at r=" + std::to_string(r) +
                    " n=" + std::to_string(n));
        return result;
      }
    }
  }
  return result;
}

// 3: the exhaustive scan finds exactly one pair everywhere, matching the
// digit solvers.
Outcome criterion3() {
  Outcome result;
  for (u64 r : {2, 3, 4, 5}) {
    SequenceFamily family = moser_family(r);
    for (u64 n = 0; n <= 10'000; ++n) {
      auto pairs = oracle_decompose(n, family);
      DecompositionPair direct = decompose_moser(n, r);
      if (pairs.size() != 1 || !pairs[0].indices_equal(direct.k, direct.l)) {
        result.fail("moser family r=" + std::to_string(r) +
                    " n=" + std::to_string(n) + " has " +
                    std::to_string(pairs.size()) + " pairs");
        return result;
      }
    }
    SequenceFamily s_fam = s_family(r);
    for (u64 n = r + 1; n <= 10'000; n += r) {
      auto pairs = oracle_decompose(n, s_fam);
      DecompositionPair direct = decompose_s(n, r);
      if (pairs.size() != 1 || !pairs[0].indices_equal(direct.k, direct.l)) {
        result.fail("s family r=" + std::to_string(r) +
                    " n=" + std::to_string(n) + " has " +
                    std::to_string(pairs.size()) + " pairs");
        return result;
      }
    }
  }
  return result;
}

// 4: the worked 27 = 17 + 2*5 example, end to end.
Outcome criterion4() {
  Outcome result;
  DecompositionPair p = decompose_moser(27, 2);
  if (!p.indices_equal(5, 3)) result.fail("pair is not (5, 3)");
  if (moser_term(5, 2) != 17 || moser_term(3, 2) != 5 || p.recombine() != 27)
    result.fail("recombination is not 17 + 2*5 = 27");
  if (moser_term(27, 2) != 325) result.fail("term 27 is not 325");
  return result;
}

// 5: simulation equals the closed form to 2^14 and the doubling recurrence
// holds to 2^13.
Outcome criterion5() {
  Outcome result;
  for (u64 n = 1; n <= (u64{1} << 14); ++n) {
    if (simulate_survivor(n) != survivor_closed(n)) {
      result.fail("survivors diverge at n=" + std::to_string(n));
      return result;
    }
  }
  for (u64 m = 1; m <= (u64{1} << 13); ++m) {
    if (!survivor_recurrence_check(m).holds()) {
      result.fail("recurrence fails at m=" + std::to_string(m));
      return result;
    }
  }
  return result;
}

// 6: survivor identities and the downward iteration.
Outcome criterion6() {
  Outcome result;
  for (u64 n = 3; n <= 9'999; n += 2) {
    if (n != survivor_closed(n - 2) + 2 * survivor_closed((n - 1) / 2)) {
      result.fail("two-survivor identity fails at n=" + std::to_string(n));
      return result;
    }
  }
  for (u64 n = 2; n <= 10'000; ++n) {
    if (w_step_down(n) != s_term(n - 1, 2)) {
      result.fail("step-down fails at n=" + std::to_string(n));
      return result;
    }
  }
  if (!half_step_sum_check(1000)) {
    result.fail("half-step sums fail below 1000");
    return result;
  }
  for (u64 n = 3; n <= 10'000; ++n) {
    std::vector<u64> orbit = v_iterate(n);
    if (orbit.empty() || orbit.back() != 1) {
      result.fail("orbit of " + std::to_string(n) + " does not end at 1");
      return result;
    }
  }
  return result;
}

// 7: psi reference values and the pairwise equality to m = 500.
Outcome criterion7() {
  Outcome result;
  const std::vector<u64> expected = {1,  2,  3,  4,  7,  8,  9,  10, 13,
                                     14, 15, 16, 19, 20, 21, 22, 29, 30};
  auto sweep = psi_sweep(4 * 500 + 1);
  auto value_at = [&sweep](u64 n) { return sweep[(n - 1) / 2].second; };
  for (u64 m = 1; m <= 18; ++m) {
    if (value_at(4 * m - 1) != expected[m - 1]) {
      result.fail("psi(4m-1) differs at m=" + std::to_string(m));
      return result;
    }
  }
  for (u64 m = 1; m <= 500; ++m) {
    if (value_at(4 * m - 1) != value_at(4 * m + 1)) {
      result.fail("psi pair differs at m=" + std::to_string(m));
      return result;
    }
  }
  return result;
}

// 8: affine fixtures -- the printed 8-term prefix, uniqueness over four
// parameter pairs, and the congruence refinements.
Outcome criterion8() {
  Outcome result;
  const std::vector<u64> printed = {1, 5, 17, 21, 65, 81, 85, 257};
  std::vector<u64> computed = affine_family(1, 2).prefix(8);
  if (computed != printed)
    result.fail("affine(1,2) prefix is [" + joined(computed) +
                "], printed reference is [" + joined(printed) + "]");

  for (auto [a, b] :
       std::vector<std::pair<u64, u64>>{{1, 1}, {1, 2}, {2, 3}, {5, 4}}) {
    SequenceFamily family = affine_family(a, b);
    for (u64 n = 0; n <= 2000; ++n) {
      u64 target = 3 * a + 2 * b * n;
      auto pairs = oracle_decompose(target, family, 2);
      DecompositionPair direct = decompose_affine(target, a, b);
      if (pairs.size() != 1 || !pairs[0].indices_equal(direct.k, direct.l)) {
        result.fail("uniqueness fails for a=" + std::to_string(a) +
                    " b=" + std::to_string(b) + " n=" + std::to_string(n));
        return result;
      }
    }
  }

  for (u64 r : {1, 2, 3}) {
    if (!congruence_refinement_check(r, ModulusVariant::OddModulus, 10'000)) {
      result.fail("odd-modulus refinement fails at level " + std::to_string(r));
      return result;
    }
    if (!congruence_refinement_check(r, ModulusVariant::EvenModulus, 10'000)) {
      result.fail("even-modulus refinement fails at level " + std::to_string(r));
      return result;
    }
  }
  return result;
}

// 9: merged-sequence fixtures and representability of every even number.
Outcome criterion9() {
  Outcome result;
  const std::vector<u64> merged22 = {1,  1,  3,  5,  9,   11,  17,  21,
                                     33, 35, 41, 43, 65,  69,  81,  85,
                                     129, 131, 137, 139, 161, 163};
  if (t_prefix(22) != merged22) result.fail("merged prefix differs");

  const std::vector<u64> forced16 = {2,  2,  4,  8,  30, 16,  28, 24,
                                     114, 40, 58, 48, 100, 72, 92, 88};
  for (u64 n = 1; n <= 16; ++n) {
    if (v_term(n, 200) != forced16[n - 1]) {
      result.fail("forced-even term differs at n=" + std::to_string(n));
      return result;
    }
  }

  const std::vector<u64> printed_unique = {2,  4,  8,  16, 24, 28, 30,
                                           32, 40, 48, 56, 58, 60, 62,
                                           64, 72, 80, 88, 92, 96, 100};
  std::vector<u64> computed_unique = unique_evens(100);
  if (computed_unique != printed_unique)
    result.fail("unique evens are [" + joined(computed_unique) +
                "], printed reference is [" + joined(printed_unique) + "]");

  for (u64 n = 2; n <= 20'000; n += 2) {
    if (even_representations(n, n).pairs.empty()) {
      result.fail("no representation for " + std::to_string(n));
      return result;
    }
  }
  return result;
}

// 10: the square bijection and both path optima on the four-point square.
Outcome criterion10() {
  Outcome result;
  for (u64 r : {2, 3}) {
    for (u64 t = 0; t <= 2; ++t) {
      u64 side = checked_pow(r, t);
      std::vector<std::vector<bool>> hit(side, std::vector<bool>(side, false));
      u64 count = 0;
      for (u64 n = r + 1; n <= checked_pow(r, 2 * t + 1) + 1; n += r) {
        LatticePoint p = to_lattice(n, r, t);
        if (p.k < 1 || p.k > side || p.l < 1 || p.l > side ||
            hit[p.k - 1][p.l - 1] || from_lattice(p, r) != n) {
          result.fail("bijection breaks at r=" + std::to_string(r) +
                      " t=" + std::to_string(t) + " n=" + std::to_string(n));
          return result;
        }
        hit[p.k - 1][p.l - 1] = true;
        ++count;
      }
      if (count != side * side) {
        result.fail("square not covered for r=" + std::to_string(r) +
                    " t=" + std::to_string(t));
        return result;
      }
    }
  }
  PathResult shortest = path_tsp(2, 1, PathObjective::Min);
  if (shortest.sequence != std::vector<u64>{3, 5, 9, 7})
    result.fail("shortest walk is " + joined(shortest.sequence));
  if (std::abs(shortest.length - 3.0) > 1e-9)
    result.fail("shortest length " + std::to_string(shortest.length));
  PathResult longest = path_tsp(2, 1, PathObjective::Max);
  if (std::abs(longest.length - (1.0 + 2.0 * std::sqrt(2.0))) > 1e-9)
    result.fail("longest length " + std::to_string(longest.length));
  return result;
}

// 11: 25 composite shifted terms exist within the first 1e4 indices for
// each c in {3, 5, 7}.
Outcome criterion11() {
  Outcome result;
  for (u64 c : {3, 5, 7}) {
    std::vector<CompositeWitness> witnesses = composite_witnesses(c, 25);
    if (witnesses.size() != 25 || witnesses.back().index > 10'000) {
      result.fail("witnesses out of range for c=" + std::to_string(c));
      return result;
    }
    for (const CompositeWitness& w : witnesses) {
      if (w.value != shifted_a(w.index, c) || is_prime(w.value) || w.value < 4) {
        result.fail("bad witness at index " + std::to_string(w.index));
        return result;
      }
    }
  }
  return result;
}

// 12: the verify command replays the reference lists and exits 0.
Outcome criterion12() {
  Outcome result;
  std::ostringstream out, err;
  int code = cli::run({"verify"}, out, err);
  if (code != 0) {
    std::string mismatches;
    std::istringstream lines(out.str());
    std::string line;
    while (std::getline(lines, line))
      if (line.find("MISMATCH") != std::string::npos)
        mismatches += (mismatches.empty() ? "" : "; ") + line;
    result.fail("verify exited " + std::to_string(code) + " (" + mismatches + ")");
  }
  return result;
}

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<Outcome()> check;
};

const std::vector<Criterion> criteria = {
    {1, "18-term base-2 reference prefix", 0.5, criterion1},
    {2, "digit formula vs recursion to 1e5", 2.0, criterion2},
    {3, "uniqueness sweeps to 1e4", 30.0, criterion3},
    {4, "worked decomposition of 27", 1.0, criterion4},
    {5, "survivor simulation vs closed form", 5.0, criterion5},
    {6, "survivor identity suite", 10.0, criterion6},
    {7, "psi reference list and pairing", 20.0, criterion7},
    {8, "affine fixtures and refinements", 30.0, criterion8},
    {9, "merged-sequence fixtures", 30.0, criterion9},
    {10, "square bijection and path optima", 1.0, criterion10},
    {11, "composite witness probe", 30.0, criterion11},
    {12, "verify command exits clean", 30.0, criterion12},
};

bool run_criterion(const Criterion& criterion) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome = criterion.check();
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds > criterion.budget_seconds)
    outcome.fail("exceeded " + std::to_string(criterion.budget_seconds) +
                 " s budget");
  std::ostringstream line;
  line << (outcome.ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id
       << ": " << criterion.label << " (" << std::fixed << std::setprecision(3)
       << seconds << " s)";
  if (!outcome.ok) line << " -- " << outcome.detail;
  std::cout << line.str() << std::endl;
  return outcome.ok;
}

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      selected = std::atoi(argv[++i]);
  }
  int failures = 0;
  for (const Criterion& criterion : criteria) {
    if (selected != 0 && criterion.id != selected) continue;
    if (!run_criterion(criterion)) ++failures;
  }
  if (selected == 0)
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << std::endl;
  return failures == 0 ? 0 : 1;
}
