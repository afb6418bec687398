#include "moser/fixtures.hpp"

#include <cmath>
#include <sstream>

#include "moser/collinearity.hpp"
#include "moser/lattice.hpp"
#include "moser/progressions.hpp"
#include "moser/sequences.hpp"

namespace moser {

namespace {

// Reference term lists as printed in the source material. They are compared
// verbatim; any disagreement with computed terms is reported, not patched.
const std::vector<u64> kMoser2First18 = {0,  1,  4,  5,  16, 17, 20, 21, 64,
                                         65, 68, 69, 80, 81, 84, 85, 256, 257};
const std::vector<u64> kPsiOddFirst18 = {1,  2,  3,  4,  7,  8,  9,  10, 13,
                                         14, 15, 16, 19, 20, 21, 22, 29, 30};
const std::vector<u64> kAffine12First8 = {1, 5, 17, 21, 65, 81, 85, 257};
const std::vector<u64> kMergedFirst22 = {1,  1,  3,  5,  9,   11,  17,  21,
                                         33, 35, 41, 43, 65,  69,  81,  85,
                                         129, 131, 137, 139, 161, 163};
const std::vector<u64> kForcedEvenFirst16 = {2,  2,  4,  8,  30, 16,  28, 24,
                                             114, 40, 58, 48, 100, 72, 92, 88};
const std::vector<u64> kUniqueEvensTo100 = {2,  4,  8,  16, 24, 28, 30,
                                            32, 40, 48, 56, 58, 60, 62,
                                            64, 72, 80, 88, 92, 96, 100};
const std::vector<u64> kShortestPath21 = {3, 5, 9, 7};

std::string joined(const std::vector<u64>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

FixtureResult compare(const std::string& name, const std::vector<u64>& computed,
                      const std::vector<u64>& reference) {
  if (computed == reference) return {name, true, ""};
  std::ostringstream detail;
  detail << "computed [" << joined(computed) << "], reference ["
         << joined(reference) << "]";
  return {name, false, detail.str()};
}

FixtureResult psi_pair_fixture() {
  for (u64 m = 1; m <= 500; ++m) {
    if (!psi_pair_check(m))
      return {"psi-pair-equality-to-500", false,
              "pair differs at m=" + std::to_string(m)};
  }
  return {"psi-pair-equality-to-500", true, ""};
}

FixtureResult lattice_path_fixture() {
  const std::string name = "lattice-path-r2-t1";
  PathResult shortest = path_tsp(2, 1, PathObjective::Min);
  PathResult longest = path_tsp(2, 1, PathObjective::Max);
  if (shortest.sequence != kShortestPath21)
    return {name, false, "shortest walk is " + joined(shortest.sequence)};
  if (std::abs(shortest.length - 3.0) > shortest.tolerance)
    return {name, false, "shortest length " + std::to_string(shortest.length)};
  double expected_longest = 1.0 + 2.0 * std::sqrt(2.0);
  if (std::abs(longest.length - expected_longest) > longest.tolerance)
    return {name, false, "longest length " + std::to_string(longest.length)};
  return {name, true, ""};
}

}  // namespace

std::vector<FixtureResult> run_fixtures() {
  std::vector<FixtureResult> results;

  results.push_back(
      compare("moser-base2-first-18", moser_prefix(18, 2), kMoser2First18));

  {
    std::vector<u64> psi_values;
    auto sweep = psi_sweep(4 * 18 - 1);
    for (u64 m = 1; m <= 18; ++m) psi_values.push_back(sweep[(4 * m - 1) / 2].second);
    results.push_back(
        compare("psi-odd-list-first-18", psi_values, kPsiOddFirst18));
  }

  results.push_back(psi_pair_fixture());

  results.push_back(compare("affine-1-2-printed-prefix",
                            affine_family(1, 2).prefix(8), kAffine12First8));

  results.push_back(compare("merged-list-first-22", t_prefix(22), kMergedFirst22));

  {
    std::vector<u64> forced;
    for (u64 n = 1; n <= 16; ++n) forced.push_back(v_term(n, 200));
    results.push_back(
        compare("forced-even-terms-first-16", forced, kForcedEvenFirst16));
  }

  results.push_back(
      compare("unique-evens-to-100", unique_evens(100), kUniqueEvensTo100));

  results.push_back(lattice_path_fixture());

  return results;
}

}  // namespace moser
