#pragma once

#include <string>
#include <vector>

#include "moser/checked.hpp"

namespace moser {

struct FixtureResult {
  std::string name;
  bool ok;
  std::string detail;  // empty when ok
};

/// Replays every embedded reference term list against freshly computed
/// values and reports each comparison.
std::vector<FixtureResult> run_fixtures();

}  // namespace moser
