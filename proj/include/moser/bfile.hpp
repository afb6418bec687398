#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "moser/sequences.hpp"

namespace moser {

/// One "index value" line of the b-file interchange format.
struct BFileRecord {
  u64 index;
  u64 value;
  bool operator==(const BFileRecord&) const = default;
};

/// Writes `count` records starting at the family's native first index.
void export_bfile(std::ostream& out, const SequenceFamily& family, u64 count);

/// Parses records; throws on malformed lines.
std::vector<BFileRecord> parse_bfile(std::istream& in);

struct CheckReport {
  bool ok;
  std::string detail;  // empty when ok
};

/// Re-derives the family terms and compares them against the records.
CheckReport check_bfile(std::istream& in, const SequenceFamily& family);

}  // namespace moser
