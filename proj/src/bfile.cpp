#include "moser/bfile.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace moser {

void export_bfile(std::ostream& out, const SequenceFamily& family, u64 count) {
  std::vector<u64> terms = family.prefix(count);
  u64 index = family.first_index();
  for (u64 v : terms) out << index++ << ' ' << v << '\n';
}

std::vector<BFileRecord> parse_bfile(std::istream& in) {
  std::vector<BFileRecord> records;
  std::string line;
  u64 line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    BFileRecord rec{};
    std::string extra;
    if (!(fields >> rec.index >> rec.value) || (fields >> extra))
      throw std::domain_error("malformed b-file line " + std::to_string(line_no));
    if (!records.empty() && rec.index != records.back().index + 1)
      throw std::domain_error("b-file indices must increase by 1 at line " +
                              std::to_string(line_no));
    records.push_back(rec);
  }
  return records;
}

CheckReport check_bfile(std::istream& in, const SequenceFamily& family) {
  std::vector<BFileRecord> records = parse_bfile(in);
  if (records.empty()) return {false, "no records"};
  if (records.front().index != family.first_index())
    return {false, "first index " + std::to_string(records.front().index) +
                       ", family starts at " +
                       std::to_string(family.first_index())};
  std::vector<u64> terms = family.prefix(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].value != terms[i])
      return {false, "index " + std::to_string(records[i].index) + ": file has " +
                         std::to_string(records[i].value) + ", sequence has " +
                         std::to_string(terms[i])};
  }
  return {true, ""};
}

}  // namespace moser
