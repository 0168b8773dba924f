#pragma once

#include <string>
#include <vector>

#include "wedgedeg/catalog.hpp"

namespace testsupport {

// Groups every bound and oracle is exercised on.
inline const std::vector<std::string>& catalog() {
  static const std::vector<std::string> specs = {
      "Z2",  "Z3",  "Z4",    "Z5",    "Z6",  "Z7",  "Z8",  "Z9",  "Z10",
      "Z11", "Z12", "Z2xZ2", "Z3xZ3", "D4",  "D6",  "D8",  "D10", "D12",
      "D14", "D16", "Q8",    "Q12",   "Q16", "Q20", "Q24", "S3",  "S4",
      "A4",  "Z3xD8", "Z3xS3"};
  return specs;
}

inline std::vector<std::string> catalog_up_to(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& s : catalog())
    if (wedgedeg::parse_group_spec(s).order() <= max_order) out.push_back(s);
  return out;
}

}  // namespace testsupport
