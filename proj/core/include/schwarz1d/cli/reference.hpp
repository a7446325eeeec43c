#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schwarz1d::cli {

struct ReferenceValue {
  int table = 0;
  std::string row;
  std::string quantity;
  double value = 0.0;
  double tolerance = 0.0;
  bool relative = false;
};

// Version tag of the embedded reference data file.
int reference_version();

const std::vector<ReferenceValue>& reference_values();

// Throws InvalidInput when the key is not present.
const ReferenceValue& reference(int table, std::string_view row,
                                std::string_view quantity);

}  // namespace schwarz1d::cli
