#include "schwarz1d/cli/reference.hpp"

#include <cstdlib>
#include <sstream>

#include "schwarz1d/errors.hpp"

namespace schwarz1d::cli {

namespace detail {
extern const char* const kReferenceCsv;
}

namespace {

struct Parsed {
  int version = 0;
  std::vector<ReferenceValue> values;
};

const Parsed& parsed() {
  static const Parsed data = [] {
    Parsed out;
    std::istringstream in(detail::kReferenceCsv);
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (line[0] == '#') {
        const std::string tag = "# version:";
        if (line.rfind(tag, 0) == 0) {
          out.version = std::atoi(line.c_str() + tag.size());
        }
        continue;
      }
      if (!header_seen) {
        header_seen = true;
        continue;
      }
      std::vector<std::string> cells;
      std::stringstream row(line);
      std::string cell;
      while (std::getline(row, cell, ',')) cells.push_back(cell);
      if (cells.size() != 6) {
        throw InvalidInput("malformed reference data line: " + line);
      }
      ReferenceValue v;
      v.table = std::atoi(cells[0].c_str());
      v.row = cells[1];
      v.quantity = cells[2];
      v.value = std::strtod(cells[3].c_str(), nullptr);
      v.tolerance = std::strtod(cells[4].c_str(), nullptr);
      v.relative = cells[5] == "rel";
      out.values.push_back(std::move(v));
    }
    return out;
  }();
  return data;
}

}  // namespace

int reference_version() { return parsed().version; }

const std::vector<ReferenceValue>& reference_values() {
  return parsed().values;
}

const ReferenceValue& reference(int table, std::string_view row,
                                std::string_view quantity) {
  for (const ReferenceValue& v : reference_values()) {
    if (v.table == table && v.row == row && v.quantity == quantity) return v;
  }
  throw InvalidInput("no reference value for table " + std::to_string(table) +
                     " " + std::string(row) + " " + std::string(quantity));
}

}  // namespace schwarz1d::cli
