#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace schwarz1d::cli {

// 9 significant digits; scientific notation below 1e-3 in magnitude.
std::string format_number(double value);

using CsvCell = std::variant<std::string, double, long long>;

// Comma-separated rows, header first, LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<CsvCell> cells);
  std::size_t rows() const { return rows_.size(); }
  const std::vector<std::string>& header() const { return header_; }
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// key=value lines, sorted by key. Written next to every output file.
std::string format_manifest(const std::string& config_text,
                            const std::map<std::string, std::string>& flags);

}  // namespace schwarz1d::cli
