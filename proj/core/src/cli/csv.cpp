#include "schwarz1d/cli/csv.hpp"

#include <cmath>
#include <cstdio>

#include "schwarz1d/errors.hpp"

namespace schwarz1d::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[48];
  if (std::abs(value) < 1e-3) {
    std::snprintf(buf, sizeof buf, "%.8e", value);
  } else {
    std::snprintf(buf, sizeof buf, "%.9g", value);
  }
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<CsvCell> cells) {
  if (cells.size() != header_.size()) {
    throw InvalidInput("CSV row width does not match the header");
  }
  std::vector<std::string> row;
  row.reserve(cells.size());
  for (const CsvCell& cell : cells) {
    if (const auto* s = std::get_if<std::string>(&cell)) {
      row.push_back(escape(*s));
    } else if (const auto* d = std::get_if<double>(&cell)) {
      row.push_back(format_number(*d));
    } else {
      row.push_back(std::to_string(std::get<long long>(cell)));
    }
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto append = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  std::vector<std::string> head;
  for (const std::string& h : header_) head.push_back(escape(h));
  append(head);
  for (const auto& row : rows_) append(row);
  return out;
}

std::string format_manifest(const std::string& config_text,
                            const std::map<std::string, std::string>& flags) {
  std::string out = "# configuration\n" + config_text;
  if (!config_text.empty() && config_text.back() != '\n') out += '\n';
  out += "# decisions\n";
  for (const auto& [key, value] : flags) out += key + "=" + value + "\n";
  return out;
}

}  // namespace schwarz1d::cli
