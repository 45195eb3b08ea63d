#include "ntsgd/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ntsgd {

void Table::add_row(std::vector<CsvValue> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("Table: row width does not match columns");
  }
  rows.push_back(std::move(row));
}

std::string format_csv_value(const CsvValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    return std::to_string(*i);
  }
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", *d);
    return buf;
  }
  const auto& s = std::get<std::string>(v);
  if (s.find_first_of(",\"\n") != std::string::npos) {
    throw std::invalid_argument("Table: string cells must be CSV-plain");
  }
  return s;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) {
      out += ',';
    }
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out += ',';
      }
      out += format_csv_value(row[c]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const Table& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_csv: cannot open " + path);
  }
  const std::string body = to_csv(table);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) {
    throw std::runtime_error("emit_csv: write failed for " + path);
  }
}

}  // namespace ntsgd
