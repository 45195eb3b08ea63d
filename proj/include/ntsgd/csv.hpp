#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ntsgd {

using CsvValue = std::variant<std::int64_t, double, std::string>;

// Column-labelled table with deterministic CSV serialization: doubles are
// printed with 17 significant digits so a reader recovers them exactly;
// emitting the same table twice yields byte-identical files.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<CsvValue>> rows;

  explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {}
  Table() = default;

  void add_row(std::vector<CsvValue> row);
};

std::string format_csv_value(const CsvValue& v);
std::string to_csv(const Table& table);

// Writes header plus rows; I/O failures raise std::runtime_error naming
// the path.
void emit_csv(const Table& table, const std::string& path);

}  // namespace ntsgd
