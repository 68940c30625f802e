#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qnoise/errors.hpp"

namespace qnoise {

/// Shortest exact decimal for a double ("%.17g" round-trips bit-exactly, so
/// files are byte-identical across runs).
inline std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const std::vector<double>& row : table.rows) {
    if (row.size() != table.columns.size())
      throw ValidationError("write_csv: ragged row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
}

inline CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open csv: " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line))
    throw ValidationError("empty csv: " + path.string());
  std::stringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) table.columns.push_back(cell);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
      std::size_t consumed = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &consumed);
      } catch (const std::exception&) {
        throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                              ": not a number: '" + cell + "'");
      }
      if (consumed != cell.size())
        throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                              ": not a number: '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != table.columns.size())
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": wrong column count");
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qnoise
