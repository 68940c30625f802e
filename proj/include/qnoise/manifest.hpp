#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "qnoise/csv.hpp"

namespace qnoise {

/// Flat, ordered key-value record of everything a run resolved: parameters,
/// seeds, overrides, fit results, software version. Contains no timestamps,
/// so re-runs produce byte-identical files.
class Manifest {
 public:
  void put(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
  }
  void put(const std::string& key, double value) { put(key, format_double(value)); }
  void put(const std::string& key, std::uint64_t value) { put(key, std::to_string(value)); }
  void put(const std::string& key, std::size_t value) { put(key, std::to_string(value)); }
  void put(const std::string& key, bool value) { put(key, std::string(value ? "true" : "false")); }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string lookup(const std::string& key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return v;
    throw ValidationError("manifest: missing key " + key);
  }

  bool contains(const std::string& key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return true;
    return false;
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace qnoise
