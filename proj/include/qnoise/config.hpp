#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qnoise/errors.hpp"

namespace qnoise {

/// Strict INI-style configuration:
///
///   # comment
///   [section]
///   key = value
///
/// Keys are unique per section. Every key must be consumed by the scenario
/// builder; leftovers are reported as unknown keys with their line number.
class ConfigFile {
 public:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };

  static ConfigFile parse_text(const std::string& text, const std::string& origin) {
    ConfigFile cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string trimmed = trim(strip_comment(line));
      if (trimmed.empty()) continue;
      if (trimmed.front() == '[') {
        if (trimmed.back() != ']')
          throw ConfigError(cfg.anchor(line_no) + ": malformed section header");
        section = trim(trimmed.substr(1, trimmed.size() - 2));
        if (section.empty())
          throw ConfigError(cfg.anchor(line_no) + ": empty section name");
        cfg.sections_[section];  // sections may legitimately be empty
        continue;
      }
      const std::size_t eq = trimmed.find('=');
      if (eq == std::string::npos)
        throw ConfigError(cfg.anchor(line_no) + ": expected 'key = value'");
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty()) throw ConfigError(cfg.anchor(line_no) + ": empty key");
      if (section.empty())
        throw ConfigError(cfg.anchor(line_no) + ": key outside any [section]");
      auto [it, inserted] = cfg.sections_[section].emplace(key, Entry{value, line_no, false});
      if (!inserted)
        throw ConfigError(cfg.anchor(line_no) + ": duplicate key '" + section + "." + key + "'");
    }
    return cfg;
  }

  static ConfigFile parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
  }

  const std::string& origin() const { return origin_; }

  /// Applies "section.key=value"; the key need not pre-exist, but it must be
  /// consumed by the scenario builder like any other, so typos still fail.
  void set_override(const std::string& dotted_key, const std::string& value) {
    const std::size_t dot = dotted_key.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == dotted_key.size())
      throw ConfigError("override must look like section.key=value: '" + dotted_key + "'");
    const std::string section = dotted_key.substr(0, dot);
    const std::string key = dotted_key.substr(dot + 1);
    sections_[section][key] = Entry{value, 0, false};
  }

  bool has(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    return sec != sections_.end() && sec->second.count(key) > 0;
  }

  std::optional<std::string> get_string(const std::string& section,
                                        const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec == sections_.end()) return std::nullopt;
    const auto it = sec->second.find(key);
    if (it == sec->second.end()) return std::nullopt;
    it->second.consumed = true;
    return it->second.value;
  }

  std::string require_string(const std::string& section, const std::string& key) const {
    auto v = get_string(section, key);
    if (!v) throw ConfigError(origin_ + ": missing required key '" + section + "." + key + "'");
    return *v;
  }

  std::optional<double> get_double(const std::string& section, const std::string& key) const {
    auto v = get_string(section, key);
    if (!v) return std::nullopt;
    return parse_double(section, key, *v);
  }

  double require_double(const std::string& section, const std::string& key) const {
    return parse_double(section, key, require_string(section, key));
  }

  std::optional<std::uint64_t> get_uint(const std::string& section,
                                        const std::string& key) const {
    auto v = get_string(section, key);
    if (!v) return std::nullopt;
    return parse_uint(section, key, *v);
  }

  std::uint64_t require_uint(const std::string& section, const std::string& key) const {
    return parse_uint(section, key, require_string(section, key));
  }

  std::optional<bool> get_bool(const std::string& section, const std::string& key) const {
    auto v = get_string(section, key);
    if (!v) return std::nullopt;
    if (*v == "true") return true;
    if (*v == "false") return false;
    throw ConfigError(key_anchor(section, key) + ": expected true/false, got '" + *v + "'");
  }

  std::optional<std::vector<double>> get_double_list(const std::string& section,
                                                     const std::string& key) const {
    auto v = get_string(section, key);
    if (!v) return std::nullopt;
    std::vector<double> out;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ','))
      out.push_back(parse_double(section, key, trim(item)));
    if (out.empty())
      throw ConfigError(key_anchor(section, key) + ": empty list");
    return out;
  }

  /// Fails on the first key no builder consumed, pointing at its line.
  void reject_unconsumed(const std::vector<std::string>& known_sections) const {
    for (const auto& [section, entries] : sections_) {
      bool known = false;
      for (const std::string& s : known_sections) known = known || s == section;
      for (const auto& [key, entry] : entries) {
        if (entry.consumed) continue;
        const std::string where =
            entry.line > 0 ? anchor(entry.line) : origin_ + " (override)";
        if (!known)
          throw ConfigError(where + ": unknown section '" + section + "'");
        throw ConfigError(where + ": unknown key '" + section + "." + key + "'");
      }
    }
  }

 private:
  std::string anchor(int line) const { return origin_ + ":" + std::to_string(line); }

  std::string key_anchor(const std::string& section, const std::string& key) const {
    const auto sec = sections_.find(section);
    if (sec != sections_.end()) {
      const auto it = sec->second.find(key);
      if (it != sec->second.end() && it->second.line > 0) return anchor(it->second.line);
    }
    return origin_ + ": '" + section + "." + key + "'";
  }

  double parse_double(const std::string& section, const std::string& key,
                      const std::string& text) const {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &consumed);
    } catch (const std::exception&) {
      throw ConfigError(key_anchor(section, key) + ": expected a number, got '" + text + "'");
    }
    if (consumed != text.size())
      throw ConfigError(key_anchor(section, key) + ": expected a number, got '" + text + "'");
    return v;
  }

  std::uint64_t parse_uint(const std::string& section, const std::string& key,
                           const std::string& text) const {
    std::size_t consumed = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(text, &consumed);
    } catch (const std::exception&) {
      throw ConfigError(key_anchor(section, key) + ": expected a nonnegative integer, got '" +
                        text + "'");
    }
    if (consumed != text.size() || text.find('-') != std::string::npos)
      throw ConfigError(key_anchor(section, key) + ": expected a nonnegative integer, got '" +
                        text + "'");
    return v;
  }

  static std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
  }

  static std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  }

  std::string origin_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
};

}  // namespace qnoise
