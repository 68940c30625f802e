#pragma once

#include <stdexcept>
#include <string>

namespace qnoise {

/// Invalid inputs: bad parameter combinations, mismatched grids, malformed data.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A regression/fit that cannot produce a meaningful result (e.g. non-decaying input).
class FitRejectedError : public std::runtime_error {
 public:
  explicit FitRejectedError(const std::string& what) : std::runtime_error(what) {}
};

/// Config-file problems; message carries "file:line:" anchors where possible.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qnoise
