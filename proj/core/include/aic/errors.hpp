#pragma once

#include <stdexcept>
#include <string>

namespace aic {

/// Malformed input data (bad edge-list line, missing column, ...).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Arguments outside their contract (probability out of range, empty graph,
/// unknown node label, k > n, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact/exhaustive routine was asked to run beyond its size guard.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aic
