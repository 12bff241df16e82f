#pragma once

#include <stdexcept>
#include <string>

namespace wheelzeta {

/// Bad arguments at an API or CLI boundary (maps to exit code 2).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Mathematically invalid input (divergent argument, out-of-domain label).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested tolerance could not be met within the configured budget.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wheelzeta
