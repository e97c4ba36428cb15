#pragma once

#include <stdexcept>
#include <string>

namespace hypoly {

/// Structural validation failure: bad labels, unknown ids, empty edges,
/// family parameters outside their domain.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exponential enumeration would exceed its configured guard.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Exact polynomial division left a nonzero remainder.
class InexactDivision : public std::domain_error {
 public:
  explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

}  // namespace hypoly
