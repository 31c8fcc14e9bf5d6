#pragma once

#include <stdexcept>
#include <string>

namespace rkgrgg {

/// Raised when an argument lies outside the domain of a formula
/// (e.g. k > n in a binomial, x outside (0,1) in a sandwich).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when user-supplied configuration fails validation. The message
/// names the offending field and the violated constraint.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rkgrgg
