#pragma once

#include <stdexcept>
#include <string>

namespace syntonet {

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an iterative numerical routine fails to converge.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace syntonet
