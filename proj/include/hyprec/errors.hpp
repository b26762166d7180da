#pragma once

#include <stdexcept>
#include <string>

namespace hyprec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative procedure (series summation, quadrature refinement) hit its
/// budget before meeting the requested tolerance.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyprec
