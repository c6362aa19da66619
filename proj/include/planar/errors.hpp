#pragma once

#include <stdexcept>
#include <string>

namespace planar {

// Parameter or argument outside the domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A division that must be exact left a remainder; always an implementation bug.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent evaluation paths disagreed.
class FormulaMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace planar
