#pragma once

#include <stdexcept>
#include <string>

namespace ordermap {

/// Argument outside the domain an operation is defined (or validated) on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series term above the declared or reliable truncation order was needed.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature or series evaluation did not settle within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient or value became non-finite.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ordermap
