#ifndef FEKETE_ERRORS_HPP_
#define FEKETE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fekete {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested order or degree exceeds a precomputed table.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An iterative numerical method failed (eigensolver, root polish).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fekete

#endif  // FEKETE_ERRORS_HPP_
