#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tangle {

/// Precondition violated by the caller (bad index, parameter out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation could not reach its accuracy target.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fock truncation too small for the requested norm budget. Carries the
/// smallest truncation level that would satisfy it.
class TruncationError : public NumericalError {
 public:
  TruncationError(const std::string& what, std::size_t minimal_n_max)
      : NumericalError(what), minimal_n_max_(minimal_n_max) {}

  std::size_t minimal_n_max() const noexcept { return minimal_n_max_; }

 private:
  std::size_t minimal_n_max_;
};

/// Malformed user input (sweep grids, CLI flags).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tangle
