#pragma once

#include <stdexcept>
#include <string>

namespace twopoint {

/// Truncated Fock space too small for the requested operation.
class TruncationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid physical input (sector, label, quantum number, parameter).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Group average sampled too coarsely to resolve the constraint spectrum.
class AliasingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gauss-Hermite order below the exactness threshold of the correlator integrand.
class QuadratureOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twopoint
