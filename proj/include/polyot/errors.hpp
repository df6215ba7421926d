#pragma once

#include <stdexcept>

namespace polyot {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polygon has too few vertices or zero perimeter for the requested operation.
class DegeneratePolygonError : public Error {
 public:
  using Error::Error;
};

// Index mapping is not a bijection or has the wrong length.
class InvalidPermutationError : public Error {
 public:
  using Error::Error;
};

// Operand dimensions disagree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Invalid solver input (non-finite or negative cost entries, bad marginals).
class SolverError : public Error {
 public:
  using Error::Error;
};

// An operation that requires a converged transport plan received one that
// exhausted its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; the message carries line numbers where applicable.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Configuration value violates its invariant.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyot
