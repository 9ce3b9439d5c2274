#pragma once

#include <stdexcept>
#include <string>

namespace histkit {

/// Base class for all histkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A type invariant failed at construction (non-Hermitian input, bad norm, ...).
class InvariantViolation : public Error {
public:
  using Error::Error;
};

/// An operation precondition failed (epsilon out of range, commutator too large, ...).
class PreconditionFailure : public Error {
public:
  using Error::Error;
};

/// An iterative solver stopped before reaching its target accuracy.
/// Carries the residual at the point of failure.
class SolverFailure : public Error {
public:
  SolverFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

}  // namespace histkit
