#pragma once

#include <stdexcept>
#include <string>

namespace qgeo {

// Base class for all domain-level failures: the inputs were well-formed but
// describe something the theory rejects (unphysical state, singular metric,
// degenerate construction). CLI maps these to exit code 3, as opposed to
// malformed input (exit 2).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed wire input (bad JSON, wrong shape, non-numeric entries).
// Deliberately not a DomainError: the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction-time invariant failure (bad trace, negative spectrum,
// Bloch vector outside the ball, invalid sampling config).
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Operator dimensions do not match the operation's contract.
class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// A metric denominator (p_j + p_k, 1 - m^2, 1/4 - x^2) fell at or below the
// singularity floor; the statistical metric diverges at the pure-state
// boundary.
class SingularState : public DomainError {
 public:
  using DomainError::DomainError;
};

// Fubini-Study quadratic form evaluated with dp_k != 0 at p_k = 0.
class ZeroProbability : public DomainError {
 public:
  using DomainError::DomainError;
};

// Bures distance radicand below the rounding clamp; the inputs are not
// admissible density operators.
class NegativeRadicand : public DomainError {
 public:
  using DomainError::DomainError;
};

// A four-vector with P0 < 0 has no physical Bloch-ball preimage.
class NegativeP0 : public DomainError {
 public:
  using DomainError::DomainError;
};

// Frame seed vectors are (numerically) collinear.
class DegenerateSeed : public DomainError {
 public:
  using DomainError::DomainError;
};

// Iterative eigensolver exceeded its sweep cap.
class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qgeo
