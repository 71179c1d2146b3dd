#pragma once

#include <stdexcept>
#include <string>

namespace tangent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument failed (nonpositive axis, odd order, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The line x·ω = p is tangent to the unit circle (|p| = 1).
class SingularLine : public Error {
 public:
  using Error::Error;
};

/// ρ² is a quadratic form but not a positive definite one.
class CertificateFailure : public Error {
 public:
  using Error::Error;
};

/// The leading density vanishes on the whole grid.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction did not. Signals a bug.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// The Hankel moment matrix is singular at the requested direction.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// The moments at a direction are not produced by any tangential density.
class NotInModel : public Error {
 public:
  using Error::Error;
};

/// Too many grid directions were degenerate to assemble ρ².
class ReconstructionFailed : public Error {
 public:
  using Error::Error;
};

/// A body document or run configuration is malformed.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace tangent
