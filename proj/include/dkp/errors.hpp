#pragma once

#include <stdexcept>
#include <string>

namespace dkp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma function evaluated at (or within 1e-14 of) a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Hypergeometric connection formula requested with a - b (near) integer.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain an operation supports.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Energy within eps_boundary of one of the thresholds +-a +- m.
class BoundaryEnergy : public Error {
 public:
  using Error::Error;
};

/// Incident channel carries no propagating wave.
class EvanescentIncident : public Error {
 public:
  using Error::Error;
};

/// Exponent range guard |2bx| <= 700 violated.
class RangeError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class StepLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Numerical oracle asked to integrate with a closed transmitted channel.
class EvanescentChannel : public Error {
 public:
  using Error::Error;
};

/// Step-potential closed form needs both channels open.
class ChannelClosed : public Error {
 public:
  using Error::Error;
};

}  // namespace dkp
