#pragma once

#include <stdexcept>
#include <string>

namespace kamcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroInterval : public DomainError {
 public:
  DivisionByZeroInterval() : DomainError("interval division: divisor contains zero") {}
};

class NegativeSqrt : public DomainError {
 public:
  NegativeSqrt() : DomainError("interval sqrt: argument has negative lower bound") {}
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

class PrecisionMismatch : public Error {
 public:
  PrecisionMismatch() : Error("operands carry different precisions") {}
};

class SizeNotPowerOfTwo : public Error {
 public:
  explicit SizeNotPowerOfTwo(std::size_t n)
      : Error("size " + std::to_string(n) + " is not a power of two") {}
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  NotHermitian() : Error("operation requires a hermitian (real-valued) model") {}
};

class InsufficientOrbit : public Error {
 public:
  using Error::Error;
};

class OrbitOverflow : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Raised by the verification core when a hypothesis cannot be established.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class FrameSingular : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class DegenerateFrame : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class HyperbolicityUnverified : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class NonDegeneracyUnverified : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class CascadeDomainError : public VerificationFailure {
 public:
  using VerificationFailure::VerificationFailure;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kamcert
