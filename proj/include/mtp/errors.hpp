#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// numeric-foundation
class PrecisionUnavailable : public Error {
 public:
  using Error::Error;
};
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

// expr-frontend
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  explicit SyntaxError(const std::string& what) : Error(what), position_(0) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};
class UnsupportedArgument : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};
class NegativeExponent : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};
class IntervalOutOfRange : public Error {
 public:
  using Error::Error;
};
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

// taylor-bounds
class ValidityRadiusExceeded : public Error {
 public:
  using Error::Error;
};

// sturm
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};
class EndpointRoot : public Error {
 public:
  using Error::Error;
};
class ExtensionFailed : public Error {
 public:
  using Error::Error;
};
class NotPositive : public Error {
 public:
  using Error::Error;
};

// prover
class IndexArityMismatch : public Error {
 public:
  using Error::Error;
};

// cli
class CertificateFormatError : public Error {
 public:
  using Error::Error;
};

// stratify
class OrderMismatch : public Error {
 public:
  using Error::Error;
};
class ZeroDenominatorAtRight : public Error {
 public:
  using Error::Error;
};
class UnimodalityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mtp
