#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toricdeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name)
      : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class DegreeOverflow : public Error {
 public:
  DegreeOverflow() : Error("exponent overflow") {}
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NoCertificate : public Error {
 public:
  using Error::Error;
};

class NegativeEntryUnresolvable : public Error {
 public:
  using Error::Error;
};

class NTooSmall : public Error {
 public:
  using Error::Error;
};

class NotDegreeOneGenerated : public Error {
 public:
  using Error::Error;
};

class NoIndependentSubset : public Error {
 public:
  using Error::Error;
};

/// A computed object disagreed with a required identity; `clause` names the failing check.
class VerificationFailed : public Error {
 public:
  VerificationFailed(std::string clause, const std::string& detail)
      : Error("verification failed [" + clause + "]: " + detail), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

class ZeroParameter : public Error {
 public:
  ZeroParameter() : Error("torus parameter must be nonzero") {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("projective point has all coordinates zero") {}
};

class IOError : public Error {
 public:
  using Error::Error;
};

class Cancelled : public Error {
 public:
  Cancelled() : Error("computation cancelled") {}
};

}  // namespace toricdeg
