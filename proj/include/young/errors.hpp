#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace young {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset()` is the byte offset of the problem.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar construct that parses but is deliberately not supported (x^x).
class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A subexpression left the reals (ln of nonpositive, division by zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class OrderCap : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotBracketed : public Error {
 public:
  using Error::Error;
};

/// The two independent oracle paths disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Invalid problem data; `field()` names the offending input.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class ExponentDomain : public Error {
 public:
  using Error::Error;
};

class InvalidT : public Error {
 public:
  using Error::Error;
};

class OrientationError : public Error {
 public:
  using Error::Error;
};

/// Problem or fixture file that cannot be read or is not valid JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

class MissingFixture : public Error {
 public:
  using Error::Error;
};

class UnknownMethod : public Error {
 public:
  using Error::Error;
};

}  // namespace young
