#pragma once

#include <stdexcept>
#include <string>

namespace vlcrange {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (not valid JSON, wrong value type, duplicate key).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A key that the parameter schema does not know.
class UnknownKeyError : public ParseError {
 public:
  explicit UnknownKeyError(const std::string& key)
      : ParseError("unknown parameter key '" + key + "'"), key_(key) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Values that are well-formed but violate a documented invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Total noise variance is zero, so the Gaussian model has no density.
class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace vlcrange
