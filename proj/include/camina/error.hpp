#pragma once

#include <stdexcept>
#include <string>

namespace camina {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive algorithm was asked to run above its configured size bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class InvalidGroup : public Error {
 public:
  using Error::Error;
};

class InvalidAction : public Error {
 public:
  using Error::Error;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// No prime q = 1 (mod e) with q > 2|G| was found below the search limit.
class NoSuitablePrime : public Error {
 public:
  using Error::Error;
};

/// Eigenspace splitting or value lifting failed. Indicates a bug.
class SplitFailure : public Error {
 public:
  using Error::Error;
};

/// A character sum that must be divisible by the group order was not.
class NonIntegral : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class EvenCharacteristic : public Error {
 public:
  using Error::Error;
};

class EvenOrder : public Error {
 public:
  using Error::Error;
};

/// A checked theorem failed on a concrete input. The message carries the
/// witness; callers must surface it.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& claim, const std::string& witness)
      : Error(claim + " violated: " + witness), claim_(claim), witness_(witness) {}

  const std::string& claim() const noexcept { return claim_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string claim_;
  std::string witness_;
};

}  // namespace camina
