#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bfl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Arity, rank or ring mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The integral (or integral functional) space does not have rank one.
class IntegralRankError : public Error {
 public:
  IntegralRankError(const std::string& what, std::size_t rank)
      : Error(what + ": solution space has rank " + std::to_string(rank) + ", expected 1"),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

class SwitchbackError : public Error {
 public:
  using Error::Error;
};

class DegeneratePairingError : public Error {
 public:
  using Error::Error;
};

class NotCommutativeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// A diagram refers to a generator the evaluation context does not provide.
class ContextError : public Error {
 public:
  using Error::Error;
};

class SerializationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bfl
