#ifndef LIEMULT_ERRORS_HPP
#define LIEMULT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liemult {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Carries the basis triple on which the Jacobi identity failed.
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("Jacobi identity fails on basis triple (" + std::to_string(i + 1) + ", " +
              std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class NotClassTwo : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  using Error::Error;
};

class ClassTooHigh : public Error {
 public:
  using Error::Error;
};

// Parse failure with the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
  std::size_t position;
};

}  // namespace liemult

#endif
