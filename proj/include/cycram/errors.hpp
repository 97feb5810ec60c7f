#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycram {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex ids out of range, malformed sets, inconsistent sizes.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a bipartite-labeled graph received something else.
class NotBipartite : public Error {
 public:
  using Error::Error;
};

/// Parameters for which no gadget or pipeline instance exists.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

/// An exact search would exceed its configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cycram
