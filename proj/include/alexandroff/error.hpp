#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alexandroff {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (poset files, certificates, family descriptors).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A relation that fails the axioms it was declared to satisfy
/// (e.g. a cycle in a `covers` list, a non-antisymmetric poset).
class RelationError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exponential enumeration would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::size_t bound)
      : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
  std::size_t bound() const { return bound_; }

 private:
  std::size_t bound_;
};

/// A lattice was required to be distributive and is not.
class NotDistributive : public Error {
 public:
  using Error::Error;
};

/// A lazily presented poset answered its oracles inconsistently.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed, or an iteration overran a bound
/// that the theory guarantees. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace alexandroff
