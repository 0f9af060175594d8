#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace downsets {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set mentions an element outside [n] (or the element 0).
class MemberOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The ground set is larger than the relevant cap (N_MAX or the oracle cap).
class GroundSetTooLarge : public Error {
 public:
  using Error::Error;
};

/// An inclusion-exclusion or transversal computation outgrew its term budget.
class TermBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two families that must live over the same [n] do not.
class GroundSizeMismatch : public Error {
 public:
  using Error::Error;
};

/// A family handed in as an antichain has a member contained in another.
class NotAnAntichain : public Error {
 public:
  using Error::Error;
};

/// Facets and blockers that were asserted to describe one down-set do not.
class InvalidDualPair : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain (negative evaluation points, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace downsets
