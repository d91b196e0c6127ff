#pragma once

#include <stdexcept>
#include <string>

namespace ordcalc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two elements with incompatible representations were combined
/// (different kinds, degrees, dimensions or moduli).
class RepresentationMismatch : public Error {
public:
  using Error::Error;
};

/// An element was passed to a group operation but is not a member.
class MembershipError : public Error {
public:
  using Error::Error;
};

/// Closure enumeration exceeded the configured cap.
class GroupTooLarge : public Error {
public:
  GroupTooLarge(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

/// A precondition on an operation's arguments was violated.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A mathematically guaranteed identity failed on concrete data.
/// This always indicates an implementation bug, never bad input.
class TheoremViolation : public Error {
public:
  using Error::Error;
};

/// Two internal computation routes disagreed.
class InternalInconsistency : public Error {
public:
  using Error::Error;
};

/// A check was requested on a group it does not apply to, or a run
/// configuration is otherwise inconsistent.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Malformed element syntax, group specification file, or table file.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace ordcalc
