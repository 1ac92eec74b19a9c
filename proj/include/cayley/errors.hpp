#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cayley {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 1; mathematical-claim violations are reported, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unparseable group grammar, set file, or numeric literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Family parameters or generator lists that do not describe a supported group.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A vertex that is not a valid element of its host (unreduced word, residue
/// out of range, wrong arity).
class InvalidVertex : public Error {
 public:
  using Error::Error;
};

/// Operation applied outside its mathematical domain (empty set, full torus,
/// finite host where an infinite one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Hypothesis of a theorem-level operation not met by the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration ran out of its vertex/cell/parameter budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::optional<std::uint64_t> partial_radius = std::nullopt)
      : Error(what), partial_radius_(partial_radius) {}

  /// Largest radius fully enumerated before the budget tripped, if applicable.
  std::optional<std::uint64_t> partial_radius() const { return partial_radius_; }

 private:
  std::optional<std::uint64_t> partial_radius_;
};

}  // namespace cayley
