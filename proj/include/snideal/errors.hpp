#pragma once

#include <stdexcept>
#include <string>

namespace snideal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring / ideal / module description, or bad user input.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// An order or enumeration cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction or operation precondition does not hold.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Operands live in different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Element index outside 0..order-1.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The multiplicative set meets the ideal; S-relative predicates are
/// undefined there. Distinct from a negative verdict.
class NotDisjoint : public Error {
 public:
  using Error::Error;
};

/// Localizing at a set containing 0 collapses to the zero ring, which is not
/// representable as a FiniteRing.
class DegenerateLocalization : public Error {
 public:
  using Error::Error;
};

}  // namespace snideal
