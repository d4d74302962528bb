#pragma once

#include <stdexcept>
#include <string>

namespace jetgeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates an operation's precondition (bad degree, h = 0, x outside a slab, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method (root refinement, bracket search) ran out of budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A search window contained no solution (no Hill endpoint crossing, no real root).
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// {x : G(x)^2 <= 1} has a component reaching +-infinity.
class UnboundedHillError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (polynomial literal, config line, trace file).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace jetgeo
