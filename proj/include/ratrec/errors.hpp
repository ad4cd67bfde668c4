#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratrec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fraction-free elimination found no nonzero pivot.
struct SingularSystem : Error {
  using Error::Error;
};

/// Resultant requested for an input of degree zero in the eliminated variable.
struct NoEliminationNeeded : Error {
  NoEliminationNeeded() : Error("no elimination needed") {}
};

struct NotQuasiLinear : Error {
  using Error::Error;
};

struct NotHolonomic : Error {
  using Error::Error;
};

struct Unsupported : Error {
  using Error::Error;
};

/// Raised when an algebraic identity that must hold does not (implementation bug guard).
struct InternalContradiction : Error {
  using Error::Error;
};

/// Wall-clock deadline or resource cap exceeded.
struct Timeout : Error {
  using Error::Error;
};

/// A Groebner resource cap (pairs, coefficient bits, polynomial size) was hit.
struct CapExceeded : Timeout {
  using Timeout::Timeout;
};

struct NotFoundWithinBound : Error {
  NotFoundWithinBound(int reached)
      : Error("no simple ratrec generator found up to iteration " + std::to_string(reached)),
        reached(reached) {}
  int reached;
};

struct ArityError : Error {
  using Error::Error;
};

struct NotSomosEligible : Error {
  using Error::Error;
};

struct FormatError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct SyntaxError : ParseError {
  using ParseError::ParseError;
};

struct NegativeShiftError : ParseError {
  using ParseError::ParseError;
};

struct UnknownSymbol : ParseError {
  using ParseError::ParseError;
};

}  // namespace ratrec
