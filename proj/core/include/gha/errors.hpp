#pragma once

#include <stdexcept>
#include <string>

namespace gha {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ambient sizes or vector lengths disagree.
struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

// A relation subspace leaves some generator combination central (Z(L) != L^2).
struct CenterViolation : Error {
  using Error::Error;
};

// An operation that needs L^3 = 0 was handed something of higher class.
struct ClassTooHigh : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace gha
