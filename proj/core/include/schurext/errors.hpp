#pragma once

#include <stdexcept>
#include <string>

namespace schurext {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text (partitions, functor expressions, query arguments).
struct ParseError : Error {
  using Error::Error;
};

// A precondition on the mathematical input was violated.
struct DomainError : Error {
  using Error::Error;
};

// Degree exceeds the configured enumeration guard.
struct GuardError : Error {
  using Error::Error;
};

// Neither Kuhn/Ringel rewrite of an Ext(S, S) query has a hook source.
struct NoHookRoute : Error {
  using Error::Error;
};

struct MalformedComplex : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

// An exact solve that must succeed by naturality did not.
struct SolveFailure : Error {
  using Error::Error;
};

}  // namespace schurext
