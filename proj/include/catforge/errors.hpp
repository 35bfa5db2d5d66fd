#pragma once

#include <stdexcept>
#include <string>

#include "catforge/ids.hpp"

namespace catforge {

// Base for all workbench errors. Law violations are not errors; they are
// reported through LawReport-style values. Exceptions are reserved for
// structural problems: malformed data, broken preconditions, exceeded caps.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Out-of-range index, ill-typed field, or a piece of structure that does not
// fit together (distinct from a violated category law).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// compose() called on a non-composable pair; carries both arrows.
class CompositionMismatch : public Error {
 public:
  CompositionMismatch(ArrowId g, ArrowId f, const std::string& msg) : Error(msg), g(g), f(f) {}
  ArrowId g;
  ArrowId f;
};

// A documented operation precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Directed cycle found while enumerating paths in strict acyclic mode.
class CycleError : public Error {
 public:
  using Error::Error;
};

// A configurable size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Verified inputs produced an impossible situation (e.g. a verified product
// cone with two mediators). Indicates corrupted or unverified data.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace catforge
