#pragma once

#include <stdexcept>
#include <string>

namespace sccc {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values from different semiring instances were combined.
struct InstanceMismatch : Error {
  using Error::Error;
};

/// Multiplicative inverse requested for a non-invertible element.
struct NotInvertible : Error {
  using Error::Error;
};

/// Composition or pairing of morphisms whose objects do not match.
struct ObjectMismatch : Error {
  using Error::Error;
};

/// A 1x1 morphism on the unit object was expected.
struct NotAScalar : Error {
  using Error::Error;
};

/// Matrix shape inconsistent with the requested operation.
struct ShapeError : Error {
  using Error::Error;
};

/// Term or relation text failed to parse; carries a 1-based position.
struct SyntaxError : Error {
  int line = 0;
  int column = 0;
  SyntaxError(const std::string& msg, int line_, int col_)
      : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_),
        column(col_) {}
};

/// A term is ill-typed; the message names the mismatched objects.
struct TypeError : Error {
  using Error::Error;
};

/// A generator appears in a term but has no matrix bound in the model.
struct UnboundGenerator : Error {
  using Error::Error;
};

}  // namespace sccc
