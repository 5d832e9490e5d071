#pragma once

#include <stdexcept>
#include <string>

namespace qfloer {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto its documented exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Characteristic polynomial does not split into rational linear factors.
class SplittingError : public Error {
 public:
  using Error::Error;
};

class DivisibilityError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotASphere : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

// Duality relation or sphere diagonal of a lattice is violated.
class LatticeInvariantError : public Error {
 public:
  using Error::Error;
};

// Malformed input file or argument.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class MissingTensor : public Error {
 public:
  using Error::Error;
};

// A tensor entry whose output degree disagrees with the declared shift.
class DegreeError : public Error {
 public:
  using Error::Error;
};

class NotEquivariant : public Error {
 public:
  using Error::Error;
};

// A chain-level identity that a construction relies on does not hold.
class IdentityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qfloer
