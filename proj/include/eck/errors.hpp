#pragma once

#include <stdexcept>
#include <string>

namespace eck {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

class IllFormedMap : public Error {
 public:
  using Error::Error;
};

class ZeroWeight : public Error {
 public:
  using Error::Error;
};

/// Bad parameters (n out of range, kind not valid for n, k out of range...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A sum over fixed points kept a dependence on the torus variables.
class ResidualTDependence : public Error {
 public:
  using Error::Error;
};

class StructuralRewriteFailed : public Error {
 public:
  using Error::Error;
};

class TruncationTooLow : public Error {
 public:
  using Error::Error;
};

class NonvanishingNegativeUPart : public Error {
 public:
  using Error::Error;
};

class ZeroClass : public Error {
 public:
  using Error::Error;
};

}  // namespace eck
