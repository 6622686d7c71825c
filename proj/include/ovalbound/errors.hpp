#ifndef OVALBOUND_ERRORS_HPP
#define OVALBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ovalbound {

/// Base class for all library errors. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// scheme_core
class SyntaxError : public Error {
public:
  using Error::Error;
};
class AmbientMismatch : public Error {
public:
  using Error::Error;
};
class UnsupportedAmbient : public Error {
public:
  using Error::Error;
};

// bounds_arith
class NotPrime : public Error {
public:
  using Error::Error;
};
class OutOfDomain : public Error {
public:
  using Error::Error;
};
class FactorizationLimit : public Error {
public:
  using Error::Error;
};

// cover_calculus
class ParityError : public Error {
public:
  using Error::Error;
};
class NonIntegerSignature : public Error {
public:
  using Error::Error;
};
class NonIntegerEuler : public Error {
public:
  using Error::Error;
};

// quad_forms
class DimensionMismatch : public Error {
public:
  using Error::Error;
};
class DegenerateForm : public Error {
public:
  using Error::Error;
};
class ParityViolation : public Error {
public:
  using Error::Error;
};
class OddDifference : public Error {
public:
  using Error::Error;
};

// verdict_engine
class InvalidSpec : public Error {
public:
  using Error::Error;
};
class MissingChi : public Error {
public:
  using Error::Error;
};

} // namespace ovalbound

#endif
