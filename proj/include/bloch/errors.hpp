#pragma once

#include <stdexcept>
#include <string>

namespace bloch {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class DivisionNearZero : public Error {
 public:
  using Error::Error;
};

class LogDomain : public Error {
 public:
  using Error::Error;
};

class NonFiniteValue : public Error {
 public:
  using Error::Error;
};

class NotSelfMap : public Error {
 public:
  using Error::Error;
};

class PoorConvergence : public Error {
 public:
  using Error::Error;
};

class NonFiniteIntegrand : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

class AtCriticalValue : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class UnsupportedSymbol : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotBounded : public Error {
 public:
  using Error::Error;
};

}  // namespace bloch
