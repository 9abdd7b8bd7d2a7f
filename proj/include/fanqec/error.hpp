#pragma once

#include <stdexcept>
#include <string>

namespace fanqec {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exact division left a remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// p(x/2) has a non-integer coefficient.
class NotIntegral : public Error {
 public:
  using Error::Error;
};

// Bracket endpoints do not carry the required strict sign change.
class BadBracket : public Error {
 public:
  using Error::Error;
};

// A quantity that is not defined for the given index (e.g. the minimal zero
// of a constant polynomial).
class Undefined : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NearSingular : public Error {
 public:
  using Error::Error;
};

// A strict ordering that the fan-graph theory guarantees was observed to fail.
class OrderingViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fanqec
