#ifndef FUZZY_ERRORS_HPP
#define FUZZY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzy {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (level outside (0,1], t-norm argument outside [0,1], empty set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configuration or construction request cannot be honoured
/// (non-strict t-norm where strictness is required, bad generator, bad
/// index rule, malformed config string).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a structural invariant (non-nested cuts, empty
/// sample, non-monotone quantile table, unparsable number).
class DataError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for something it cannot evaluate exactly, such
/// as an extension of a binary map without an interval extension.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzy

#endif  // FUZZY_ERRORS_HPP
