#ifndef GRSTD_ERROR_HPP
#define GRSTD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grstd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain (composite
/// modulus, mismatched moduli, non-coprime factors, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Division by a non-unit, inversion of an element of the maximal ideal.
class ArithmeticError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A configured resource cap (rank, auxiliary degree, precision, exact
/// minimal-polynomial degree) would be exceeded.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that cannot fail for a correct implementation
/// did fail (route disagreement, reducible tower polynomial, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void internal_failure(const std::string& what) {
  throw InternalError("internal assertion failed: " + what);
}

inline void check_internal(bool ok, const char* what) {
  if (!ok) internal_failure(what);
}

}  // namespace detail
}  // namespace grstd

#endif  // GRSTD_ERROR_HPP
