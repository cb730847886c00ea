#ifndef REESKIT_ERROR_HPP
#define REESKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace reeskit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& msg) : Error("ring mismatch: " + msg) {}
};

struct ExponentOverflow : Error {
  explicit ExponentOverflow(const std::string& msg) : Error("exponent overflow: " + msg) {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& msg) : Error("zero polynomial: " + msg) {}
};

struct UnmappedVariable : Error {
  explicit UnmappedVariable(const std::string& msg) : Error("unmapped variable: " + msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct NonZeroDimensional : Error {
  explicit NonZeroDimensional(const std::string& msg)
      : Error("not zero-dimensional: " + msg) {}
};

struct ContainmentViolation : Error {
  explicit ContainmentViolation(const std::string& msg)
      : Error("containment violation: " + msg) {}
};

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& msg) : Error("not homogeneous: " + msg) {}
};

// A configured resource limit was hit.  Never a silent truncation.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error("budget exceeded: " + msg) {}
};

struct BoundExceeded : Error {
  explicit BoundExceeded(const std::string& msg) : Error("search bound exceeded: " + msg) {}
};

struct PreconditionViolation : Error {
  explicit PreconditionViolation(const std::string& msg) : Error("precondition: " + msg) {}
};

// An internal cross-check failed.  Signals a bug, not a mathematical possibility.
struct InternalCheckFailure : Error {
  explicit InternalCheckFailure(const std::string& msg)
      : Error("internal check failed: " + msg) {}
};

}  // namespace reeskit

#endif
