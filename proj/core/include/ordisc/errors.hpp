#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordisc {

/// Root of every exception thrown by the library.
///
/// Two families exist. InputError covers everything a caller can cause with
/// bad data (malformed text, mismatched fields, unsupported sizes).
/// ConsistencyError is raised when an internal cross-check fails; it signals
/// either a library bug or a counterexample to a checked identity.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public InputError {
 public:
  DivisionByZero() : InputError("division by zero") {}
};

class SpecMismatch : public InputError {
 public:
  explicit SpecMismatch(const std::string& what)
      : InputError("field mismatch: " + what) {}
};

class NotFiniteField : public InputError {
 public:
  NotFiniteField() : InputError("operation requires a finite field") {}
};

class NotMonic : public InputError {
 public:
  explicit NotMonic(const std::string& what) : InputError("not monic: " + what) {}
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError("syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public InputError {
 public:
  explicit UnknownVariable(const std::string& name)
      : InputError("unknown variable '" + name + "'") {}
};

class NonIntegerExponent : public InputError {
 public:
  explicit NonIntegerExponent(std::size_t position)
      : InputError("exponent must be a natural number (at " +
                   std::to_string(position) + ")") {}
};

class NotInField : public InputError {
 public:
  explicit NotInField(const std::string& what)
      : InputError("value not in field: " + what) {}
};

class FormalDegreeTooSmall : public InputError {
 public:
  FormalDegreeTooSmall() : InputError("actual degree exceeds formal degree") {}
};

class SizeUnsupported : public InputError {
 public:
  explicit SizeUnsupported(std::size_t n)
      : InputError("determinant size " + std::to_string(n) +
                   " unsupported for rings without exact division") {}
};

class CapMismatch : public InputError {
 public:
  CapMismatch() : InputError("truncated series with different caps") {}
};

class DegreeUnsupported : public InputError {
 public:
  explicit DegreeUnsupported(unsigned d)
      : InputError("degree " + std::to_string(d) + " unsupported") {}
};

class ExtensionDegreeExceeded : public InputError {
 public:
  explicit ExtensionDegreeExceeded(std::size_t m)
      : InputError("irreducible factor of degree " + std::to_string(m) +
                   " exceeds the extension limit") {}
};

class DiscriminantIdenticallyZero : public InputError {
 public:
  DiscriminantIdenticallyZero()
      : InputError("Y-discriminant vanishes identically") {}
};

class DiscriminantZero : public InputError {
 public:
  DiscriminantZero() : InputError("discriminant is zero, the invariant is infinite") {}
};

class RootsNotSplit : public InputError {
 public:
  RootsNotSplit()
      : InputError("fiber does not split into linear factors over the working field") {}
};

class PrecisionZero : public InputError {
 public:
  PrecisionZero() : InputError("precision cap must be positive") {}
};

class PrecisionInsufficient : public InputError {
 public:
  explicit PrecisionInsufficient(unsigned cap)
      : InputError("discriminant order not certified below cap " +
                   std::to_string(cap)),
        cap_(cap) {}
  unsigned cap() const { return cap_; }

 private:
  unsigned cap_;
};

class BudgetExceeded : public InputError {
 public:
  explicit BudgetExceeded(std::size_t points)
      : InputError("scan would test " + std::to_string(points) +
                   " points, above the budget") {}
};

class CharPUnsupported : public InputError {
 public:
  CharPUnsupported() : InputError("operation requires characteristic zero") {}
};

class FormulaViolation : public ConsistencyError {
 public:
  explicit FormulaViolation(const std::string& what)
      : ConsistencyError("formula violation: " + what) {}
};

}  // namespace ordisc
