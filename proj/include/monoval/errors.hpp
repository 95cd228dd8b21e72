// Error types shared across the library. DomainError and its children map to
// CLI exit code 1, ParseError/SessionError to exit code 2.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoval {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated.
class DomainError : public Error {
public:
  using Error::Error;
};

class BasisMismatch final : public DomainError {
public:
  BasisMismatch() : DomainError("values use different prime bases") {}
};

class NvarsMismatch final : public DomainError {
public:
  NvarsMismatch() : DomainError("operands have different numbers of variables") {}
};

class ShapeMismatch final : public DomainError {
public:
  explicit ShapeMismatch(const std::string& what) : DomainError(what) {}
};

class ZeroDenominator final : public DomainError {
public:
  ZeroDenominator() : DomainError("denominator is zero") {}
};

class ZeroPolynomial final : public DomainError {
public:
  ZeroPolynomial() : DomainError("operation is undefined for the zero polynomial") {}
};

class UndefinedPower final : public DomainError {
public:
  UndefinedPower() : DomainError("zero value cannot be raised to a nonpositive power") {}
};

class NoCenter final : public DomainError {
public:
  NoCenter() : DomainError("valuation has no center: some variable has value > 1") {}
};

class ValueExceedsOne final : public DomainError {
public:
  ValueExceedsOne() : DomainError("value exceeds one: element lies outside the valuation ring") {}
};

class CenterNotInChart final : public DomainError {
public:
  CenterNotInChart()
      : DomainError("center lies in the other chart of the blow-up: |g| > |h|") {}
};

class InfiniteGroup final : public DomainError {
public:
  explicit InfiniteGroup(std::size_t bound)
      : DomainError("group closure exceeded " + std::to_string(bound) +
                     " elements; the generated group is not finite") {}
};

class NotInvariant final : public DomainError {
public:
  explicit NotInvariant(const std::string& what) : DomainError(what) {}
};

class NotInvariantFunction final : public DomainError {
public:
  NotInvariantFunction() : DomainError("function is not invariant under the group action") {}
};

/// Expression syntax error; offset is a 0-based character position.
class ParseError final : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Malformed session file.
class SessionError final : public Error {
public:
  using Error::Error;
};

}  // namespace monoval
