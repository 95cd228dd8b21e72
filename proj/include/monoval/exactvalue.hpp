// Exact positive reals of the form p1^q1 * ... * pm^qm over a fixed basis of
// primes, with an absorbing Zero below them. Prime logarithms are linearly
// independent over Q, so equality is exponent-vector equality and order
// comparisons reduce to arbitrary-precision integer comparisons.
#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "monoval/errors.hpp"

namespace monoval {

enum class Ordering { LT, EQ, GT };

/// Ascending list of distinct primes; primality is certified at construction.
class PrimeBasis {
public:
  explicit PrimeBasis(std::vector<mpz_class> primes);

  std::size_t size() const { return primes_.size(); }
  const std::vector<mpz_class>& primes() const { return primes_; }

  bool operator==(const PrimeBasis& other) const { return primes_ == other.primes_; }

private:
  std::vector<mpz_class> primes_;
};

using PrimeBasisPtr = std::shared_ptr<const PrimeBasis>;

PrimeBasisPtr make_prime_basis(std::vector<mpz_class> primes);

class Value {
public:
  /// The value |0|, strictly below every positive value and absorbing under *.
  static Value zero() { return Value(); }
  /// The multiplicative identity (all exponents zero).
  static Value one(PrimeBasisPtr basis);

  /// make_value: the positive real prod p_i^{exponents_i}.
  Value(PrimeBasisPtr basis, std::vector<mpq_class> exponents);

  bool is_zero() const { return basis_ == nullptr; }
  bool is_one() const;

  /// Exponent vector; only meaningful for non-Zero values.
  const std::vector<mpq_class>& exponents() const { return exponents_; }
  const PrimeBasisPtr& basis() const { return basis_; }

  Value pow(const mpq_class& q) const;

  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);

private:
  Value() = default;

  PrimeBasisPtr basis_;  // nullptr encodes Zero
  std::vector<mpq_class> exponents_;
};

Value make_value(PrimeBasisPtr basis, std::vector<mpq_class> exponents);

/// Exact total order consistent with the real embedding. Clears exponent
/// denominators and compares the two integer products built from the
/// positive-exponent primes of each side.
Ordering value_compare(const Value& a, const Value& b);

inline bool operator==(const Value& a, const Value& b) {
  return value_compare(a, b) == Ordering::EQ;
}
inline bool operator<(const Value& a, const Value& b) {
  return value_compare(a, b) == Ordering::LT;
}
inline bool operator>(const Value& a, const Value& b) {
  return value_compare(a, b) == Ordering::GT;
}
inline bool operator<=(const Value& a, const Value& b) { return !(a > b); }
inline bool operator>=(const Value& a, const Value& b) { return !(a < b); }

/// Decimal approximation with the requested number of significant digits.
std::string value_approx(const Value& v, int digits);

/// "0", "1", "1/4", or a factored form like "2^(1/2)*3^(-1/3)".
std::string value_to_string(const Value& v);

}  // namespace monoval
