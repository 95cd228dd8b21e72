// Small helpers around gmpxx rationals.
#pragma once

#include <gmpxx.h>

#include <string>

#include "monoval/errors.hpp"

namespace monoval {

/// Canonicalized rational num/den. Throws ZeroDenominator for den = 0.
inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ZeroDenominator();
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" with optional leading minus on p.
mpq_class parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const mpq_class& q);

/// q^e for integer e (negative allowed when q != 0).
mpq_class rational_pow(const mpq_class& q, long e);

}  // namespace monoval
