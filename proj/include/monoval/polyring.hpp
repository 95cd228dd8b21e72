// Sparse multivariate polynomials and rational functions over Q.
// Terms live in a map keyed by exponent vector, so iteration order is
// lexicographic and all derived output is deterministic.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "monoval/errors.hpp"

namespace monoval {

class Poly {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, mpq_class>;

  explicit Poly(int nvars);

  static Poly constant(int nvars, const mpq_class& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, Exponents exponents, const mpq_class& coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int total_degree() const;

  /// Adds c * X^e, erasing the term if the coefficient cancels.
  void add_term(const Exponents& exponents, const mpq_class& coeff);

  Poly operator-() const;
  Poly pow(int k) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const mpq_class& c);
  friend Poly operator*(const mpq_class& c, const Poly& a) { return a * c; }

  bool operator==(const Poly& other) const = default;

private:
  int nvars_;
  TermMap terms_;
};

/// Quotient of polynomials, den != 0. Not reduced to lowest terms; equality
/// is the cross-multiplication test.
class RatFn {
public:
  RatFn(Poly num, Poly den);

  /// f/1.
  explicit RatFn(Poly num);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const mpq_class& c);

private:
  Poly num_;
  Poly den_;
};

/// a.num * b.den == b.num * a.den.
bool ratfn_eq(const RatFn& a, const RatFn& b);

/// Returns g with g(T) = f(T + a), i.e. f rewritten in the coordinates X - a.
Poly shift_coordinates(const Poly& f, const std::vector<mpq_class>& a);

}  // namespace monoval
