// The residue field of K(X) with respect to a monomial valuation, presented
// as the rational function field k(Y_1..Y_{n-r}) where Y_i is the class of
// the monomial X^{B_i} and B_1..B_{n-r} is the canonical basis of the kernel
// lattice of the weight matrix. residue_of maps the subring of value <= 1
// onto this field via top forms; lift goes back by substituting Y_i = X^{B_i}.
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "monoval/lattice.hpp"
#include "monoval/polyring.hpp"
#include "monoval/valuation.hpp"

namespace monoval {

/// Laurent polynomial in the residue generators: exponent vector -> nonzero
/// rational coefficient.
using LaurentMap = std::map<std::vector<mpz_class>, mpq_class>;

/// Element of k(Y_1..Y_k) as a quotient of Laurent polynomials, den != 0.
/// Equality is cross-multiplication; no reduction to lowest terms.
class ResidueElement {
public:
  static ResidueElement zero(int ngens);
  static ResidueElement one(int ngens);
  static ResidueElement constant(int ngens, const mpq_class& c);
  static ResidueElement generator(int ngens, int index);
  static ResidueElement monomial(int ngens, std::vector<mpz_class> exponents,
                                 const mpq_class& coeff);
  ResidueElement(int ngens, LaurentMap num, LaurentMap den);

  int ngens() const { return ngens_; }
  bool is_zero() const { return num_.empty(); }
  const LaurentMap& num() const { return num_; }
  const LaurentMap& den() const { return den_; }

  ResidueElement reciprocal() const;  // throws ZeroDenominator on 0

  friend ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);
  friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);

private:
  int ngens_;
  LaurentMap num_;
  LaurentMap den_;
};

/// Equality in the rational function field k(Y).
bool residue_eq(const ResidueElement& a, const ResidueElement& b);

/// Presentation of the residue field of a monomial valuation.
class ResidueFieldDesc {
public:
  ResidueFieldDesc(MonomialValuation valuation, LatticeBasis kernel);

  const MonomialValuation& valuation() const { return valuation_; }
  const LatticeBasis& kernel() const { return kernel_; }
  /// n - rational_rank, the transcendence degree over k.
  int generator_count() const { return kernel_.count(); }
  std::string generator_name(int i) const { return "Y" + std::to_string(i + 1); }

private:
  MonomialValuation valuation_;
  LatticeBasis kernel_;
};

ResidueFieldDesc residue_field_desc(const MonomialValuation& v);

/// Reduction of f modulo the valuation: 0 when |f| < 1, otherwise the class
/// of f written in the Y generators. Throws ValueExceedsOne when |f| > 1.
ResidueElement residue_of(const ResidueFieldDesc& desc, const RatFn& f);

/// Same, but with an explicit choice of the reference exponent taken from the
/// top form of the denominator (the result is independent of the choice; the
/// default is the lexicographically smallest exponent).
ResidueElement residue_of_at(const ResidueFieldDesc& desc, const RatFn& f,
                             const Poly::Exponents& den_top_exponent);

/// Substitutes Y_i = X^{B_i}: a rational function of value exactly one (for
/// e != 0) whose residue is e.
RatFn lift(const ResidueFieldDesc& desc, const ResidueElement& e);

struct AbhyankarReport {
  int rational_rank;
  int trdeg;
  int nvars;
  bool equality;
};

/// rational_rank + trdeg vs nvars; equality always holds for monomial
/// valuations.
AbhyankarReport abhyankar_check(const MonomialValuation& v);

}  // namespace monoval
