#include "monoval/exactvalue.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "monoval/rational.hpp"

namespace monoval {

PrimeBasis::PrimeBasis(std::vector<mpz_class> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw DomainError("prime basis must be nonempty");
  const mpz_class* prev = nullptr;
  for (const auto& p : primes_) {
    if (p < 2) throw DomainError("prime basis entries must be >= 2");
    if (prev && !(*prev < p)) throw DomainError("prime basis must be strictly increasing");
    if (mpz_probab_prime_p(p.get_mpz_t(), 64) == 0)
      throw DomainError("prime basis entry " + p.get_str() + " is not prime");
    prev = &p;
  }
}

PrimeBasisPtr make_prime_basis(std::vector<mpz_class> primes) {
  return std::make_shared<const PrimeBasis>(std::move(primes));
}

Value Value::one(PrimeBasisPtr basis) {
  std::vector<mpq_class> zeros(basis ? basis->size() : 0);
  return Value(std::move(basis), std::move(zeros));
}

Value::Value(PrimeBasisPtr basis, std::vector<mpq_class> exponents)
    : basis_(std::move(basis)), exponents_(std::move(exponents)) {
  if (!basis_) throw DomainError("value requires a prime basis");
  if (exponents_.size() != basis_->size())
    throw ShapeMismatch("exponent vector length does not match the prime basis");
}

Value make_value(PrimeBasisPtr basis, std::vector<mpq_class> exponents) {
  return Value(std::move(basis), std::move(exponents));
}

bool Value::is_one() const {
  if (is_zero()) return false;
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const mpq_class& q) { return q == 0; });
}

namespace {

void require_same_basis(const Value& a, const Value& b) {
  if (a.basis() == b.basis()) return;  // shared pointer fast path
  if (!(*a.basis() == *b.basis())) throw BasisMismatch();
}

}  // namespace

Value operator*(const Value& a, const Value& b) {
  if (a.is_zero() || b.is_zero()) return Value::zero();
  require_same_basis(a, b);
  std::vector<mpq_class> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return Value(a.basis(), std::move(e));
}

Value operator/(const Value& a, const Value& b) {
  if (b.is_zero()) throw ZeroDenominator();
  if (a.is_zero()) return Value::zero();
  require_same_basis(a, b);
  std::vector<mpq_class> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exponents()[i];
  return Value(a.basis(), std::move(e));
}

Value Value::pow(const mpq_class& q) const {
  if (is_zero()) {
    if (q <= 0) throw UndefinedPower();
    return Value::zero();
  }
  std::vector<mpq_class> e(exponents_);
  for (auto& x : e) x *= q;
  return Value(basis_, std::move(e));
}

Ordering value_compare(const Value& a, const Value& b) {
  if (a.is_zero() && b.is_zero()) return Ordering::EQ;
  if (a.is_zero()) return Ordering::LT;
  if (b.is_zero()) return Ordering::GT;
  require_same_basis(a, b);

  const std::size_t n = a.exponents().size();
  std::vector<mpq_class> diff(n);
  mpz_class denom_lcm(1);
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = a.exponents()[i] - b.exponents()[i];
    if (diff[i] != 0) {
      all_zero = false;
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), diff[i].get_den().get_mpz_t());
    }
  }
  if (all_zero) return Ordering::EQ;

  // sign(sum e_i log p_i) with integer e_i: compare the products of the
  // positive-exponent primes on each side.
  mpz_class lhs(1), rhs(1), term;
  for (std::size_t i = 0; i < n; ++i) {
    if (diff[i] == 0) continue;
    mpz_class e = diff[i].get_num() * (denom_lcm / diff[i].get_den());
    mpz_class mag = abs(e);
    if (!mag.fits_ulong_p()) throw Error("value exponent too large to compare");
    mpz_pow_ui(term.get_mpz_t(), a.basis()->primes()[i].get_mpz_t(), mag.get_ui());
    if (e > 0)
      lhs *= term;
    else
      rhs *= term;
  }
  int c = cmp(lhs, rhs);
  return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
}

std::string value_approx(const Value& v, int digits) {
  if (digits < 1) throw DomainError("digits must be >= 1");
  if (v.is_zero()) return "0";

  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits) * 4 + 96;
  mpfr_t acc, lg, q;
  mpfr_inits2(prec, acc, lg, q, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(acc, 1);
  const auto& primes = v.basis()->primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (v.exponents()[i] == 0) continue;
    mpfr_set_z(lg, primes[i].get_mpz_t(), MPFR_RNDN);
    mpfr_log(lg, lg, MPFR_RNDN);
    mpfr_set_q(q, v.exponents()[i].get_mpq_t(), MPFR_RNDN);
    mpfr_fma(acc, lg, q, acc, MPFR_RNDN);
  }
  mpfr_exp(acc, acc, MPFR_RNDN);

  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), acc,
                           MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  mpfr_clears(acc, lg, q, static_cast<mpfr_ptr>(nullptr));

  // mant stands for 0.<mant> * 10^exp10; lay out a plain decimal string.
  std::string out;
  long e = static_cast<long>(exp10);
  if (e <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + mant;
  } else if (e >= static_cast<long>(mant.size())) {
    out = mant + std::string(static_cast<std::size_t>(e) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(e)) + "." +
          mant.substr(static_cast<std::size_t>(e));
  }
  return out;
}

std::string value_to_string(const Value& v) {
  if (v.is_zero()) return "0";
  bool all_integral = true;
  for (const auto& e : v.exponents())
    if (e.get_den() != 1) all_integral = false;
  if (all_integral) {
    // an ordinary rational number
    mpq_class r(1);
    const auto& primes = v.basis()->primes();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const mpz_class& e = v.exponents()[i].get_num();
      if (e == 0) continue;
      if (!mpz_class(abs(e)).fits_slong_p()) { all_integral = false; break; }
      r *= rational_pow(mpq_class(primes[i]), e.get_si());
    }
    if (all_integral) return rational_to_string(r);
  }
  std::string out;
  const auto& primes = v.basis()->primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const mpq_class& e = v.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += primes[i].get_str();
    if (e.get_den() == 1 && e > 0)
      out += "^" + e.get_num().get_str();
    else
      out += "^(" + rational_to_string(e) + ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace monoval
