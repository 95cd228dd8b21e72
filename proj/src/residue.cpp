#include "monoval/residue.hpp"

#include <stdexcept>
#include <utility>

namespace monoval {

namespace {

void require_same_ngens(int a, int b) {
  if (a != b) throw DomainError("residue elements belong to different presentations");
}

void laurent_add_term(LaurentMap& m, const std::vector<mpz_class>& e, const mpq_class& c) {
  if (c == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

LaurentMap laurent_add(const LaurentMap& a, const LaurentMap& b) {
  LaurentMap r = a;
  for (const auto& [e, c] : b) laurent_add_term(r, e, c);
  return r;
}

LaurentMap laurent_mul(const LaurentMap& a, const LaurentMap& b) {
  LaurentMap r;
  std::vector<mpz_class> e;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      e = ea;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
      laurent_add_term(r, e, ca * cb);
    }
  }
  return r;
}

}  // namespace

ResidueElement::ResidueElement(int ngens, LaurentMap num, LaurentMap den)
    : ngens_(ngens), num_(std::move(num)), den_(std::move(den)) {
  if (ngens_ < 0) throw DomainError("negative generator count");
  if (den_.empty()) throw ZeroDenominator();
  for (const auto* m : {&num_, &den_})
    for (const auto& [e, c] : *m)
      if (e.size() != static_cast<std::size_t>(ngens_))
        throw ShapeMismatch("Laurent exponent length does not match generator count");
}

ResidueElement ResidueElement::zero(int ngens) {
  return constant(ngens, mpq_class(0));
}

ResidueElement ResidueElement::one(int ngens) { return constant(ngens, mpq_class(1)); }

ResidueElement ResidueElement::constant(int ngens, const mpq_class& c) {
  LaurentMap num, den;
  std::vector<mpz_class> e(static_cast<std::size_t>(ngens));
  if (c != 0) num.emplace(e, c);
  den.emplace(e, mpq_class(1));
  return ResidueElement(ngens, std::move(num), std::move(den));
}

ResidueElement ResidueElement::generator(int ngens, int index) {
  if (index < 0 || index >= ngens) throw DomainError("generator index out of range");
  std::vector<mpz_class> e(static_cast<std::size_t>(ngens));
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(ngens, std::move(e), mpq_class(1));
}

ResidueElement ResidueElement::monomial(int ngens, std::vector<mpz_class> exponents,
                                        const mpq_class& coeff) {
  LaurentMap num, den;
  den.emplace(std::vector<mpz_class>(static_cast<std::size_t>(ngens)), mpq_class(1));
  if (coeff != 0) num.emplace(std::move(exponents), coeff);
  return ResidueElement(ngens, std::move(num), std::move(den));
}

ResidueElement ResidueElement::reciprocal() const {
  if (num_.empty()) throw ZeroDenominator();
  return ResidueElement(ngens_, den_, num_);
}

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
  require_same_ngens(a.ngens_, b.ngens_);
  return ResidueElement(a.ngens_,
                        laurent_add(laurent_mul(a.num_, b.den_), laurent_mul(b.num_, a.den_)),
                        laurent_mul(a.den_, b.den_));
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) {
  ResidueElement neg = b * ResidueElement::constant(b.ngens_, mpq_class(-1));
  return a + neg;
}

ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
  require_same_ngens(a.ngens_, b.ngens_);
  return ResidueElement(a.ngens_, laurent_mul(a.num_, b.num_), laurent_mul(a.den_, b.den_));
}

bool residue_eq(const ResidueElement& a, const ResidueElement& b) {
  require_same_ngens(a.ngens(), b.ngens());
  return laurent_mul(a.num(), b.den()) == laurent_mul(b.num(), a.den());
}

ResidueFieldDesc::ResidueFieldDesc(MonomialValuation valuation, LatticeBasis kernel)
    : valuation_(std::move(valuation)), kernel_(std::move(kernel)) {}

ResidueFieldDesc residue_field_desc(const MonomialValuation& v) {
  return ResidueFieldDesc(v, kernel_basis(v.weights()));
}

ResidueElement residue_of(const ResidueFieldDesc& desc, const RatFn& f) {
  const MonomialValuation& v = desc.valuation();
  Value val = v.value_of(f);
  const Value one = Value::one(v.basis());
  if (val > one) throw ValueExceedsOne();
  if (val < one) return ResidueElement::zero(desc.generator_count());
  Poly den_top = v.top_form(f.den());
  return residue_of_at(desc, f, den_top.terms().begin()->first);
}

ResidueElement residue_of_at(const ResidueFieldDesc& desc, const RatFn& f,
                             const Poly::Exponents& den_top_exponent) {
  const MonomialValuation& v = desc.valuation();
  Value val = v.value_of(f);
  const Value one = Value::one(v.basis());
  if (val > one) throw ValueExceedsOne();
  if (val < one) return ResidueElement::zero(desc.generator_count());

  Poly num_top = v.top_form(f.num());
  Poly den_top = v.top_form(f.den());
  if (den_top.terms().find(den_top_exponent) == den_top.terms().end())
    throw DomainError("reference exponent is not a top exponent of the denominator");

  // Every exponent difference against the reference monomial has value one,
  // so it lies in the kernel lattice and has unique Y-coordinates.
  auto to_laurent = [&](const Poly& top) {
    LaurentMap m;
    std::vector<mpz_class> diff(static_cast<std::size_t>(v.nvars()));
    for (const auto& [e, c] : top.terms()) {
      for (std::size_t j = 0; j < diff.size(); ++j)
        diff[j] = static_cast<long>(e[j]) - static_cast<long>(den_top_exponent[j]);
      auto coords = lattice_coords(desc.kernel(), diff);
      if (!coords)
        throw std::logic_error("internal invariant violation: top-form exponent "
                               "difference is outside the kernel lattice");
      m.emplace(std::move(*coords), c);
    }
    return m;
  };

  return ResidueElement(desc.generator_count(), to_laurent(num_top), to_laurent(den_top));
}

RatFn lift(const ResidueFieldDesc& desc, const ResidueElement& e) {
  const MonomialValuation& v = desc.valuation();
  const int n = v.nvars();
  if (e.ngens() != desc.generator_count())
    throw DomainError("residue element does not match the presentation");
  if (e.is_zero())
    return RatFn(Poly(n), Poly::constant(n, 1));

  // Substitute Y_i = X^{B_i}; terms become Laurent monomials in X.
  auto substitute = [&](const LaurentMap& m) {
    LaurentMap r;  // exponents now length n
    for (const auto& [w, c] : m) {
      std::vector<mpz_class> x(static_cast<std::size_t>(n));
      for (int i = 0; i < desc.generator_count(); ++i) {
        if (w[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < n; ++j)
          x[static_cast<std::size_t>(j)] +=
              w[static_cast<std::size_t>(i)] * desc.kernel().vectors().at(i, j);
      }
      laurent_add_term(r, x, c);
    }
    return r;
  };
  LaurentMap num = substitute(e.num());
  LaurentMap den = substitute(e.den());

  // Multiply both sides by one monomial to clear negative exponents.
  std::vector<mpz_class> mu(static_cast<std::size_t>(n));
  bool first = true;
  for (const auto* m : {&num, &den}) {
    for (const auto& [x, c] : *m) {
      for (std::size_t j = 0; j < mu.size(); ++j)
        if (first || x[j] < mu[j]) mu[j] = x[j];
      first = false;
    }
  }
  auto to_poly = [&](const LaurentMap& m) {
    Poly p(n);
    Poly::Exponents exps(static_cast<std::size_t>(n));
    for (const auto& [x, c] : m) {
      for (std::size_t j = 0; j < exps.size(); ++j) {
        mpz_class d = x[j] - mu[j];
        if (!d.fits_sint_p()) throw Error("lifted exponent too large");
        exps[j] = static_cast<int>(d.get_si());
      }
      p.add_term(exps, c);
    }
    return p;
  };
  Poly num_poly = to_poly(num);
  Poly den_poly = to_poly(den);
  if (v.has_shift()) {
    std::vector<mpq_class> back(v.shift()->size());
    for (std::size_t j = 0; j < back.size(); ++j) back[j] = -(*v.shift())[j];
    num_poly = shift_coordinates(num_poly, back);
    den_poly = shift_coordinates(den_poly, back);
  }
  return RatFn(std::move(num_poly), std::move(den_poly));
}

AbhyankarReport abhyankar_check(const MonomialValuation& v) {
  AbhyankarReport r;
  // Rank comes from elimination over Q, trdeg from the integer kernel
  // lattice; the equality line is a genuine cross-check of the two routes.
  r.rational_rank = v.rational_rank();
  r.trdeg = kernel_basis(v.weights()).count();
  r.nvars = v.nvars();
  r.equality = (r.rational_rank + r.trdeg == r.nvars);
  return r;
}

}  // namespace monoval
