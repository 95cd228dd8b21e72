#include "monoval/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace monoval {

namespace {

void require_same_nvars(int a, int b) {
  if (a != b) throw NvarsMismatch();
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw DomainError("a polynomial needs at least one variable");
}

Poly Poly::constant(int nvars, const mpq_class& c) {
  Poly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(nvars, std::move(e), mpq_class(1));
}

Poly Poly::monomial(int nvars, Exponents exponents, const mpq_class& coeff) {
  Poly p(nvars);
  p.add_term(exponents, coeff);
  return p;
}

void Poly::add_term(const Exponents& exponents, const mpq_class& coeff) {
  if (exponents.size() != static_cast<std::size_t>(nvars_))
    throw ShapeMismatch("exponent vector length does not match nvars");
  for (int e : exponents)
    if (e < 0) throw DomainError("polynomial exponents must be nonnegative");
  if (coeff == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw DomainError("negative polynomial power");
  Poly r = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_nvars(a.nvars_, b.nvars_);
  Poly r(a);
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_nvars(a.nvars_, b.nvars_);
  Poly r(a);
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_nvars(a.nvars_, b.nvars_);
  Poly r(a.nvars_);
  Poly::Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly operator*(const Poly& a, const mpq_class& c) {
  Poly r(a.nvars_);
  if (c == 0) return r;
  for (const auto& [e, coeff] : a.terms_) r.terms_.emplace(e, coeff * c);
  return r;
}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_nvars(num_.nvars(), den_.nvars());
  if (den_.is_zero()) throw ZeroDenominator();
}

RatFn::RatFn(Poly num) : RatFn(num, Poly::constant(num.nvars(), 1)) {}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const mpq_class& c) { return RatFn(a.num_ * c, a.den_); }

bool ratfn_eq(const RatFn& a, const RatFn& b) {
  require_same_nvars(a.nvars(), b.nvars());
  return a.num() * b.den() == b.num() * a.den();
}

Poly shift_coordinates(const Poly& f, const std::vector<mpq_class>& a) {
  if (a.size() != static_cast<std::size_t>(f.nvars()))
    throw ShapeMismatch("shift vector length does not match nvars");
  if (std::all_of(a.begin(), a.end(), [](const mpq_class& q) { return q == 0; })) return f;

  const int n = f.nvars();
  // powers[j][k] = (X_j + a_j)^k, built on demand
  std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n),
                                        {Poly::constant(n, 1)});
  auto power = [&](int j, int k) -> const Poly& {
    auto& col = powers[static_cast<std::size_t>(j)];
    while (static_cast<int>(col.size()) <= k) {
      Poly base = Poly::variable(n, j) + Poly::constant(n, a[static_cast<std::size_t>(j)]);
      col.push_back(col.back() * base);
    }
    return col[static_cast<std::size_t>(k)];
  };

  Poly result(n);
  for (const auto& [e, c] : f.terms()) {
    Poly prod = Poly::constant(n, c);
    for (int j = 0; j < n; ++j)
      if (e[static_cast<std::size_t>(j)] > 0) prod = prod * power(j, e[static_cast<std::size_t>(j)]);
    result = result + prod;
  }
  return result;
}

}  // namespace monoval
