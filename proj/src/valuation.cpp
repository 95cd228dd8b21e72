#include "monoval/valuation.hpp"

#include <algorithm>
#include <utility>

namespace monoval {

MonomialValuation::MonomialValuation(int nvars, PrimeBasisPtr basis, QMatrix weights,
                                     std::optional<std::vector<mpq_class>> shift)
    : nvars_(nvars), basis_(std::move(basis)), weights_(std::move(weights)),
      shift_(std::move(shift)) {
  if (nvars_ < 1) throw DomainError("valuation needs at least one variable");
  if (!basis_) throw DomainError("valuation requires a prime basis");
  if (weights_.cols() != nvars_ ||
      weights_.rows() != static_cast<int>(basis_->size()))
    throw ShapeMismatch("weight matrix must be |basis| x nvars");
  if (shift_ && shift_->size() != static_cast<std::size_t>(nvars_))
    throw ShapeMismatch("shift vector length does not match nvars");

  var_values_.reserve(static_cast<std::size_t>(nvars_));
  const Value one = Value::one(basis_);
  center_exists_ = true;
  for (int j = 0; j < nvars_; ++j) {
    std::vector<mpq_class> exps(basis_->size());
    for (int i = 0; i < weights_.rows(); ++i)
      exps[static_cast<std::size_t>(i)] = -weights_.at(i, j);
    var_values_.emplace_back(basis_, std::move(exps));
    if (var_values_.back() > one) center_exists_ = false;
  }
}

bool MonomialValuation::has_shift() const {
  if (!shift_) return false;
  return std::any_of(shift_->begin(), shift_->end(),
                     [](const mpq_class& q) { return q != 0; });
}

Value MonomialValuation::monomial_value(const Poly::Exponents& exponents) const {
  if (exponents.size() != static_cast<std::size_t>(nvars_))
    throw ShapeMismatch("exponent vector length does not match nvars");
  std::vector<mpq_class> exps(basis_->size());
  for (int i = 0; i < weights_.rows(); ++i) {
    mpq_class acc(0);
    for (int j = 0; j < nvars_; ++j)
      if (exponents[static_cast<std::size_t>(j)] != 0)
        acc += weights_.at(i, j) * exponents[static_cast<std::size_t>(j)];
    exps[static_cast<std::size_t>(i)] = -acc;
  }
  return Value(basis_, std::move(exps));
}

Poly MonomialValuation::in_monomial_coordinates(const Poly& f) const {
  if (f.nvars() != nvars_) throw NvarsMismatch();
  if (!has_shift()) return f;
  return shift_coordinates(f, *shift_);
}

Value MonomialValuation::value_of(const Poly& f) const {
  Poly g = in_monomial_coordinates(f);
  Value best = Value::zero();
  for (const auto& [e, c] : g.terms()) {
    Value v = monomial_value(e);
    if (best.is_zero() || best < v) best = std::move(v);
  }
  return best;
}

Value MonomialValuation::value_of(const RatFn& f) const {
  return value_of(f.num()) / value_of(f.den());
}

Poly MonomialValuation::top_form(const Poly& f) const {
  if (f.is_zero()) throw ZeroPolynomial();
  Poly g = in_monomial_coordinates(f);
  Value top = value_of(f);
  Poly result(nvars_);
  for (const auto& [e, c] : g.terms())
    if (monomial_value(e) == top) result.add_term(e, c);
  return result;
}

CenterDesc MonomialValuation::center() const {
  if (!center_exists_) throw NoCenter();
  CenterDesc desc;
  const Value one = Value::one(basis_);
  for (int j = 0; j < nvars_; ++j) {
    if (variable_value(j) < one)
      desc.ideal_vars.push_back(j);
    else
      desc.residue_field_vars.push_back(j);
  }
  return desc;
}

int MonomialValuation::rational_rank() const { return rank(weights_); }

}  // namespace monoval
