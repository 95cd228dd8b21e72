// Monomial valuations on k[X_1..X_n]: |f| is the max over the terms of f of
// the prescribed variable values r_j = |X_j|. Values are exact (exactvalue),
// weights are an m x n rational matrix S over a prime basis with
// |X_j| = prod_i p_i^(-S_ij). An optional shift vector a makes the valuation
// monomial in the coordinates X_j - a_j (k-rational center).
#pragma once

#include <optional>
#include <vector>

#include "monoval/exactvalue.hpp"
#include "monoval/lattice.hpp"
#include "monoval/polyring.hpp"

namespace monoval {

/// Partition of the variables by the center's prime ideal: the ideal is
/// generated by the variables with value < 1, the residue field of the center
/// is generated by those with value = 1.
struct CenterDesc {
  std::vector<int> ideal_vars;
  std::vector<int> residue_field_vars;
};

class MonomialValuation {
public:
  MonomialValuation(int nvars, PrimeBasisPtr basis, QMatrix weights,
                    std::optional<std::vector<mpq_class>> shift = std::nullopt);

  int nvars() const { return nvars_; }
  const PrimeBasisPtr& basis() const { return basis_; }
  const QMatrix& weights() const { return weights_; }
  const std::optional<std::vector<mpq_class>>& shift() const { return shift_; }
  bool has_shift() const;

  /// All |X_j| <= 1, i.e. the coordinate ring lies in the valuation ring and
  /// the center exists on the base model.
  bool center_exists() const { return center_exists_; }

  /// |X_j| (value of the shifted coordinate when a shift is present).
  const Value& variable_value(int j) const { return var_values_[static_cast<std::size_t>(j)]; }

  /// |X^I| for an exponent vector in the (shifted) coordinates.
  Value monomial_value(const Poly::Exponents& exponents) const;

  Value value_of(const Poly& f) const;
  Value value_of(const RatFn& f) const;

  /// The terms of f achieving |f|. With a shift the result is expressed in
  /// the shifted coordinates X - a. Throws ZeroPolynomial for f = 0.
  Poly top_form(const Poly& f) const;

  /// Throws NoCenter when some |X_j| > 1.
  CenterDesc center() const;

  /// dim_Q of the span of the weight columns.
  int rational_rank() const;

private:
  Poly in_monomial_coordinates(const Poly& f) const;

  int nvars_;
  PrimeBasisPtr basis_;
  QMatrix weights_;
  std::optional<std::vector<mpq_class>> shift_;
  std::vector<Value> var_values_;
  bool center_exists_;
};

}  // namespace monoval
