// Finite groups of scaled variable permutations sigma(X_j) = c_j X_{pi(j)},
// their action on polynomials and rational functions, Reynolds averaging,
// and the induced action on the residue field of an invariant monomial
// valuation.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "monoval/lattice.hpp"
#include "monoval/polyring.hpp"
#include "monoval/residue.hpp"
#include "monoval/valuation.hpp"

namespace monoval {

/// sigma(X_j) = scalars[j] * X_{perm[j]}; perm is 0-based.
struct GroupElement {
  std::vector<int> perm;
  std::vector<mpq_class> scalars;

  bool operator==(const GroupElement& other) const = default;
};

GroupElement identity_element(int nvars);
/// a after b: (a o b)(X_j) = a(b(X_j)).
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& e);

/// The finite group generated by a list of elements, closed at construction.
/// Elements are stored in a canonical order.
class MonomialAction {
public:
  static MonomialAction generate(int nvars, const std::vector<GroupElement>& generators,
                                 std::size_t bound = 10000);

  int nvars() const { return nvars_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  /// Index of e in the canonical order; -1 when absent.
  int index_of(const GroupElement& e) const;

private:
  MonomialAction(int nvars, std::vector<GroupElement> elements);

  int nvars_;
  std::vector<GroupElement> elements_;
};

Poly act(const GroupElement& sigma, const Poly& f);
RatFn act(const GroupElement& sigma, const RatFn& f);

/// True iff |sigma(X_j)| = |X_j| for every group element and variable, which
/// for monomial valuations forces |sigma(f)| = |f| on all of K(X).
bool is_invariant_valuation(const MonomialAction& g, const MonomialValuation& v);

/// The G-average (1/|G|) sum over sigma of sigma(f); always invariant.
Poly reynolds(const MonomialAction& g, const Poly& f);
RatFn reynolds(const MonomialAction& g, const RatFn& f);

/// Reynolds images of all monomials of degree 1..maxdeg, zero images dropped
/// and linear redundancy removed; each survivor normalized to lead
/// coefficient 1.
std::vector<Poly> invariant_gens_up_to_degree(const MonomialAction& g, int maxdeg);

/// Action of one group element on the residue generators:
/// sigma(Y_i) = scalars[i] * Y^{matrix column i}; matrix is GL_k(Z).
struct ResidueActionElement {
  IntMatrix matrix;
  std::vector<mpq_class> scalars;
};

class InducedResidueAction {
public:
  InducedResidueAction(int ngens, std::vector<ResidueActionElement> elements)
      : ngens_(ngens), elements_(std::move(elements)) {}

  int ngens() const { return ngens_; }
  const std::vector<ResidueActionElement>& elements() const { return elements_; }
  const ResidueActionElement& element(std::size_t i) const { return elements_[i]; }

private:
  int ngens_;
  std::vector<ResidueActionElement> elements_;
};

/// Elements aligned with g.elements(). Requires an invariant valuation
/// (throws NotInvariant) and an unshifted one.
InducedResidueAction induced_residue_action(const MonomialAction& g,
                                            const MonomialValuation& v,
                                            const ResidueFieldDesc& desc);

ResidueElement apply(const ResidueActionElement& sigma, const ResidueElement& e);

/// residue(sigma f) == sigma(residue f) for every group element.
bool equivariance_check(const MonomialAction& g, const MonomialValuation& v,
                        const ResidueFieldDesc& desc, const RatFn& f);

struct QuotientResidueEntry {
  ResidueElement residue;
  bool fixed_by_action;
};

struct QuotientResidueReport {
  std::vector<QuotientResidueEntry> entries;
};

/// For G-invariant inputs of value <= 1: their residues, each flagged as
/// fixed by the induced action (certified elements of the invariant subfield).
/// Throws NotInvariantFunction for non-invariant inputs.
QuotientResidueReport quotient_residue_report(const MonomialAction& g,
                                              const MonomialValuation& v,
                                              const ResidueFieldDesc& desc,
                                              const std::vector<RatFn>& invariants);

/// Polynomials in one indeterminate t, ascending coefficients.
using UniPoly = std::vector<mpq_class>;

struct SymmetricRewrite {
  UniPoly num;
  UniPoly den;
};

/// For a one-generator residue field: writes an element invariant under
/// Y -> 1/Y as a rational function of t = Y + 1/Y, by expanding numerator and
/// denominator in the basis {Y^m + Y^-m} and converting each basis element to
/// its polynomial in t. Returns nullopt when e is not symmetric (or when the
/// residue field does not have exactly one generator).
std::optional<SymmetricRewrite> express_in_symmetric_generator(const ResidueElement& e);

}  // namespace monoval
