// Blow-up charts as finitely generated subalgebras of K(X) inside the
// valuation ring: adjoining g/h models the distinguished affine chart of the
// blow-up along (g, h) that contains the center. realize_residue_field builds
// the chart whose center has residue field equal to the full residue field of
// the valuation, certified generator by generator.
#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "monoval/polyring.hpp"
#include "monoval/residue.hpp"
#include "monoval/valuation.hpp"

namespace monoval {

struct BaseVariable {
  int index;
};

struct BlowUpAdjunction {
  Poly numerator;
  Poly denominator;
};

using Provenance = std::variant<BaseVariable, BlowUpAdjunction>;

struct ChartGenerator {
  RatFn fn;
  Provenance provenance;
};

/// Generators of a subalgebra of K(X), each of value <= 1. Immutable;
/// adjunction returns a new chart.
class Chart {
public:
  explicit Chart(std::vector<ChartGenerator> generators)
      : generators_(std::move(generators)) {}

  const std::vector<ChartGenerator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

private:
  std::vector<ChartGenerator> generators_;
};

/// The chart of the base model: generators X_1..X_n. Throws NoCenter.
Chart base_chart(const MonomialValuation& v);

/// Chart extended by g/h. Requires |g| <= |h| (the center lies in this chart
/// of the blow-up along (g, h)); throws CenterNotInChart otherwise and
/// ZeroPolynomial for h = 0.
Chart blowup_adjoin(const MonomialValuation& v, const Chart& chart, const Poly& g,
                    const Poly& h);

/// Partition of the chart generators by value, with the residues of the
/// value-one generators: these generate the residue field of the chart's
/// center inside the residue field of the valuation.
struct ChartCenter {
  std::vector<int> below_one;
  std::vector<int> equal_one;
  std::vector<ResidueElement> residue_gens;  // aligned with equal_one
};

ChartCenter chart_center(const MonomialValuation& v, const ResidueFieldDesc& desc,
                         const Chart& chart);

/// Entry i certifies that generator_index has residue Y_{i+1}.
struct CertificateEntry {
  int generator_index;
  bool verified;
};

struct Certificate {
  std::vector<CertificateEntry> entries;
};

/// One blow-up adjunction X^{B+}/X^{B-} per kernel basis vector B. The
/// returned certificate maps every residue generator to a chart generator
/// whose residue it is, so the residue field of the chart's center equals the
/// residue field of the valuation.
std::pair<Chart, Certificate> realize_residue_field(const MonomialValuation& v);

/// Sequentially adjoins num/den for each target (input order), so each
/// target's residue lies in the residue field of the chart's center. Targets
/// must have value <= 1.
Chart realize_elements(const MonomialValuation& v, const std::vector<RatFn>& targets);

}  // namespace monoval
