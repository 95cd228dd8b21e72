#include "monoval/birational.hpp"

#include <stdexcept>
#include <utility>

namespace monoval {

namespace {

/// X^{B+} and X^{B-} for a kernel vector B, expressed back in the original
/// coordinates when the valuation is shifted.
std::pair<Poly, Poly> monomial_pair(const MonomialValuation& v,
                                    const std::vector<mpz_class>& b) {
  const int n = v.nvars();
  Poly::Exponents pos(static_cast<std::size_t>(n), 0), neg(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const mpz_class& e = b[static_cast<std::size_t>(j)];
    if (!mpz_class(abs(e)).fits_sint_p()) throw Error("kernel exponent too large");
    int ei = static_cast<int>(e.get_si());
    if (ei > 0)
      pos[static_cast<std::size_t>(j)] = ei;
    else
      neg[static_cast<std::size_t>(j)] = -ei;
  }
  Poly g = Poly::monomial(n, std::move(pos), mpq_class(1));
  Poly h = Poly::monomial(n, std::move(neg), mpq_class(1));
  if (v.has_shift()) {
    std::vector<mpq_class> back(v.shift()->size());
    for (std::size_t j = 0; j < back.size(); ++j) back[j] = -(*v.shift())[j];
    g = shift_coordinates(g, back);
    h = shift_coordinates(h, back);
  }
  return {std::move(g), std::move(h)};
}

}  // namespace

Chart base_chart(const MonomialValuation& v) {
  if (!v.center_exists()) throw NoCenter();
  std::vector<ChartGenerator> gens;
  gens.reserve(static_cast<std::size_t>(v.nvars()));
  for (int j = 0; j < v.nvars(); ++j)
    gens.push_back({RatFn(Poly::variable(v.nvars(), j)), BaseVariable{j}});
  return Chart(std::move(gens));
}

Chart blowup_adjoin(const MonomialValuation& v, const Chart& chart, const Poly& g,
                    const Poly& h) {
  if (h.is_zero()) throw ZeroPolynomial();
  if (v.value_of(g) > v.value_of(h)) throw CenterNotInChart();
  std::vector<ChartGenerator> gens = chart.generators();
  gens.push_back({RatFn(g, h), BlowUpAdjunction{g, h}});
  return Chart(std::move(gens));
}

ChartCenter chart_center(const MonomialValuation& v, const ResidueFieldDesc& desc,
                         const Chart& chart) {
  ChartCenter result;
  const Value one = Value::one(v.basis());
  for (std::size_t i = 0; i < chart.size(); ++i) {
    const RatFn& fn = chart.generators()[i].fn;
    Value val = v.value_of(fn);
    if (val < one) {
      result.below_one.push_back(static_cast<int>(i));
    } else if (val == one) {
      result.equal_one.push_back(static_cast<int>(i));
      result.residue_gens.push_back(residue_of(desc, fn));
    } else {
      throw std::logic_error("chart generator of value > 1");
    }
  }
  return result;
}

std::pair<Chart, Certificate> realize_residue_field(const MonomialValuation& v) {
  ResidueFieldDesc desc = residue_field_desc(v);
  Chart chart = base_chart(v);
  Certificate cert;
  for (int i = 0; i < desc.generator_count(); ++i) {
    auto [g, h] = monomial_pair(v, desc.kernel().vector(i));
    chart = blowup_adjoin(v, chart, g, h);
    int idx = static_cast<int>(chart.size()) - 1;
    ResidueElement expected = ResidueElement::generator(desc.generator_count(), i);
    bool ok = residue_eq(residue_of(desc, chart.generators()[static_cast<std::size_t>(idx)].fn),
                         expected);
    if (!ok)
      throw std::logic_error("internal invariant violation: adjoined generator does "
                             "not reduce to its residue generator");
    cert.entries.push_back({idx, ok});
  }
  return {std::move(chart), std::move(cert)};
}

Chart realize_elements(const MonomialValuation& v, const std::vector<RatFn>& targets) {
  Chart chart = base_chart(v);
  const Value one = Value::one(v.basis());
  for (const RatFn& t : targets) {
    if (v.value_of(t) > one) throw ValueExceedsOne();
    // |num| <= |den| holds, so the center lies in the chart of num/den.
    chart = blowup_adjoin(v, chart, t.num(), t.den());
  }
  return chart;
}

}  // namespace monoval
