#include "monoval/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

#include "monoval/rational.hpp"

namespace monoval {

namespace {

struct ElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    if (a.perm != b.perm) return a.perm < b.perm;
    for (std::size_t i = 0; i < a.scalars.size(); ++i) {
      int c = cmp(a.scalars[i], b.scalars[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

void validate_element(int nvars, const GroupElement& e) {
  if (e.perm.size() != static_cast<std::size_t>(nvars) ||
      e.scalars.size() != static_cast<std::size_t>(nvars))
    throw ShapeMismatch("group element size does not match nvars");
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  for (int p : e.perm) {
    if (p < 0 || p >= nvars || seen[static_cast<std::size_t>(p)])
      throw DomainError("malformed permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (const auto& c : e.scalars)
    if (c == 0) throw DomainError("group element scalars must be nonzero");
}

}  // namespace

GroupElement identity_element(int nvars) {
  GroupElement e;
  e.perm.resize(static_cast<std::size_t>(nvars));
  e.scalars.assign(static_cast<std::size_t>(nvars), mpq_class(1));
  for (int j = 0; j < nvars; ++j) e.perm[static_cast<std::size_t>(j)] = j;
  return e;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  // (a o b)(X_j) = a(b.scalars[j] X_{b.perm[j]})
  const std::size_t n = a.perm.size();
  if (b.perm.size() != n) throw ShapeMismatch("group elements have different sizes");
  GroupElement r;
  r.perm.resize(n);
  r.scalars.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t mid = static_cast<std::size_t>(b.perm[j]);
    r.perm[j] = a.perm[mid];
    r.scalars[j] = b.scalars[j] * a.scalars[mid];
  }
  return r;
}

GroupElement inverse(const GroupElement& e) {
  const std::size_t n = e.perm.size();
  GroupElement r;
  r.perm.resize(n);
  r.scalars.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t img = static_cast<std::size_t>(e.perm[j]);
    r.perm[img] = static_cast<int>(j);
    r.scalars[img] = 1 / e.scalars[j];
  }
  return r;
}

MonomialAction::MonomialAction(int nvars, std::vector<GroupElement> elements)
    : nvars_(nvars), elements_(std::move(elements)) {}

MonomialAction MonomialAction::generate(int nvars,
                                        const std::vector<GroupElement>& generators,
                                        std::size_t bound) {
  if (nvars < 1) throw DomainError("action needs at least one variable");
  for (const auto& g : generators) validate_element(nvars, g);

  std::set<GroupElement, ElementLess> seen;
  std::deque<GroupElement> queue;
  seen.insert(identity_element(nvars));
  queue.push_back(identity_element(nvars));
  while (!queue.empty()) {
    GroupElement e = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      GroupElement next = compose(g, e);
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw InfiniteGroup(bound);
        queue.push_back(std::move(next));
      }
    }
  }
  return MonomialAction(nvars, std::vector<GroupElement>(seen.begin(), seen.end()));
}

int MonomialAction::index_of(const GroupElement& e) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == e) return static_cast<int>(i);
  return -1;
}

Poly act(const GroupElement& sigma, const Poly& f) {
  if (sigma.perm.size() != static_cast<std::size_t>(f.nvars())) throw NvarsMismatch();
  Poly r(f.nvars());
  Poly::Exponents e(static_cast<std::size_t>(f.nvars()));
  for (const auto& [exps, c] : f.terms()) {
    mpq_class coeff = c;
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (exps[j] == 0) continue;
      e[static_cast<std::size_t>(sigma.perm[j])] = exps[j];
      coeff *= rational_pow(sigma.scalars[j], exps[j]);
    }
    r.add_term(e, coeff);
  }
  return r;
}

RatFn act(const GroupElement& sigma, const RatFn& f) {
  return RatFn(act(sigma, f.num()), act(sigma, f.den()));
}

bool is_invariant_valuation(const MonomialAction& g, const MonomialValuation& v) {
  if (g.nvars() != v.nvars()) throw NvarsMismatch();
  for (const auto& sigma : g.elements())
    for (int j = 0; j < v.nvars(); ++j) {
      Poly xj = Poly::variable(v.nvars(), j);
      if (!(v.value_of(act(sigma, xj)) == v.value_of(xj))) return false;
    }
  return true;
}

Poly reynolds(const MonomialAction& g, const Poly& f) {
  Poly sum(f.nvars());
  for (const auto& sigma : g.elements()) sum = sum + act(sigma, f);
  return sum * make_rational(1, static_cast<long>(g.order()));
}

RatFn reynolds(const MonomialAction& g, const RatFn& f) {
  RatFn sum(Poly(f.nvars()), Poly::constant(f.nvars(), 1));
  for (const auto& sigma : g.elements()) sum = sum + act(sigma, f);
  return sum * make_rational(1, static_cast<long>(g.order()));
}

namespace {

// Row reduction against an echelon list keyed by leading (lex-largest)
// exponent. Returns the reduced remainder.
Poly reduce_against(const std::vector<Poly>& echelon, Poly p) {
  bool changed = true;
  while (!p.is_zero() && changed) {
    changed = false;
    const auto& lead = *p.terms().rbegin();
    for (const auto& q : echelon) {
      const auto& qlead = *q.terms().rbegin();
      if (qlead.first == lead.first) {
        p = p - q * (lead.second / qlead.second);
        changed = true;
        break;
      }
    }
  }
  return p;
}

void enumerate_monomials(int nvars, int degree, Poly::Exponents& current, int pos,
                         int remaining, std::vector<Poly::Exponents>& out) {
  if (pos == nvars - 1) {
    current[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current[static_cast<std::size_t>(pos)] = e;
    enumerate_monomials(nvars, degree, current, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Poly> invariant_gens_up_to_degree(const MonomialAction& g, int maxdeg) {
  if (maxdeg < 1) throw DomainError("degree bound must be >= 1");
  std::vector<Poly> kept;
  std::vector<Poly> echelon;
  const int n = g.nvars();
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<Poly::Exponents> monomials;
    Poly::Exponents current(static_cast<std::size_t>(n));
    enumerate_monomials(n, d, current, 0, d, monomials);
    for (const auto& e : monomials) {
      Poly image = reynolds(g, Poly::monomial(n, e, mpq_class(1)));
      if (image.is_zero()) continue;
      Poly reduced = reduce_against(echelon, image);
      if (reduced.is_zero()) continue;
      echelon.push_back(reduced);
      // normalize the surviving image to lead coefficient 1
      kept.push_back(image * (1 / image.terms().rbegin()->second));
    }
  }
  return kept;
}

InducedResidueAction induced_residue_action(const MonomialAction& g,
                                            const MonomialValuation& v,
                                            const ResidueFieldDesc& desc) {
  if (!is_invariant_valuation(g, v))
    throw NotInvariant("valuation is not invariant under the group action");
  if (v.has_shift())
    throw NotInvariant("induced residue action requires an unshifted valuation");

  const int k = desc.generator_count();
  std::vector<ResidueActionElement> elements;
  elements.reserve(g.order());
  for (const auto& sigma : g.elements()) {
    IntMatrix m(k, k);
    std::vector<mpq_class> scalars(static_cast<std::size_t>(k), mpq_class(1));
    for (int i = 0; i < k; ++i) {
      // sigma(X^{B_i}) = (prod_j c_j^{B_ij}) X^{pi . B_i}
      std::vector<mpz_class> b = desc.kernel().vector(i);
      std::vector<mpz_class> permuted(b.size());
      mpq_class scalar(1);
      for (std::size_t j = 0; j < b.size(); ++j) {
        permuted[static_cast<std::size_t>(sigma.perm[j])] = b[j];
        if (b[j] != 0) {
          if (!mpz_class(abs(b[j])).fits_slong_p()) throw Error("kernel exponent too large");
          scalar *= rational_pow(sigma.scalars[j], b[j].get_si());
        }
      }
      auto coords = lattice_coords(desc.kernel(), permuted);
      if (!coords)
        throw std::logic_error("internal invariant violation: permuted kernel vector "
                               "left the kernel lattice");
      for (int r = 0; r < k; ++r) m.at(r, i) = (*coords)[static_cast<std::size_t>(r)];
      scalars[static_cast<std::size_t>(i)] = std::move(scalar);
    }
    elements.push_back({std::move(m), std::move(scalars)});
  }
  return InducedResidueAction(k, std::move(elements));
}

ResidueElement apply(const ResidueActionElement& sigma, const ResidueElement& e) {
  const int k = e.ngens();
  if (sigma.matrix.cols() != k) throw ShapeMismatch("induced action has wrong size");
  auto map_side = [&](const LaurentMap& m) {
    LaurentMap r;
    for (const auto& [w, c] : m) {
      std::vector<mpz_class> img(static_cast<std::size_t>(k));
      mpq_class coeff = c;
      for (int i = 0; i < k; ++i) {
        const mpz_class& wi = w[static_cast<std::size_t>(i)];
        if (wi == 0) continue;
        for (int r2 = 0; r2 < k; ++r2)
          img[static_cast<std::size_t>(r2)] += sigma.matrix.at(r2, i) * wi;
        if (!mpz_class(abs(wi)).fits_slong_p()) throw Error("Laurent exponent too large");
        coeff *= rational_pow(sigma.scalars[static_cast<std::size_t>(i)], wi.get_si());
      }
      auto it = r.find(img);
      if (it == r.end())
        r.emplace(std::move(img), coeff);
      else {
        it->second += coeff;
        if (it->second == 0) r.erase(it);
      }
    }
    return r;
  };
  LaurentMap num = map_side(e.num());
  LaurentMap den = map_side(e.den());
  return ResidueElement(k, std::move(num), std::move(den));
}

bool equivariance_check(const MonomialAction& g, const MonomialValuation& v,
                        const ResidueFieldDesc& desc, const RatFn& f) {
  const Value one = Value::one(v.basis());
  if (v.value_of(f) > one) throw ValueExceedsOne();
  InducedResidueAction induced = induced_residue_action(g, v, desc);
  ResidueElement base = residue_of(desc, f);
  for (std::size_t i = 0; i < g.order(); ++i) {
    ResidueElement lhs = residue_of(desc, act(g.element(i), f));
    ResidueElement rhs = apply(induced.element(i), base);
    if (!residue_eq(lhs, rhs)) return false;
  }
  return true;
}

QuotientResidueReport quotient_residue_report(const MonomialAction& g,
                                              const MonomialValuation& v,
                                              const ResidueFieldDesc& desc,
                                              const std::vector<RatFn>& invariants) {
  InducedResidueAction induced = induced_residue_action(g, v, desc);
  const Value one = Value::one(v.basis());
  QuotientResidueReport report;
  for (const RatFn& f : invariants) {
    for (const auto& sigma : g.elements())
      if (!ratfn_eq(act(sigma, f), f)) throw NotInvariantFunction();
    if (v.value_of(f) > one) throw ValueExceedsOne();
    ResidueElement e = residue_of(desc, f);
    bool fixed = true;
    for (const auto& sigma : induced.elements())
      if (!residue_eq(apply(sigma, e), e)) fixed = false;
    report.entries.push_back({std::move(e), fixed});
  }
  return report;
}

std::optional<SymmetricRewrite> express_in_symmetric_generator(const ResidueElement& e) {
  if (e.ngens() != 1) return std::nullopt;

  auto invert = [](const LaurentMap& m) {
    LaurentMap r;
    for (const auto& [w, c] : m) r.emplace(std::vector<mpz_class>{-w[0]}, c);
    return r;
  };
  // e = N/D with D = den * den(1/Y) symmetric; e symmetric iff N symmetric.
  LaurentMap den_inv = [&] {
    LaurentMap r;
    std::vector<mpz_class> w(1);
    for (const auto& [a, ca] : e.den())
      for (const auto& [b, cb] : invert(e.den())) {
        w[0] = a[0] + b[0];
        auto it = r.find(w);
        if (it == r.end()) r.emplace(w, ca * cb);
        else { it->second += ca * cb; if (it->second == 0) r.erase(it); }
      }
    return r;
  }();
  LaurentMap num_sym = [&] {
    LaurentMap r;
    std::vector<mpz_class> w(1);
    for (const auto& [a, ca] : e.num())
      for (const auto& [b, cb] : invert(e.den())) {
        w[0] = a[0] + b[0];
        auto it = r.find(w);
        if (it == r.end()) r.emplace(w, ca * cb);
        else { it->second += ca * cb; if (it->second == 0) r.erase(it); }
      }
    return r;
  }();
  if (num_sym != invert(num_sym)) return std::nullopt;

  // Y^m + Y^-m = S_m(t) with S_0 = 2, S_1 = t, S_m = t S_{m-1} - S_{m-2}.
  auto to_unipoly = [](const LaurentMap& m) {
    long mmax = 0;
    for (const auto& [w, c] : m) {
      mpz_class a = abs(w[0]);
      if (!a.fits_slong_p()) throw Error("Laurent exponent too large");
      mmax = std::max(mmax, a.get_si());
    }
    std::vector<UniPoly> s;
    s.push_back({mpq_class(2)});
    if (mmax >= 1) s.push_back({mpq_class(0), mpq_class(1)});
    for (long d = 2; d <= mmax; ++d) {
      UniPoly next(static_cast<std::size_t>(d) + 1, mpq_class(0));
      for (std::size_t i = 0; i < s[static_cast<std::size_t>(d - 1)].size(); ++i)
        next[i + 1] += s[static_cast<std::size_t>(d - 1)][i];
      for (std::size_t i = 0; i < s[static_cast<std::size_t>(d - 2)].size(); ++i)
        next[i] -= s[static_cast<std::size_t>(d - 2)][i];
      s.push_back(std::move(next));
    }
    UniPoly out(static_cast<std::size_t>(mmax) + 1, mpq_class(0));
    for (const auto& [w, c] : m) {
      long mdeg = w[0].get_si();
      if (mdeg < 0) continue;  // mirrored by the positive term
      if (mdeg == 0) {
        out[0] += c;
      } else {
        const UniPoly& basis = s[static_cast<std::size_t>(mdeg)];
        for (std::size_t i = 0; i < basis.size(); ++i) out[i] += c * basis[i];
      }
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
  };

  SymmetricRewrite rw;
  rw.num = to_unipoly(num_sym);
  rw.den = to_unipoly(den_inv);
  return rw;
}

}  // namespace monoval
