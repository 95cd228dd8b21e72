#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "monoval/group.hpp"
#include "test_util.hpp"

using namespace monoval;

namespace {

MonomialValuation example_a() {
  return MonomialValuation(2, make_prime_basis({2}),
                           QMatrix::from_rows({{mpq_class(1), mpq_class(1)}}));
}

GroupElement swap2() {
  return GroupElement{{1, 0}, {mpq_class(1), mpq_class(1)}};
}

GroupElement flip_first(int n) {
  GroupElement e = identity_element(n);
  e.scalars[0] = mpq_class(-1);
  return e;
}

MonomialAction swap_action() { return MonomialAction::generate(2, {swap2()}); }

ResidueElement eval_unipoly(const UniPoly& p, const ResidueElement& t) {
  ResidueElement acc = ResidueElement::zero(t.ngens());
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * t + ResidueElement::constant(t.ngens(), *it);
  return acc;
}

using testutil::rand_finite_order_element;
using testutil::rand_invariant_valuation;

}  // namespace

TEST_CASE("action generation") {
  CHECK(swap_action().order() == 2);
  CHECK(MonomialAction::generate(1, {flip_first(1)}).order() == 2);
  GroupElement doubling = identity_element(1);
  doubling.scalars[0] = mpq_class(2);
  CHECK_THROWS_AS(MonomialAction::generate(1, {doubling}, 100), InfiniteGroup);
  GroupElement bad{{0, 0}, {mpq_class(1), mpq_class(1)}};
  CHECK_THROWS_AS(MonomialAction::generate(2, {bad}), DomainError);
  GroupElement zero_scalar = identity_element(1);
  zero_scalar.scalars[0] = 0;
  CHECK_THROWS_AS(MonomialAction::generate(1, {zero_scalar}), DomainError);
  // swap and sign flip generate the order-8 signed permutation group
  CHECK(MonomialAction::generate(2, {swap2(), flip_first(2)}).order() == 8);
}

TEST_CASE("act") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  CHECK(act(swap2(), x * x * y) == x * y * y);
  CHECK(act(identity_element(2), x * x * y) == x * x * y);

  testutil::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    GroupElement sigma = rand_finite_order_element(rng, 3);
    Poly f = testutil::rand_poly(rng, 3, 4, 5);
    CHECK(act(sigma, act(inverse(sigma), f)) == f);
    CHECK(act(inverse(sigma), act(sigma, f)) == f);
  }
}

TEST_CASE("is_invariant_valuation") {
  MonomialAction g = swap_action();
  CHECK(is_invariant_valuation(g, example_a()));
  MonomialValuation skew(2, make_prime_basis({2, 3}),
                         QMatrix::from_rows({{mpq_class(1), mpq_class(0)},
                                             {mpq_class(0), mpq_class(1)}}));
  CHECK_FALSE(is_invariant_valuation(g, skew));
  MonomialAction flip = MonomialAction::generate(2, {flip_first(2)});
  CHECK(is_invariant_valuation(flip, skew));
  CHECK(is_invariant_valuation(flip, example_a()));
}

TEST_CASE("reynolds") {
  MonomialAction g = swap_action();
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  CHECK(reynolds(g, x) == (x + y) * mpq_class(1, 2));
  CHECK(reynolds(g, x * y) == x * y);
  CHECK(reynolds(g, x * x) == (x * x + y * y) * mpq_class(1, 2));

  testutil::Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    Poly f = testutil::rand_poly(rng, 2, 4, 5);
    Poly r = reynolds(g, f);
    CHECK(reynolds(g, r) == r);
    for (const auto& sigma : g.elements()) CHECK(act(sigma, r) == r);
  }
}

TEST_CASE("invariant_gens_up_to_degree") {
  MonomialAction g = swap_action();
  std::vector<Poly> gens = invariant_gens_up_to_degree(g, 2);
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  std::vector<Poly> expected{x + y, x * y, x * x + y * y};
  REQUIRE(gens.size() == 3);
  // same span: every expected element reduces to zero against the output and
  // conversely (both sets are triangular enough to check by membership)
  for (const auto& e : expected) {
    bool found = std::any_of(gens.begin(), gens.end(),
                             [&](const Poly& p) { return p == e; });
    CHECK(found);
  }

  MonomialAction trivial = MonomialAction::generate(2, {identity_element(2)});
  std::vector<Poly> t1 = invariant_gens_up_to_degree(trivial, 1);
  REQUIRE(t1.size() == 2);
  CHECK(std::count(t1.begin(), t1.end(), x) == 1);
  CHECK(std::count(t1.begin(), t1.end(), y) == 1);

  MonomialAction neg = MonomialAction::generate(1, {flip_first(1)});
  std::vector<Poly> n2 = invariant_gens_up_to_degree(neg, 2);
  Poly x1 = Poly::variable(1, 0);
  REQUIRE(n2.size() == 1);
  CHECK(n2[0] == x1 * x1);
}

TEST_CASE("induced_residue_action on the swap example") {
  MonomialAction g = swap_action();
  MonomialValuation v = example_a();
  ResidueFieldDesc desc = residue_field_desc(v);
  InducedResidueAction ind = induced_residue_action(g, v, desc);

  ResidueElement y1 = ResidueElement::generator(1, 0);
  int id_idx = g.index_of(identity_element(2));
  int swap_idx = g.index_of(swap2());
  REQUIRE(id_idx >= 0);
  REQUIRE(swap_idx >= 0);
  CHECK(residue_eq(apply(ind.element(static_cast<std::size_t>(id_idx)), y1), y1));
  CHECK(residue_eq(apply(ind.element(static_cast<std::size_t>(swap_idx)), y1),
                   y1.reciprocal()));
  CHECK(ind.element(static_cast<std::size_t>(swap_idx)).matrix.at(0, 0) == -1);
  CHECK(ind.element(static_cast<std::size_t>(swap_idx)).scalars[0] == 1);

  MonomialAction flip = MonomialAction::generate(2, {flip_first(2)});
  InducedResidueAction find = induced_residue_action(flip, v, desc);
  int flip_idx = flip.index_of(flip_first(2));
  ResidueElement img = apply(find.element(static_cast<std::size_t>(flip_idx)), y1);
  CHECK(residue_eq(img, y1 * ResidueElement::constant(1, mpq_class(-1))));
  CHECK(find.element(static_cast<std::size_t>(flip_idx)).matrix.at(0, 0) == 1);
  CHECK(find.element(static_cast<std::size_t>(flip_idx)).scalars[0] == -1);

  MonomialValuation skew(2, make_prime_basis({2, 3}),
                         QMatrix::from_rows({{mpq_class(1), mpq_class(0)},
                                             {mpq_class(0), mpq_class(1)}}));
  CHECK_THROWS_AS(induced_residue_action(g, skew, residue_field_desc(skew)),
                  NotInvariant);
}

TEST_CASE("induced action is a group homomorphism") {
  MonomialAction g = MonomialAction::generate(2, {swap2(), flip_first(2)});
  REQUIRE(g.order() == 8);
  MonomialValuation v = example_a();
  ResidueFieldDesc desc = residue_field_desc(v);
  InducedResidueAction ind = induced_residue_action(g, v, desc);
  ResidueElement y1 = ResidueElement::generator(1, 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      int k = g.index_of(compose(g.element(i), g.element(j)));
      REQUIRE(k >= 0);
      CHECK(residue_eq(apply(ind.element(i), apply(ind.element(j), y1)),
                       apply(ind.element(static_cast<std::size_t>(k)), y1)));
    }
}

TEST_CASE("equivariance examples") {
  MonomialAction g = swap_action();
  MonomialValuation v = example_a();
  ResidueFieldDesc desc = residue_field_desc(v);
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);

  CHECK(equivariance_check(g, v, desc, RatFn(x * x + y * y, x * y)));
  // not invariant as a function, but still equivariant
  CHECK(equivariance_check(g, v, desc, RatFn(x, y)));

  MonomialAction trivial = MonomialAction::generate(2, {identity_element(2)});
  CHECK(equivariance_check(trivial, v, residue_field_desc(v), RatFn(x, y)));

  CHECK_THROWS_AS(equivariance_check(g, v, desc, RatFn(x, y * y)), ValueExceedsOne);
}

TEST_CASE("invariance of values is forced by the generator check") {
  testutil::Rng rng(53);
  for (int iter = 0; iter < 300; ++iter) {
    int n = static_cast<int>(testutil::rand_int(rng, 2, 4));
    MonomialAction g = MonomialAction::generate(n, {rand_finite_order_element(rng, n)});
    MonomialValuation v = rand_invariant_valuation(rng, g);
    REQUIRE(is_invariant_valuation(g, v));
    RatFn f = testutil::rand_bounded_ratfn(rng, v, 4, 5);
    for (const auto& sigma : g.elements())
      CHECK(v.value_of(act(sigma, f)) == v.value_of(f));
  }
}

TEST_CASE("equivariance on random invariant valuations") {
  testutil::Rng rng(54);
  for (int iter = 0; iter < 300; ++iter) {
    int n = static_cast<int>(testutil::rand_int(rng, 2, 3));
    MonomialAction g = MonomialAction::generate(n, {rand_finite_order_element(rng, n)});
    MonomialValuation v = rand_invariant_valuation(rng, g);
    ResidueFieldDesc desc = residue_field_desc(v);
    RatFn f = testutil::rand_bounded_ratfn(rng, v, 3, 4);
    CHECK(equivariance_check(g, v, desc, f));
  }
}

TEST_CASE("quotient_residue_report") {
  MonomialAction g = swap_action();
  MonomialValuation v = example_a();
  ResidueFieldDesc desc = residue_field_desc(v);
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  ResidueElement y1 = ResidueElement::generator(1, 0);
  ResidueElement one = ResidueElement::one(1);

  QuotientResidueReport r1 =
      quotient_residue_report(g, v, desc, {RatFn(x * x + y * y, x * y)});
  REQUIRE(r1.entries.size() == 1);
  CHECK(residue_eq(r1.entries[0].residue, y1 + y1.reciprocal()));
  CHECK(r1.entries[0].fixed_by_action);

  CHECK_THROWS_AS(quotient_residue_report(g, v, desc, {RatFn(x * y, y * y)}),
                  NotInvariantFunction);

  QuotientResidueReport r2 =
      quotient_residue_report(g, v, desc, {RatFn((x + y) * (x + y), x * y)});
  REQUIRE(r2.entries.size() == 1);
  CHECK(residue_eq(r2.entries[0].residue,
                   y1 + ResidueElement::constant(1, 2) + y1.reciprocal()));
  CHECK(r2.entries[0].fixed_by_action);
}

TEST_CASE("express_in_symmetric_generator") {
  ResidueElement y1 = ResidueElement::generator(1, 0);
  ResidueElement t = y1 + y1.reciprocal();

  auto r1 = express_in_symmetric_generator(t);
  REQUIRE(r1.has_value());
  CHECK(residue_eq(eval_unipoly(r1->num, t) *
                       eval_unipoly(r1->den, t).reciprocal(),
                   t));

  // (Y + 1)^2 / Y = t + 2
  ResidueElement e = (y1 + ResidueElement::one(1)) * (y1 + ResidueElement::one(1)) *
                     y1.reciprocal();
  auto r2 = express_in_symmetric_generator(e);
  REQUIRE(r2.has_value());
  UniPoly expected{mpq_class(2), mpq_class(1)};
  CHECK(r2->num == expected);
  CHECK(r2->den == UniPoly{mpq_class(1)});

  CHECK_FALSE(express_in_symmetric_generator(y1).has_value());
}

TEST_CASE("swap desk case: invariant residues are rational in Y + 1/Y") {
  MonomialAction g = swap_action();
  MonomialValuation v = example_a();
  ResidueFieldDesc desc = residue_field_desc(v);
  ResidueElement y1 = ResidueElement::generator(1, 0);
  ResidueElement t = y1 + y1.reciprocal();

  std::vector<Poly> base = invariant_gens_up_to_degree(g, 4);
  std::vector<Poly> family = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      family.push_back(base[i] + base[j]);

  int checked = 0;
  for (const auto& gpoly : family)
    for (const auto& hpoly : family) {
      if (!(v.value_of(gpoly) == v.value_of(hpoly))) continue;
      RatFn f(gpoly, hpoly);
      ResidueElement e = residue_of(desc, f);
      auto rw = express_in_symmetric_generator(e);
      REQUIRE(rw.has_value());
      CHECK(residue_eq(e * eval_unipoly(rw->den, t), eval_unipoly(rw->num, t)));
      ++checked;
    }
  CHECK(checked > 50);
}
