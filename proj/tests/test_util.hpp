// Deterministic random generators shared by the unit and acceptance suites.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "monoval/exactvalue.hpp"
#include "monoval/group.hpp"
#include "monoval/lattice.hpp"
#include "monoval/polyring.hpp"
#include "monoval/residue.hpp"
#include "monoval/valuation.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline mpq_class rand_rational(Rng& rng, long max_num, long max_den) {
  mpq_class q(rand_int(rng, -max_num, max_num), rand_int(rng, 1, max_den));
  q.canonicalize();
  return q;
}

inline mpq_class rand_nonzero_rational(Rng& rng, long max_num, long max_den) {
  for (;;) {
    mpq_class q = rand_rational(rng, max_num, max_den);
    if (q != 0) return q;
  }
}

inline monoval::Poly rand_poly(Rng& rng, int nvars, int max_deg, int max_terms) {
  monoval::Poly p(nvars);
  const int terms = static_cast<int>(rand_int(rng, 1, max_terms));
  for (int t = 0; t < terms; ++t) {
    monoval::Poly::Exponents e(static_cast<std::size_t>(nvars));
    int budget = static_cast<int>(rand_int(rng, 0, max_deg));
    for (int j = 0; j < nvars; ++j) {
      int d = static_cast<int>(rand_int(rng, 0, budget));
      e[static_cast<std::size_t>(j)] = d;
      budget -= d;
    }
    p.add_term(e, rand_rational(rng, 6, 4));
  }
  return p;
}

inline monoval::Poly rand_nonzero_poly(Rng& rng, int nvars, int max_deg, int max_terms) {
  for (;;) {
    monoval::Poly p = rand_poly(rng, nvars, max_deg, max_terms);
    if (!p.is_zero()) return p;
  }
}

/// Weight matrix with entries n/d, |n| <= max_num, d <= max_den. When
/// strictly_positive is set, every column gets a strictly positive first row
/// so that every variable value is < 1.
inline monoval::QMatrix rand_weights(Rng& rng, int rows, int cols, long max_num,
                                     long max_den, bool strictly_positive) {
  monoval::QMatrix s(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      mpq_class q = rand_rational(rng, max_num, max_den);
      if (strictly_positive && i == 0) {
        if (q <= 0) q = mpq_class(rand_int(rng, 1, max_num), rand_int(rng, 1, max_den));
        q.canonicalize();
      }
      s.at(i, j) = q;
    }
  // keep the remaining rows nonnegative in the strictly positive regime so
  // no later row can push a variable value above one
  if (strictly_positive)
    for (int i = 1; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (s.at(i, j) < 0) s.at(i, j) = -s.at(i, j);
  return s;
}

inline monoval::PrimeBasisPtr basis_for_rows(int rows) {
  std::vector<mpz_class> primes;
  const long pool[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < rows; ++i) primes.emplace_back(pool[i]);
  return monoval::make_prime_basis(std::move(primes));
}

/// Valuation with all variable values < 1 (center is the origin).
inline monoval::MonomialValuation rand_centered_valuation(Rng& rng, int nvars) {
  int rows = static_cast<int>(rand_int(rng, 1, 2));
  return monoval::MonomialValuation(
      nvars, basis_for_rows(rows), rand_weights(rng, rows, nvars, 3, 4, true));
}

/// Rational function of value <= 1 under v: p/q with |p| <= |q|, swapping the
/// two random polynomials if needed.
inline monoval::RatFn rand_bounded_ratfn(Rng& rng, const monoval::MonomialValuation& v,
                                         int max_deg, int max_terms) {
  monoval::Poly p = rand_nonzero_poly(rng, v.nvars(), max_deg, max_terms);
  monoval::Poly q = rand_nonzero_poly(rng, v.nvars(), max_deg, max_terms);
  if (v.value_of(p) > v.value_of(q)) std::swap(p, q);
  return monoval::RatFn(p, q);
}

/// Random element of finite order: random permutation with cycle products
/// forced to +-1, so the generated cyclic group is finite.
inline monoval::GroupElement rand_finite_order_element(Rng& rng, int n) {
  monoval::GroupElement e;
  e.perm.resize(static_cast<std::size_t>(n));
  std::iota(e.perm.begin(), e.perm.end(), 0);
  std::shuffle(e.perm.begin(), e.perm.end(), rng);
  e.scalars.assign(static_cast<std::size_t>(n), mpq_class(1));
  const mpq_class pool[] = {mpq_class(1),    mpq_class(-1), mpq_class(2),
                            mpq_class(1, 2), mpq_class(-3), mpq_class(-1, 3)};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int j = start;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
      j = e.perm[static_cast<std::size_t>(j)];
    }
    mpq_class prod(1);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      mpq_class c = pool[rand_int(rng, 0, 5)];
      c.canonicalize();
      e.scalars[static_cast<std::size_t>(cycle[i])] = c;
      prod *= c;
    }
    mpq_class sign = rand_int(rng, 0, 1) ? mpq_class(1) : mpq_class(-1);
    e.scalars[static_cast<std::size_t>(cycle.back())] = sign / prod;
  }
  return e;
}

/// Valuation with weight columns constant on the orbits of the group, all
/// variable values < 1 (so the action preserves every variable value).
inline monoval::MonomialValuation rand_invariant_valuation(Rng& rng,
                                                           const monoval::MonomialAction& g) {
  const int n = g.nvars();
  std::vector<int> orbit(static_cast<std::size_t>(n), -1);
  int next_orbit = 0;
  for (int j = 0; j < n; ++j) {
    if (orbit[static_cast<std::size_t>(j)] >= 0) continue;
    std::vector<int> stack{j};
    orbit[static_cast<std::size_t>(j)] = next_orbit;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (const auto& sigma : g.elements()) {
        int img = sigma.perm[static_cast<std::size_t>(cur)];
        if (orbit[static_cast<std::size_t>(img)] < 0) {
          orbit[static_cast<std::size_t>(img)] = next_orbit;
          stack.push_back(img);
        }
      }
    }
    ++next_orbit;
  }
  int rows = static_cast<int>(rand_int(rng, 1, 2));
  std::vector<std::vector<mpq_class>> orbit_cols;
  for (int o = 0; o < next_orbit; ++o) {
    std::vector<mpq_class> col;
    for (int i = 0; i < rows; ++i) {
      mpq_class q = rand_rational(rng, 3, 4);
      if (i == 0 && q <= 0) q = mpq_class(rand_int(rng, 1, 3), rand_int(rng, 1, 4));
      if (i > 0 && q < 0) q = -q;
      q.canonicalize();
      col.push_back(q);
    }
    orbit_cols.push_back(std::move(col));
  }
  monoval::QMatrix s(rows, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < rows; ++i)
      s.at(i, j) = orbit_cols[static_cast<std::size_t>(orbit[static_cast<std::size_t>(j)])]
                             [static_cast<std::size_t>(i)];
  return monoval::MonomialValuation(n, basis_for_rows(rows), std::move(s));
}

inline monoval::ResidueElement rand_laurent_element(Rng& rng, int ngens, long exp_range,
                                                    int max_terms) {
  monoval::LaurentMap num, den;
  auto rand_side = [&](monoval::LaurentMap& m, bool allow_zero) {
    const int terms = static_cast<int>(rand_int(rng, allow_zero ? 0 : 1, max_terms));
    for (int t = 0; t < terms; ++t) {
      std::vector<mpz_class> e(static_cast<std::size_t>(ngens));
      for (auto& x : e) x = rand_int(rng, -exp_range, exp_range);
      mpq_class c = rand_nonzero_rational(rng, 6, 4);
      auto it = m.find(e);
      if (it == m.end())
        m.emplace(std::move(e), c);
      else {
        it->second += c;
        if (it->second == 0) m.erase(it);
      }
    }
  };
  rand_side(num, true);
  rand_side(den, false);
  if (den.empty())
    den.emplace(std::vector<mpz_class>(static_cast<std::size_t>(ngens)), mpq_class(1));
  return monoval::ResidueElement(ngens, std::move(num), std::move(den));
}

}  // namespace testutil
