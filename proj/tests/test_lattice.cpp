#include <doctest.h>

#include "monoval/lattice.hpp"
#include "test_util.hpp"

using namespace monoval;

namespace {

mpz_class determinant(const IntMatrix& m) {
  REQUIRE(m.rows() == m.cols());
  if (m.rows() == 1) return m.at(0, 0);
  mpz_class det = 0;
  // cofactor expansion along row 0; matrices here stay tiny
  for (int j = 0; j < m.cols(); ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(m.rows() - 1, m.cols() - 1);
    for (int r = 1; r < m.rows(); ++r) {
      int cc = 0;
      for (int c = 0; c < m.cols(); ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    mpz_class term = m.at(0, j) * determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int k = 0; k < a.cols(); ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

bool is_row_hnf(const IntMatrix& h) {
  int prev_pivot = -1;
  bool seen_zero_row = false;
  for (int i = 0; i < h.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) { p = j; break; }
    if (p < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;       // zero rows must be last
    if (p <= prev_pivot) return false;     // strictly increasing pivots
    if (h.at(i, p) <= 0) return false;     // positive pivots
    for (int r = 0; r < i; ++r)
      if (h.at(r, p) < 0 || h.at(r, p) >= h.at(i, p)) return false;
    prev_pivot = p;
  }
  return true;
}

/// All integer vectors in the box [-range, range]^n with s v = 0.
std::vector<std::vector<mpz_class>> box_kernel(const QMatrix& s, long range) {
  std::vector<std::vector<mpz_class>> out;
  const int n = s.cols();
  std::vector<long> v(static_cast<std::size_t>(n), -range);
  for (;;) {
    bool in_kernel = true;
    for (int i = 0; i < s.rows() && in_kernel; ++i) {
      mpq_class acc(0);
      for (int j = 0; j < n; ++j) acc += s.at(i, j) * v[static_cast<std::size_t>(j)];
      if (acc != 0) in_kernel = false;
    }
    if (in_kernel) {
      std::vector<mpz_class> w;
      for (long x : v) w.emplace_back(x);
      out.push_back(std::move(w));
    }
    int k = 0;
    while (k < n && v[static_cast<std::size_t>(k)] == range) {
      v[static_cast<std::size_t>(k)] = -range;
      ++k;
    }
    if (k == n) break;
    ++v[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

TEST_CASE("hnf of identity and zero") {
  IntMatrix id = IntMatrix::identity(3);
  HnfResult r = hnf(id);
  CHECK(r.h == id);
  CHECK(r.u == id);

  IntMatrix zero(2, 3);
  HnfResult rz = hnf(zero);
  CHECK(rz.h == zero);
  CHECK(rz.u == IntMatrix::identity(2));
}

TEST_CASE("hnf defining properties on random matrices") {
  testutil::Rng rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = testutil::rand_int(rng, -9, 9);
    HnfResult r = hnf(m);
    CHECK(matmul(r.u, m) == r.h);
    mpz_class d = determinant(r.u);
    CHECK((d == 1 || d == -1));
    CHECK(is_row_hnf(r.h));
  }
}

TEST_CASE("kernel_basis examples") {
  QMatrix s = QMatrix::from_rows({{mpq_class(1), mpq_class(1)}});
  LatticeBasis b = kernel_basis(s);
  REQUIRE(b.count() == 1);
  CHECK(b.vector(0) == std::vector<mpz_class>{1, -1});
  for (const auto& v : box_kernel(s, 3))
    CHECK(lattice_coords(b, v).has_value());

  QMatrix id2 = QMatrix::from_rows({{mpq_class(1), mpq_class(0)},
                                    {mpq_class(0), mpq_class(1)}});
  CHECK(kernel_basis(id2).count() == 0);

  QMatrix s3 = QMatrix::from_rows({{mpq_class(1), mpq_class(1), mpq_class(2)}});
  LatticeBasis b3 = kernel_basis(s3);
  REQUIRE(b3.count() == 2);
  for (int i = 0; i < 2; ++i) {
    mpq_class acc(0);
    for (int j = 0; j < 3; ++j) acc += s3.at(0, j) * b3.vector(i)[static_cast<std::size_t>(j)];
    CHECK(acc == 0);
  }
  for (const auto& v : box_kernel(s3, 3))
    CHECK(lattice_coords(b3, v).has_value());
}

TEST_CASE("lattice_coords examples and round trips") {
  LatticeBasis b = kernel_basis(QMatrix::from_rows({{mpq_class(1), mpq_class(1)}}));
  auto c = lattice_coords(b, {mpz_class(2), mpz_class(-2)});
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<mpz_class>{2});
  CHECK_FALSE(lattice_coords(b, {mpz_class(1), mpz_class(0)}).has_value());

  testutil::Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = static_cast<int>(testutil::rand_int(rng, 2, 4));
    QMatrix s = testutil::rand_weights(rng, 1, n, 4, 4, false);
    LatticeBasis basis = kernel_basis(s);
    if (basis.count() == 0) continue;
    std::vector<mpz_class> combo(static_cast<std::size_t>(n));
    std::vector<mpz_class> coeffs;
    for (int i = 0; i < basis.count(); ++i) {
      mpz_class ci = testutil::rand_int(rng, -5, 5);
      coeffs.push_back(ci);
      auto row = basis.vector(i);
      for (int j = 0; j < n; ++j) combo[static_cast<std::size_t>(j)] += ci * row[static_cast<std::size_t>(j)];
    }
    auto back = lattice_coords(basis, combo);
    REQUIRE(back.has_value());
    CHECK(*back == coeffs);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(QMatrix::from_rows({{mpq_class(1), mpq_class(0)},
                                 {mpq_class(0), mpq_class(1)}})) == 2);
  CHECK(rank(QMatrix(2, 2)) == 0);
  CHECK(rank(QMatrix::from_rows({{mpq_class(1), mpq_class(2)},
                                 {mpq_class(2), mpq_class(4)}})) == 1);
}

TEST_CASE("rank-nullity on random rational matrices") {
  testutil::Rng rng(9);
  for (int iter = 0; iter < 500; ++iter) {
    int rows = static_cast<int>(testutil::rand_int(rng, 1, 3));
    int n = static_cast<int>(testutil::rand_int(rng, 1, 5));
    QMatrix s = testutil::rand_weights(rng, rows, n, 5, 6, false);
    CHECK(rank(s) + kernel_basis(s).count() == n);
  }
}

TEST_CASE("saturation: box search stays inside the lattice") {
  testutil::Rng rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    int n = static_cast<int>(testutil::rand_int(rng, 2, 4));
    int rows = static_cast<int>(testutil::rand_int(rng, 1, 2));
    QMatrix s = testutil::rand_weights(rng, rows, n, 4, 4, false);
    LatticeBasis basis = kernel_basis(s);
    for (const auto& v : box_kernel(s, 4))
      CHECK(lattice_coords(basis, v).has_value());
  }
}

TEST_CASE("kernel basis is invariant under positive row scaling") {
  testutil::Rng rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    int n = static_cast<int>(testutil::rand_int(rng, 2, 4));
    int rows = static_cast<int>(testutil::rand_int(rng, 1, 3));
    QMatrix s = testutil::rand_weights(rng, rows, n, 4, 4, false);
    QMatrix scaled = s;
    for (int i = 0; i < rows; ++i) {
      mpq_class factor(testutil::rand_int(rng, 1, 9), testutil::rand_int(rng, 1, 9));
      factor.canonicalize();
      for (int j = 0; j < n; ++j) scaled.at(i, j) *= factor;
    }
    CHECK(kernel_basis(s) == kernel_basis(scaled));
  }
}
