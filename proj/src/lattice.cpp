#include "monoval/lattice.hpp"

#include <utility>

namespace monoval {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("bad matrix shape");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  if (rows.empty()) throw ShapeMismatch("from_rows needs at least one row");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m.cols()))
      throw ShapeMismatch("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::vector<mpz_class> IntMatrix::row(int i) const {
  std::vector<mpz_class> r(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = at(i, j);
  return r;
}

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 1 || cols < 1) throw ShapeMismatch("bad matrix shape");
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  if (rows.empty()) throw ShapeMismatch("from_rows needs at least one row");
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m.cols()))
      throw ShapeMismatch("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, int i) {
  for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row_dst -= q * row_src
void submul_row(IntMatrix& m, int dst, int src, const mpz_class& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

}  // namespace

HnfResult hnf(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  IntMatrix u = IntMatrix::identity(rows);
  int r = 0;

  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid on the column below r until a single nonzero entry remains.
    while (true) {
      int piv = -1;
      for (int i = r; i < rows; ++i) {
        if (m.at(i, c) == 0) continue;
        if (piv < 0 || mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(piv, c).get_mpz_t()) < 0)
          piv = i;
      }
      if (piv < 0) break;
      swap_rows(m, r, piv);
      swap_rows(u, r, piv);
      if (m.at(r, c) < 0) {
        negate_row(m, r);
        negate_row(u, r);
      }
      bool remaining = false;
      for (int i = r + 1; i < rows; ++i) {
        if (m.at(i, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
        submul_row(m, i, r, q);
        submul_row(u, i, r, q);
        if (m.at(i, c) != 0) remaining = true;
      }
      if (!remaining) break;
    }
    if (m.at(r, c) == 0) continue;
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, c).get_mpz_t(), m.at(r, c).get_mpz_t());
      submul_row(m, i, r, q);
      submul_row(u, i, r, q);
    }
    ++r;
  }
  return HnfResult{std::move(m), std::move(u)};
}

int rank(const QMatrix& s) {
  QMatrix m = s;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      mpq_class f = m.at(i, c) / m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

std::vector<int> pivot_columns(const IntMatrix& m) {
  std::vector<int> pivots;
  pivots.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) { p = j; break; }
    if (p < 0) throw ShapeMismatch("lattice basis rows must be nonzero");
    if (!pivots.empty() && p <= pivots.back())
      throw ShapeMismatch("lattice basis rows are not in echelon order");
    pivots.push_back(p);
  }
  return pivots;
}

}  // namespace

LatticeBasis::LatticeBasis(IntMatrix vectors) : vectors_(IntMatrix(0, vectors.cols())) {
  if (vectors.rows() == 0) {
    return;
  }
  HnfResult res = hnf(std::move(vectors));
  int nonzero = 0;
  for (int i = 0; i < res.h.rows(); ++i) {
    bool z = true;
    for (int j = 0; j < res.h.cols(); ++j)
      if (res.h.at(i, j) != 0) { z = false; break; }
    if (z) break;  // zero rows are last in HNF
    ++nonzero;
  }
  if (nonzero != res.h.rows())
    throw ShapeMismatch("lattice basis rows must be linearly independent");
  vectors_ = std::move(res.h);
  pivot_cols_ = pivot_columns(vectors_);
}

LatticeBasis LatticeBasis::empty(int ambient_dim) {
  return LatticeBasis(IntMatrix(0, ambient_dim));
}

LatticeBasis kernel_basis(const QMatrix& s) {
  const int n = s.cols();
  // Clear denominators row by row; scaling an equation does not change its
  // solution set.
  IntMatrix a(s.rows(), n);
  for (int i = 0; i < s.rows(); ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j)
      a.at(i, j) = s.at(i, j).get_num() * (l / s.at(i, j).get_den());
  }
  // Rows u_k of the unimodular transform with zero HNF rows of a^T form a
  // basis of {v : a v = 0}; unimodularity makes it saturated.
  IntMatrix transposed(n, s.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < s.rows(); ++j) transposed.at(i, j) = a.at(j, i);
  HnfResult res = hnf(std::move(transposed));
  std::vector<std::vector<mpz_class>> kernel_rows;
  for (int i = 0; i < res.h.rows(); ++i) {
    bool z = true;
    for (int j = 0; j < res.h.cols(); ++j)
      if (res.h.at(i, j) != 0) { z = false; break; }
    if (z) kernel_rows.push_back(res.u.row(i));
  }
  if (kernel_rows.empty()) return LatticeBasis::empty(n);
  return LatticeBasis(IntMatrix::from_rows(kernel_rows));
}

std::optional<std::vector<mpz_class>> lattice_coords(const LatticeBasis& basis,
                                                     const std::vector<mpz_class>& v) {
  if (v.size() != static_cast<std::size_t>(basis.ambient_dim()))
    throw ShapeMismatch("vector length does not match the ambient dimension");
  std::vector<mpz_class> w = v;
  std::vector<mpz_class> coords(static_cast<std::size_t>(basis.count()));
  const IntMatrix& b = basis.vectors();
  for (int i = 0; i < basis.count(); ++i) {
    const int p = basis.pivot_cols_[static_cast<std::size_t>(i)];
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[static_cast<std::size_t>(p)].get_mpz_t(),
                b.at(i, p).get_mpz_t());
    if (rem != 0) return std::nullopt;
    coords[static_cast<std::size_t>(i)] = q;
    for (int j = 0; j < b.cols(); ++j) w[static_cast<std::size_t>(j)] -= q * b.at(i, j);
  }
  for (const auto& x : w)
    if (x != 0) return std::nullopt;
  return coords;
}

}  // namespace monoval
