// Exact integer linear algebra: row-style Hermite normal form with a
// unimodular transform, saturated kernel lattices of rational matrices, and
// coordinates in a lattice basis. Dense arbitrary-precision arithmetic; the
// matrices here are small.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "monoval/errors.hpp"

namespace monoval {

class IntMatrix {
public:
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::vector<mpz_class> row(int i) const;

  bool operator==(const IntMatrix& other) const = default;

private:
  int rows_;
  int cols_;
  std::vector<mpz_class> entries_;
};

class QMatrix {
public:
  QMatrix(int rows, int cols);
  static QMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpq_class& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const QMatrix& other) const = default;

private:
  int rows_;
  int cols_;
  std::vector<mpq_class> entries_;
};

struct HnfResult {
  IntMatrix h;  // row-style Hermite normal form, zero rows last
  IntMatrix u;  // unimodular, u * input = h
};

/// Row-style HNF: pivots positive, entries above each pivot reduced into
/// [0, pivot). The form is the canonical representative of the row lattice.
HnfResult hnf(IntMatrix m);

/// Rank over Q.
int rank(const QMatrix& s);

/// Basis of a saturated sublattice of Z^n, rows kept in HNF so the
/// presentation is deterministic.
class LatticeBasis {
public:
  /// Rows must already be independent; they are re-canonicalized via HNF.
  explicit LatticeBasis(IntMatrix vectors);

  /// The empty basis of the zero sublattice of Z^n.
  static LatticeBasis empty(int ambient_dim);

  int count() const { return vectors_.rows(); }
  int ambient_dim() const { return vectors_.cols(); }
  const IntMatrix& vectors() const { return vectors_; }
  std::vector<mpz_class> vector(int i) const { return vectors_.row(i); }

  bool operator==(const LatticeBasis& other) const { return vectors_ == other.vectors_; }

private:
  IntMatrix vectors_;
  std::vector<int> pivot_cols_;

  friend std::optional<std::vector<mpz_class>> lattice_coords(const LatticeBasis& basis,
                                                              const std::vector<mpz_class>& v);
};

/// Canonical basis of {I in Z^n : S I = 0}; size is n - rank(S).
LatticeBasis kernel_basis(const QMatrix& s);

/// The unique integer coordinates of v in the basis, or nullopt when v is
/// outside the lattice.
std::optional<std::vector<mpz_class>> lattice_coords(const LatticeBasis& basis,
                                                     const std::vector<mpz_class>& v);

}  // namespace monoval
