#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cayley/arith/rational.hpp"

namespace cayley {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Rational> d);
  /// Columns given as vectors of equal length.
  static QMatrix from_columns(std::size_t rows, std::span<const QVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return data_; }

  QVector column(std::size_t j) const;
  QMatrix transpose() const;
  QMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
  friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, std::span<const Rational> x);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A square invertible submatrix, by sorted row and column indices.
struct MinorSelection {
  std::vector<std::size_t> row_indices;
  std::vector<std::size_t> col_indices;
};

std::size_t rank(const QMatrix& m);

/// Fraction-free (Bareiss) determinant. Non-square input raises InputError.
Rational det(const QMatrix& m);

/// Deterministic basis of the right null space (one vector per free column of the RREF).
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Greedy lowest-index choice of rank(M) columns with independent images,
/// skipping `forbidden`. Throws SelectionError if the allowed columns have lower rank.
MinorSelection select_independent_columns(const QMatrix& m, const std::set<std::size_t>& forbidden = {});

/// Same greedy rule, but columns are tried in `order` (a permutation of a subset of columns).
MinorSelection select_independent_columns(const QMatrix& m, const std::set<std::size_t>& forbidden,
                                          std::span<const std::size_t> order);

/// Inverse of a square matrix; InputError if singular.
QMatrix inverse(const QMatrix& m);

/// Determinant via residues modulo word-size primes, Chinese remaindering and a
/// Hadamard bound. Identical to det(); falls back to det() if primes run out.
Rational det_multimodular(const QMatrix& m);

/// Coordinates of vectors in the span of a fixed set of independent columns.
class SpanSolver {
 public:
  SpanSolver() = default;
  /// `basis` columns must be linearly independent.
  explicit SpanSolver(const QMatrix& basis);

  std::size_t dimension() const { return basis_.cols(); }
  std::size_t ambient_dimension() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }

  /// Coordinates x with basis * x == y; throws ConsistencyError if y is not in the span.
  QVector coordinates(std::span<const Rational> y) const;
  /// Coordinates of every column of Y.
  QMatrix coordinates(const QMatrix& y) const;

 private:
  QMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
  QMatrix pivot_inverse_;
};

}  // namespace cayley
