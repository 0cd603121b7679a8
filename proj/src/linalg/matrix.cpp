#include "cayley/linalg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw InputError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Rational> d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, std::span<const QVector> columns) {
  QMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  QMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

QVector operator*(const QMatrix& a, std::span<const Rational> x) {
  if (a.cols_ != x.size()) throw InputError("matrix-vector product: shape mismatch");
  QVector y(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0 && x[k] != 0) y[i] += a(i, k) * x[k];
  return y;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

/// Incrementally reduced set of independent vectors. Each stored vector has a
/// 1 at its pivot and 0 at every pivot stored before it.
class EchelonAccumulator {
 public:
  explicit EchelonAccumulator(std::size_t length) : length_(length) {}

  /// Returns true (and stores the reduced vector) iff v is independent of the stored ones.
  bool insert(QVector v) {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
      const std::size_t p = pivots_[k];
      if (v[p] == 0) continue;
      const Rational f = v[p];
      const QVector& u = stored_[k];
      for (std::size_t i = 0; i < length_; ++i) {
        if (u[i] != 0) v[i] -= f * u[i];
      }
    }
    std::size_t p = 0;
    while (p < length_ && v[p] == 0) ++p;
    if (p == length_) return false;
    const Rational inv = Rational(1) / v[p];
    for (auto& x : v) {
      if (x != 0) x *= inv;
    }
    pivots_.push_back(p);
    stored_.push_back(std::move(v));
    return true;
  }

  std::size_t size() const { return pivots_.size(); }

 private:
  std::size_t length_;
  std::vector<std::size_t> pivots_;
  std::vector<QVector> stored_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) {
      if (a(row, j) != 0) a(row, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (a(row, j) != 0) a(i, j) -= f * a(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  QMatrix a = m;
  return rref(a).size();
}

MinorSelection select_independent_columns(const QMatrix& m, const std::set<std::size_t>& forbidden) {
  std::vector<std::size_t> order(m.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return select_independent_columns(m, forbidden, order);
}

MinorSelection select_independent_columns(const QMatrix& m, const std::set<std::size_t>& forbidden,
                                          std::span<const std::size_t> order) {
  const std::size_t target = rank(m);
  MinorSelection sel;
  EchelonAccumulator cols(m.rows());
  for (std::size_t j : order) {
    if (j >= m.cols()) throw InputError("column order index out of range");
    if (forbidden.count(j) != 0) continue;
    if (sel.col_indices.size() == target) break;
    if (cols.insert(m.column(j))) sel.col_indices.push_back(j);
  }
  if (sel.col_indices.size() != target) {
    throw SelectionError("allowed columns have rank " + std::to_string(sel.col_indices.size()) +
                         " but the matrix has rank " + std::to_string(target));
  }
  std::sort(sel.col_indices.begin(), sel.col_indices.end());
  // Rows: greedy independent rows of the selected column block.
  std::vector<std::size_t> all_rows(m.rows());
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  const QMatrix block = m.submatrix(all_rows, sel.col_indices);
  EchelonAccumulator rows(block.cols());
  for (std::size_t i = 0; i < block.rows() && sel.row_indices.size() < target; ++i) {
    QVector r(block.cols());
    for (std::size_t j = 0; j < block.cols(); ++j) r[j] = block(i, j);
    if (rows.insert(std::move(r))) sel.row_indices.push_back(i);
  }
  return sel;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  QMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det(const QMatrix& m) {
  if (!m.is_square()) {
    throw InputError("det of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, then integer Bareiss.
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = m(i, j);
      a[i * n + j] = q.get_num() * (l / q.get_den());
    }
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel * n + k] == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[sel * n + j]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = a[i * n + j];
        x = x * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  Rational d(a[n * n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw InputError("inverse of a singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

SpanSolver::SpanSolver(const QMatrix& basis) : basis_(basis) {
  if (basis.cols() == 0) return;
  const MinorSelection rows = select_independent_columns(basis.transpose());
  if (rows.col_indices.size() != basis.cols()) throw InputError("SpanSolver: basis columns are dependent");
  pivot_rows_ = rows.col_indices;
  std::vector<std::size_t> all(basis.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  pivot_inverse_ = inverse(basis.submatrix(pivot_rows_, all));
}

QVector SpanSolver::coordinates(std::span<const Rational> y) const {
  if (y.size() != basis_.rows()) throw InputError("SpanSolver: vector length mismatch");
  QVector picked(pivot_rows_.size());
  for (std::size_t k = 0; k < pivot_rows_.size(); ++k) picked[k] = y[pivot_rows_[k]];
  QVector x = pivot_inverse_.cols() == 0 ? QVector{} : pivot_inverse_ * std::span<const Rational>(picked);
  const QVector back = basis_.cols() == 0 ? QVector(basis_.rows(), Rational(0)) : basis_ * std::span<const Rational>(x);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (back[i] != y[i]) throw ConsistencyError("vector does not lie in the span of the basis");
  }
  return x;
}

QMatrix SpanSolver::coordinates(const QMatrix& y) const {
  QMatrix out(dimension(), y.cols());
  for (std::size_t j = 0; j < y.cols(); ++j) {
    const QVector x = coordinates(y.column(j));
    for (std::size_t i = 0; i < x.size(); ++i) out(i, j) = x[i];
  }
  return out;
}

}  // namespace cayley
