#include <doctest.h>

#include <random>

#include "cayley/errors.hpp"
#include "cayley/linalg/matrix.hpp"
#include "cayley/torsion.hpp"

using namespace cayley;

namespace {

QMatrix make(std::size_t r, std::size_t c, std::vector<Rational> e) { return QMatrix(r, c, std::move(e)); }

// Cofactor expansion, the oracle for small determinants.
Rational laplace(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    const Rational minor = laplace(m.submatrix(rows, cols));
    acc += (j % 2 == 0 ? 1 : -1) * m(0, j) * minor;
  }
  return acc;
}

QMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_nonzero_rational(rng, 9, 4);
  return m;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
  CHECK(det(make(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(det(make(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, Rational(1, 6)})) == 1);
  CHECK(det(make(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(det(make(2, 2, {0, 1, 1, 0})) == -1);
  CHECK(det(QMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det(QMatrix(2, 3)), InputError);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int k = 0; k < 5; ++k) {
      const QMatrix m = random_matrix(n, n, rng);
      CHECK(det(m) == laplace(m));
    }
  }
}

TEST_CASE("multi-modular determinant equals the rational one") {
  std::mt19937_64 rng(12);
  for (std::size_t n : {1, 3, 8, 20}) {
    const QMatrix m = random_matrix(n, n, rng);
    CHECK(det_multimodular(m) == det(m));
  }
  QMatrix big(12, 12);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) big(i, j) = Rational(mpz_class("1000000000000000000000") * (i + 1) + j * j, j + 1);
  CHECK(det_multimodular(big) == det(big));
  CHECK(det_multimodular(make(2, 2, {1, 2, 2, 4})) == 0);
}

TEST_CASE("rank, kernel and inverse") {
  const QMatrix m = make(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 1});
  CHECK(rank(m) == 2);
  const auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    const QVector img = m * std::span<const Rational>(v);
    for (const auto& x : img) CHECK(x == 0);
  }
  std::mt19937_64 rng(13);
  const QMatrix a = random_invertible(5, rng);
  CHECK(a * inverse(a) == QMatrix::identity(5));
  CHECK_THROWS_AS(inverse(make(2, 2, {1, 2, 2, 4})), InputError);
}

TEST_CASE("greedy column selection") {
  const QMatrix m = make(2, 4, {1, 2, 0, 1, 0, 0, 1, 1});
  const MinorSelection s = select_independent_columns(m);
  CHECK(s.col_indices == std::vector<std::size_t>{0, 2});
  CHECK(det(m.submatrix(s.row_indices, s.col_indices)) != 0);
  const MinorSelection t = select_independent_columns(m, {0});
  CHECK(t.col_indices == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(select_independent_columns(m, {2, 3}), SelectionError);
  const std::vector<std::size_t> order{3, 2, 1, 0};
  CHECK(select_independent_columns(m, {}, order).col_indices == std::vector<std::size_t>{2, 3});
}

TEST_CASE("span solver") {
  const QMatrix b = make(3, 2, {1, 0, 1, 1, 0, 2});
  const SpanSolver s(b);
  const QVector y{3, 5, 4};
  const QVector x = s.coordinates(y);
  CHECK(x == QVector{3, 2});
  const QVector outside{1, 0, 0};
  CHECK_THROWS_AS(s.coordinates(outside), ConsistencyError);
}
