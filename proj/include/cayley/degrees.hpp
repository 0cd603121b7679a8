#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/arith/multipoly.hpp"
#include "cayley/arith/unipoly.hpp"

namespace cayley {

struct DifferenceOperator {
  enum class Direction { backward, forward };
  Direction direction = Direction::backward;
  int k = 0;
};

/// Backward: sum_j (-1)^j C(k,j) f(m-j).
/// Forward: sum_j (-1)^{j+1} C(k,j) f(m+j), which is (-1)^{k+1} times the
/// iterated forward difference.
Rational apply_difference(const DifferenceOperator& op, const UniPoly& f, const Rational& m);

/// h0(O_X(t)) = sum_k b_k t^k.
struct HilbertData {
  std::vector<Rational> b;
  int n = 0;
  UniPoly polynomial() const { return UniPoly(b); }
};

/// Exact fit through n+1 (t, h0) samples; further samples must agree
/// (ConsistencyError otherwise).
HilbertData fit_hilbert_data(std::span<const std::pair<int, long>> samples, int n);

/// sum_k b_k Delta_-^{n+1} f_{k+1}(m) times r; independent of m.
Rational predicted_resultant_degree(const HilbertData& hd, int n, int r);

/// sum_j (-1)^{j+1} j C(n+1, j) r h0(m - j), summed directly.
Rational direct_resultant_degree(const HilbertData& hd, int n, int r, int m);

/// Degree D of a function known to be c * mu^D, by interpolating through
/// mu = 1..max_degree+2. Throws ConsistencyError if the fit is not a monomial.
long measure_degree(const std::function<Rational(const Rational&)>& fn, int max_degree);

/// Q[lambda_1..lambda_n, omega] truncated at total degree n.
class ChernRootRing {
 public:
  explicit ChernRootRing(int n);

  int n() const { return n_; }
  const std::vector<std::string>& variables() const { return vars_; }
  MultiPoly lambda(int i) const;  // 1-based
  MultiPoly omega() const;
  MultiPoly constant(const Rational& c) const;

  /// Drops every term of total degree > n.
  MultiPoly truncate(const MultiPoly& p) const;
  MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) const { return truncate(a * b); }
  /// Homogeneous part of degree `deg`.
  MultiPoly part(const MultiPoly& p, int deg) const;

  /// exp(root) truncated.
  MultiPoly exp(const MultiPoly& root) const;
  /// Chern character of a bundle with the given roots.
  MultiPoly ch(std::span<const MultiPoly> roots) const;
  /// Roots of Lambda^i of a bundle with the given roots.
  std::vector<MultiPoly> wedge_roots(std::span<const MultiPoly> roots, int i) const;
  /// k-th elementary symmetric function of the roots.
  MultiPoly elementary(std::span<const MultiPoly> roots, int k) const;
  /// Total Chern class prod (1 + root).
  MultiPoly total_chern(std::span<const MultiPoly> roots) const;

  /// lambda_1..lambda_n.
  std::vector<MultiPoly> roots() const;

 private:
  int n_;
  std::vector<std::string> vars_;
};

struct IdentityCheck {
  std::string name;
  int n = 0;
  bool ok = false;
  std::string lhs;
  std::string rhs;
};

/// sum_i (-1)^i Ch(Lambda^i E) = c_n(E^dual), and
/// sum_i (-1)^i i Ch(Lambda^i E) = (-1)^n c_{n-1} + ((-1)^n / 2)(c_1 c_{n-1} + n c_n),
/// both truncated at degree n.
std::vector<IdentityCheck> verify_chern_lemma(int n);

/// The right side of the second identity with the opposite sign and 3n in
/// place of n; agrees with the identity only for n = 1.
MultiPoly chern_lemma_alternate_rhs(const ChernRootRing& ring);

/// Top-degree part of sum_i (-1)^{i+1} i (Ch(L^{i-1}) Ch(-1) + Ch(L^i)), L^i = Lambda^i(T(-1)),
/// against c_n(Omega(1)) + omega c_{n-1}(Omega(1)); plus the Whitney check
/// c(J) = c(O(1)) c(Omega(1)) in degree n.
std::vector<IdentityCheck> verify_jet_chern_identity(int n);

}  // namespace cayley
