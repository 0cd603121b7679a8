#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cayley/arith/multipoly.hpp"
#include "cayley/linalg/matrix.hpp"

namespace cayley {

/// X in P^N given by a homogeneous parametrization from P^k (k = n for the
/// shipped families) together with homogeneous ideal generators.
struct VarietySpec {
  std::string name;
  int n = 0;
  int N = 0;
  int d = 0;
  int dual_degree = 0;  // degree of the dual hypersurface when known, else 0
  std::vector<std::string> params;
  std::vector<MultiPoly> param_map;  // N+1 forms in `params`
  std::vector<MultiPoly> ideal;      // forms in ambient_variables(N)
};

/// "x0", ..., "xN".
std::vector<std::string> ambient_variables(int N);

struct ValidationReport {
  bool ok = true;
  std::string message;
};

/// Symbolic checks of every VarietySpec invariant, plus a Jacobian rank
/// spot-check at a few parameter points. Reports the first failure.
ValidationReport validate(const VarietySpec& spec);

/// Coordinates of forms of a fixed degree over the monomial basis
/// (descending graded-lex).
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  /// Throws InputError if p has a term of another degree.
  QVector to_vector(const MultiPoly& p) const;
  MultiPoly to_poly(std::span<const Rational> v, const std::vector<std::string>& vars) const;

 private:
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
};

/// Basis of H^0(X, O_X(m)) as pulled-back ambient monomials.
struct GradedBasis {
  int m = 0;
  std::vector<MultiPoly> basis;        // forms of degree e*m in the parameters
  std::vector<Exponent> ambient_lifts; // the ambient monomial each basis element comes from
  std::size_t dimension() const { return basis.size(); }
};

/// A validated VarietySpec with memoized graded pieces. Copies share the cache;
/// all members are safe to call concurrently.
class Variety {
 public:
  /// Throws ValidationError when validate(spec) fails.
  explicit Variety(VarietySpec spec);

  const VarietySpec& spec() const { return state_->spec; }
  const std::string& name() const { return state_->spec.name; }
  int n() const { return state_->spec.n; }
  int N() const { return state_->spec.N; }
  int degree() const { return state_->spec.d; }
  /// Common degree e of the parametrization.
  int param_degree() const { return state_->e; }
  std::size_t num_params() const { return state_->spec.params.size(); }
  const std::vector<std::string>& ambient() const { return state_->ambient; }
  std::uint64_t fingerprint() const { return state_->fingerprint; }

  /// O_X(t) pulls back to forms of degree e*t on the parameter space.
  int parameter_degree(int twist) const { return param_degree() * twist; }

  MultiPoly pullback(const MultiPoly& ambient_form) const;

  /// Greedy basis in descending graded-lex order of ambient monomials (memoized).
  const GradedBasis& graded_basis(int m) const;
  /// Same construction with the ambient monomials tried in a shuffled order.
  GradedBasis graded_basis_shuffled(int m, std::uint64_t seed) const;

  /// Coordinates of a parameter form of degree e*m in graded_basis(m).
  QVector coordinates(int m, const MultiPoly& param_form) const;
  /// Basis of graded_basis(m) as columns over the parameter monomials of degree e*m.
  const QMatrix& basis_matrix(int m) const;

  /// Matrix of multiplication by a linear ambient form, H^0(O(m-1)) -> H^0(O(m)).
  QMatrix multiply_by_form(const MultiPoly& g, int m) const;
  /// multiply_by_form(x_j, m), memoized.
  const QMatrix& variable_multiplication(std::size_t j, int m) const;

  /// |ideal| x (N+1) partial derivatives as ambient forms.
  std::vector<std::vector<MultiPoly>> jacobian() const;
  /// The Jacobian pulled back to the parameters.
  const std::vector<std::vector<MultiPoly>>& jacobian_on_parameters() const;

 private:
  struct Piece {
    GradedBasis basis;
    QMatrix matrix;
    SpanSolver solver;
  };
  struct State {
    VarietySpec spec;
    std::vector<std::string> ambient;
    int e = 0;
    std::uint64_t fingerprint = 0;
    std::vector<std::vector<MultiPoly>> jacobian_params;
    mutable std::mutex mutex;
    mutable std::map<int, std::shared_ptr<const Piece>> pieces;
    mutable std::map<std::pair<std::size_t, int>, std::shared_ptr<const QMatrix>> multiplications;
  };

  const Piece& piece(int m) const;
  GradedBasis build_basis(int m, const std::vector<Exponent>& order) const;

  std::shared_ptr<State> state_;
};

}  // namespace cayley
