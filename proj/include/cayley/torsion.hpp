#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cayley/linalg/matrix.hpp"

namespace cayley {

/// One term E^i of a based complex. The fingerprint identifies the ordered basis.
struct ComplexTerm {
  std::string label;
  std::size_t dimension = 0;
  std::string basis_fingerprint;
};

/// 0 -> E^0 -> E^1 -> ... -> E^{n+1} -> 0 with boundaries[i] : E^i -> E^{i+1}
/// given as (dim E^{i+1}) x (dim E^i) matrices in the term bases.
class BasedComplex {
 public:
  BasedComplex() = default;
  /// Checks that the matrix shapes chain; throws StructuralError otherwise.
  BasedComplex(std::vector<ComplexTerm> terms, std::vector<QMatrix> boundaries);
  /// Anonymous terms ("E0", "E1", ...); dims are taken from the boundaries when present.
  static BasedComplex from_dims(std::vector<std::size_t> dims, std::vector<QMatrix> boundaries);

  const std::vector<ComplexTerm>& terms() const { return terms_; }
  const std::vector<QMatrix>& boundaries() const { return boundaries_; }
  std::size_t num_terms() const { return terms_.size(); }
  std::vector<std::size_t> dims() const;
  /// Terms are E^0..E^{n+1}, so n = #terms - 2.
  long top_index() const { return static_cast<long>(terms_.size()) - 2; }

  std::uint64_t fingerprint() const;

  /// Same complex with every boundary multiplied by mu.
  BasedComplex scaled(const Rational& mu) const;

 private:
  std::vector<ComplexTerm> terms_;
  std::vector<QMatrix> boundaries_;
};

struct ExactnessReport {
  bool exact = false;
  /// kappa_i = rank of boundaries[i].
  std::vector<std::size_t> rank_profile;
};

struct TorsionResult {
  Rational value;
  std::vector<std::size_t> rank_profile;
  long degree_weight = 0;
  std::uint64_t basis_fingerprint = 0;
};

struct TorsionOptions {
  /// Compute the per-term determinants through det_multimodular.
  bool modular = false;
};

/// Rank conditions kappa_i + kappa_{i-1} = r_i at every term. Throws
/// StructuralError if some boundaries[i+1] * boundaries[i] != 0.
ExactnessReport check_exact(const BasedComplex& c);

/// Scalar torsion of a based exact complex, using the greedy lowest-index
/// selection of S_i. Throws NotExactError when the complex is not exact.
TorsionResult torsion(const BasedComplex& c, const TorsionOptions& options = {});

/// Torsion from an explicit choice of columns for every boundary (selections[i]
/// indexes columns of boundaries[i], i.e. basis vectors of E^i spanning S_i).
/// Throws SelectionError if a choice does not have independent images.
TorsionResult torsion_with_selection(const BasedComplex& c, const std::vector<std::vector<std::size_t>>& selections,
                                     const TorsionOptions& options = {});

/// A uniformly shuffled valid selection (greedy over a random column order).
std::vector<std::vector<std::size_t>> random_selection(const BasedComplex& c, std::mt19937_64& rng);

/// D = (-1)^{n+1} sum_i (-1)^i i dims[i], with dims = (r_0, ..., r_{n+1}).
long torsion_scaling_exponent(const std::vector<std::size_t>& dims);

/// Change of basis: changes[i] maps old coordinates on E^i to new ones, so the
/// new boundaries are changes[i+1] * boundaries[i] * changes[i]^{-1}.
/// torsion(rebase(C, A)) = torsion(C) * prod_i det(A_i)^{(-1)^n (-1)^{i+1}}.
BasedComplex rebase(const BasedComplex& c, const std::vector<QMatrix>& changes);

/// Exact complex with the given rank profile (dims r_i = kappa_i + kappa_{i-1}),
/// with random small-integer boundaries. Used by property tests.
BasedComplex random_exact_complex(const std::vector<std::size_t>& kappas, std::mt19937_64& rng);

/// Random invertible n x n matrix with small integer entries.
QMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

}  // namespace cayley
