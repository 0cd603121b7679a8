#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "cayley/linalg/matrix.hpp"

namespace cayley {

std::size_t binomial(std::size_t n, std::size_t k);

/// Basis of the k-th exterior power of an n-dimensional space: sorted index
/// subsets in lexicographic order.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t n, long k);

  std::size_t ambient_dimension() const { return n_; }
  long degree() const { return k_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<std::size_t>& subset(std::size_t index) const { return subsets_[index]; }
  const std::vector<std::vector<std::size_t>>& subsets() const { return subsets_; }
  /// Throws InputError if the subset is not in the basis.
  std::size_t index_of(const std::vector<std::size_t>& subset) const;

 private:
  std::size_t n_;
  long k_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// One nonzero entry of an interior product: e_S -> sign * e_{S \ {removed}}.
struct ContractionTerm {
  std::size_t removed;         // the index taken out of S
  std::size_t target;          // index of S \ {removed} in the degree k-1 basis
  int sign;                    // (-1)^{position of removed in S}
};

/// Nonzero terms of the interior products of e_S (S = basis element `source`
/// of degree k) by the dual basis covectors.
std::vector<ContractionTerm> contraction_terms(const ExteriorBasis& from, const ExteriorBasis& to, std::size_t source);

/// Matrix of the interior product by a covector phi: Lambda^k -> Lambda^{k-1}.
QMatrix contraction_matrix(std::size_t n, long k, std::span<const Rational> phi);

}  // namespace cayley
