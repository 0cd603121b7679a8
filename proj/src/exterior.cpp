#include "cayley/exterior.hpp"

#include "cayley/errors.hpp"

namespace cayley {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExteriorBasis::ExteriorBasis(std::size_t n, long k) : n_(n), k_(k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return;
  std::vector<std::size_t> s;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (s.size() == static_cast<std::size_t>(k)) {
      index_.emplace(s, subsets_.size());
      subsets_.push_back(s);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      s.push_back(i);
      self(self, i + 1);
      s.pop_back();
    }
  };
  rec(rec, 0);
}

std::size_t ExteriorBasis::index_of(const std::vector<std::size_t>& subset) const {
  auto it = index_.find(subset);
  if (it == index_.end()) throw InputError("subset is not in the exterior basis");
  return it->second;
}

std::vector<ContractionTerm> contraction_terms(const ExteriorBasis& from, const ExteriorBasis& to,
                                               std::size_t source) {
  std::vector<ContractionTerm> out;
  const auto& s = from.subset(source);
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    std::vector<std::size_t> rest;
    rest.reserve(s.size() - 1);
    for (std::size_t q = 0; q < s.size(); ++q) {
      if (q != pos) rest.push_back(s[q]);
    }
    out.push_back({s[pos], to.index_of(rest), pos % 2 == 0 ? 1 : -1});
  }
  return out;
}

QMatrix contraction_matrix(std::size_t n, long k, std::span<const Rational> phi) {
  if (phi.size() != n) throw InputError("covector length does not match the exterior algebra");
  const ExteriorBasis from(n, k);
  const ExteriorBasis to(n, k - 1);
  QMatrix m(to.size(), from.size());
  for (std::size_t src = 0; src < from.size(); ++src) {
    for (const auto& t : contraction_terms(from, to, src)) {
      m(t.target, src) += t.sign * phi[t.removed];
    }
  }
  return m;
}

}  // namespace cayley
