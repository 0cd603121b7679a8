#include "cayley/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "cayley/errors.hpp"

namespace cayley {

BasedComplex::BasedComplex(std::vector<ComplexTerm> terms, std::vector<QMatrix> boundaries)
    : terms_(std::move(terms)), boundaries_(std::move(boundaries)) {
  if (terms_.empty()) throw StructuralError("a complex needs at least one term");
  if (boundaries_.size() + 1 != terms_.size()) {
    throw StructuralError("a complex with " + std::to_string(terms_.size()) + " terms needs " +
                          std::to_string(terms_.size() - 1) + " boundaries, got " +
                          std::to_string(boundaries_.size()));
  }
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    const QMatrix& b = boundaries_[i];
    if (b.cols() != terms_[i].dimension || b.rows() != terms_[i + 1].dimension) {
      throw StructuralError("boundary " + std::to_string(i) + " is " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()) + " but maps a " + std::to_string(terms_[i].dimension) +
                            "-dimensional term to a " + std::to_string(terms_[i + 1].dimension) +
                            "-dimensional one");
    }
  }
}

BasedComplex BasedComplex::from_dims(std::vector<std::size_t> dims, std::vector<QMatrix> boundaries) {
  std::vector<ComplexTerm> terms;
  for (std::size_t i = 0; i < dims.size(); ++i) terms.push_back({"E" + std::to_string(i), dims[i], "standard"});
  return BasedComplex(std::move(terms), std::move(boundaries));
}

std::vector<std::size_t> BasedComplex::dims() const {
  std::vector<std::size_t> d;
  for (const auto& t : terms_) d.push_back(t.dimension);
  return d;
}

std::uint64_t BasedComplex::fingerprint() const {
  std::uint64_t h = fnv1a("based-complex");
  for (const auto& t : terms_) {
    h = fnv1a(t.label, h);
    h = fnv1a(std::to_string(t.dimension), h);
    h = fnv1a(t.basis_fingerprint, h);
  }
  return h;
}

BasedComplex BasedComplex::scaled(const Rational& mu) const {
  std::vector<QMatrix> b = boundaries_;
  for (auto& m : b) m *= mu;
  return BasedComplex(terms_, std::move(b));
}

ExactnessReport check_exact(const BasedComplex& c) {
  const auto& b = c.boundaries();
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (!(b[i + 1] * b[i]).is_zero()) {
      throw StructuralError("boundaries " + std::to_string(i + 1) + " and " + std::to_string(i) +
                            " do not compose to zero");
    }
  }
  ExactnessReport report;
  for (const auto& m : b) report.rank_profile.push_back(rank(m));
  const auto dims = c.dims();
  report.exact = true;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t out = i < b.size() ? report.rank_profile[i] : 0;
    const std::size_t in = i > 0 ? report.rank_profile[i - 1] : 0;
    if (out + in != dims[i]) report.exact = false;
  }
  return report;
}

long torsion_scaling_exponent(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw InputError("torsion_scaling_exponent needs at least one dimension");
  const long n = static_cast<long>(dims.size()) - 2;
  long sum = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const long term = static_cast<long>(i) * static_cast<long>(dims[i]);
    sum += (i % 2 == 0) ? term : -term;
  }
  return ((n + 1) % 2 == 0) ? sum : -sum;
}

namespace {

TorsionResult torsion_from_selection(const BasedComplex& c, const std::vector<std::size_t>& kappas,
                                     const std::vector<std::vector<std::size_t>>& sel, const TorsionOptions& options) {
  const auto& b = c.boundaries();
  const auto dims = c.dims();
  // Term i contributes det[ d_{i-1} S_{i-1} | S_i ]^{(-1)^{i+1}}.
  Rational product = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t r = dims[i];
    QMatrix block(r, r);
    std::size_t col = 0;
    if (i > 0) {
      for (std::size_t src : sel[i - 1]) {
        for (std::size_t row = 0; row < r; ++row) block(row, col) = b[i - 1](row, src);
        ++col;
      }
    }
    if (i < b.size()) {
      for (std::size_t unit : sel[i]) block(unit, col++) = 1;
    }
    if (col != r) throw NotExactError("complex is not exact at term " + std::to_string(i));
    const Rational a = options.modular ? det_multimodular(block) : det(block);
    if (a == 0) {
      throw SelectionError("selection at term " + std::to_string(i) + " does not span the top exterior power");
    }
    if (i % 2 == 0) {
      product /= a;
    } else {
      product *= a;
    }
  }
  TorsionResult result;
  // Tor^{(-1)^n} = product.
  result.value = (c.top_index() % 2 == 0) ? product : Rational(1) / product;
  result.rank_profile = kappas;
  result.degree_weight = torsion_scaling_exponent(dims);
  result.basis_fingerprint = c.fingerprint();
  return result;
}

ExactnessReport require_exact(const BasedComplex& c) {
  ExactnessReport report = check_exact(c);
  if (!report.exact) throw NotExactError("torsion undefined: complex is not exact");
  return report;
}

}  // namespace

TorsionResult torsion(const BasedComplex& c, const TorsionOptions& options) {
  const ExactnessReport report = require_exact(c);
  std::vector<std::vector<std::size_t>> sel;
  for (const auto& m : c.boundaries()) sel.push_back(select_independent_columns(m).col_indices);
  return torsion_from_selection(c, report.rank_profile, sel, options);
}

TorsionResult torsion_with_selection(const BasedComplex& c, const std::vector<std::vector<std::size_t>>& selections,
                                     const TorsionOptions& options) {
  const ExactnessReport report = require_exact(c);
  const auto& b = c.boundaries();
  if (selections.size() != b.size()) throw InputError("one column selection per boundary is required");
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& s = selections[i];
    if (s.size() != report.rank_profile[i]) {
      throw SelectionError("selection " + std::to_string(i) + " has " + std::to_string(s.size()) +
                           " columns, the boundary has rank " + std::to_string(report.rank_profile[i]));
    }
    std::vector<std::size_t> all_rows(b[i].rows());
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    for (std::size_t j : s) {
      if (j >= b[i].cols()) throw SelectionError("selection column out of range");
    }
    if (rank(b[i].submatrix(all_rows, s)) != s.size()) {
      throw SelectionError("selection " + std::to_string(i) + " has dependent images");
    }
  }
  return torsion_from_selection(c, report.rank_profile, selections, options);
}

std::vector<std::vector<std::size_t>> random_selection(const BasedComplex& c, std::mt19937_64& rng) {
  std::vector<std::vector<std::size_t>> sel;
  for (const auto& m : c.boundaries()) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    auto cols = select_independent_columns(m, {}, order).col_indices;
    // Keep the shuffled order inside S_i as well.
    std::vector<std::size_t> ordered;
    for (std::size_t j : order) {
      if (std::binary_search(cols.begin(), cols.end(), j)) ordered.push_back(j);
    }
    sel.push_back(std::move(ordered));
  }
  return sel;
}

BasedComplex rebase(const BasedComplex& c, const std::vector<QMatrix>& changes) {
  const auto dims = c.dims();
  if (changes.size() != dims.size()) throw InputError("rebase needs one change matrix per term");
  std::vector<QMatrix> inverses;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const QMatrix& a = changes[i];
    if (!a.is_square() || a.rows() != dims[i]) {
      throw InputError("change matrix " + std::to_string(i) + " does not match the term dimension");
    }
    if (det(a) == 0) throw InputError("change matrix " + std::to_string(i) + " is singular");
    inverses.push_back(inverse(a));
  }
  std::vector<QMatrix> bnd;
  for (std::size_t i = 0; i < c.boundaries().size(); ++i) {
    bnd.push_back(changes[i + 1] * c.boundaries()[i] * inverses[i]);
  }
  std::vector<ComplexTerm> terms = c.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i].basis_fingerprint += "|rebased:" + hex64(fnv1a(changes[i].to_string()));
  }
  return BasedComplex(std::move(terms), std::move(bnd));
}

QMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  QMatrix lower = QMatrix::identity(n);
  QMatrix upper(n, n);
  std::uniform_int_distribution<int> off(-2, 2);
  std::uniform_int_distribution<int> diag(0, 3);
  const int diag_values[] = {1, -1, 2, -2};
  for (std::size_t i = 0; i < n; ++i) {
    upper(i, i) = diag_values[diag(rng)];
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) lower(i, j) = off(rng);
      if (j > i) upper(i, j) = off(rng);
    }
  }
  return lower * upper;
}

BasedComplex random_exact_complex(const std::vector<std::size_t>& kappas, std::mt19937_64& rng) {
  const std::size_t nb = kappas.size();
  std::vector<std::size_t> dims(nb + 1);
  for (std::size_t i = 0; i <= nb; ++i) {
    dims[i] = (i < nb ? kappas[i] : 0) + (i > 0 ? kappas[i - 1] : 0);
  }
  // Split form: E^i = (image of d_{i-1}) + (complement mapped onto the image in E^{i+1}).
  std::vector<QMatrix> bnd;
  for (std::size_t i = 0; i < nb; ++i) {
    QMatrix d(dims[i + 1], dims[i]);
    const std::size_t offset = i > 0 ? kappas[i - 1] : 0;
    const QMatrix g = random_invertible(kappas[i], rng);
    for (std::size_t r = 0; r < kappas[i]; ++r)
      for (std::size_t s = 0; s < kappas[i]; ++s) d(r, offset + s) = g(r, s);
    bnd.push_back(std::move(d));
  }
  std::vector<QMatrix> change;
  for (std::size_t i = 0; i <= nb; ++i) change.push_back(random_invertible(dims[i], rng));
  return rebase(BasedComplex::from_dims(dims, std::move(bnd)), change);
}

}  // namespace cayley
