#include "cayley/degrees.hpp"

#include "cayley/errors.hpp"
#include "cayley/exterior.hpp"

namespace cayley {

Rational apply_difference(const DifferenceOperator& op, const UniPoly& f, const Rational& m) {
  if (op.k < 0) throw InputError("difference order must be nonnegative");
  Rational acc = 0;
  const auto k = static_cast<std::size_t>(op.k);
  for (std::size_t j = 0; j <= k; ++j) {
    const Rational c = Rational(static_cast<long>(binomial(k, j)));
    if (op.direction == DifferenceOperator::Direction::backward) {
      acc += (j % 2 == 0 ? c : Rational(-c)) * f.eval(m - static_cast<long>(j));
    } else {
      acc += (j % 2 == 1 ? c : Rational(-c)) * f.eval(m + static_cast<long>(j));
    }
  }
  return acc;
}

HilbertData fit_hilbert_data(std::span<const std::pair<int, long>> samples, int n) {
  if (n < 0 || samples.size() < static_cast<std::size_t>(n) + 1) {
    throw InputError("need at least n+1 samples to fit a Hilbert polynomial");
  }
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) pts.emplace_back(samples[i].first, samples[i].second);
  const UniPoly p = interpolate_univariate(pts);
  for (const auto& [t, h] : samples) {
    if (p.eval(t) != h) {
      throw ConsistencyError("h0 at t=" + std::to_string(t) + " is off the fitted polynomial " + p.to_string("t"));
    }
  }
  HilbertData hd;
  hd.n = n;
  for (int k = 0; k <= n; ++k) hd.b.push_back(p.coefficient(k));
  return hd;
}

Rational predicted_resultant_degree(const HilbertData& hd, int n, int r) {
  const DifferenceOperator back{DifferenceOperator::Direction::backward, n + 1};
  Rational total = 0;
  for (std::size_t k = 0; k < hd.b.size(); ++k) {
    total += hd.b[k] * apply_difference(back, UniPoly::power(static_cast<int>(k) + 1), 0);
  }
  return total * r;
}

Rational direct_resultant_degree(const HilbertData& hd, int n, int r, int m) {
  const UniPoly h = hd.polynomial();
  Rational total = 0;
  for (int j = 0; j <= n + 1; ++j) {
    const Rational c = Rational(static_cast<long>(j) *
                                static_cast<long>(binomial(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(j))));
    total += ((j + 1) % 2 == 0 ? c : Rational(-c)) * h.eval(m - j);
  }
  return total * r;
}

long measure_degree(const std::function<Rational(const Rational&)>& fn, int max_degree) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (int mu = 1; mu <= max_degree + 2; ++mu) pts.emplace_back(mu, fn(mu));
  const UniPoly p = interpolate_univariate(pts);
  long degree = -1;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coefficient(k) == 0) continue;
    if (degree != -1) throw ConsistencyError("interpolant is not a monomial: " + p.to_string("mu"));
    degree = k;
  }
  if (degree < 0) throw ConsistencyError("function vanishes at every sample");
  return degree;
}

// ---------------------------------------------------------------------------

ChernRootRing::ChernRootRing(int n) : n_(n) {
  if (n < 1) throw InputError("ChernRootRing needs n >= 1");
  for (int i = 1; i <= n; ++i) vars_.push_back("l" + std::to_string(i));
  vars_.push_back("w");
}

MultiPoly ChernRootRing::lambda(int i) const {
  if (i < 1 || i > n_) throw InputError("root index out of range");
  return MultiPoly::variable(vars_, static_cast<std::size_t>(i) - 1);
}

MultiPoly ChernRootRing::omega() const { return MultiPoly::variable(vars_, static_cast<std::size_t>(n_)); }

MultiPoly ChernRootRing::constant(const Rational& c) const { return MultiPoly::constant(vars_, c); }

MultiPoly ChernRootRing::truncate(const MultiPoly& p) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) <= n_) out.add_term(e, c);
  return out;
}

MultiPoly ChernRootRing::part(const MultiPoly& p, int deg) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) == deg) out.add_term(e, c);
  return out;
}

MultiPoly ChernRootRing::exp(const MultiPoly& root) const {
  MultiPoly sum = constant(1);
  MultiPoly term = constant(1);
  for (int p = 1; p <= n_; ++p) {
    term = multiply(term, root) * Rational(1, p);
    sum += term;
  }
  return sum;
}

MultiPoly ChernRootRing::ch(std::span<const MultiPoly> roots) const {
  MultiPoly sum(vars_);
  for (const auto& r : roots) sum += exp(r);
  return sum;
}

std::vector<MultiPoly> ChernRootRing::wedge_roots(std::span<const MultiPoly> roots, int i) const {
  std::vector<MultiPoly> out;
  if (i < 0 || static_cast<std::size_t>(i) > roots.size()) return out;
  const ExteriorBasis subsets(roots.size(), i);
  for (const auto& s : subsets.subsets()) {
    MultiPoly sum(vars_);
    for (std::size_t j : s) sum += roots[j];
    out.push_back(std::move(sum));
  }
  return out;
}

MultiPoly ChernRootRing::elementary(std::span<const MultiPoly> roots, int k) const {
  MultiPoly sum(vars_);
  if (k < 0 || static_cast<std::size_t>(k) > roots.size()) return sum;
  const ExteriorBasis subsets(roots.size(), k);
  for (const auto& s : subsets.subsets()) {
    MultiPoly prod = constant(1);
    for (std::size_t j : s) prod = multiply(prod, roots[j]);
    sum += prod;
  }
  return sum;
}

MultiPoly ChernRootRing::total_chern(std::span<const MultiPoly> roots) const {
  MultiPoly prod = constant(1);
  for (const auto& r : roots) prod = multiply(prod, constant(1) + r);
  return prod;
}

std::vector<MultiPoly> ChernRootRing::roots() const {
  std::vector<MultiPoly> out;
  for (int i = 1; i <= n_; ++i) out.push_back(lambda(i));
  return out;
}

namespace {

IdentityCheck compare(std::string name, int n, const MultiPoly& lhs, const MultiPoly& rhs) {
  return {std::move(name), n, lhs == rhs, lhs.to_string(), rhs.to_string()};
}

Rational sign(long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

MultiPoly chern_lemma_alternate_rhs(const ChernRootRing& ring) {
  const int n = ring.n();
  const auto e = ring.roots();
  const MultiPoly c1 = ring.elementary(e, 1);
  const MultiPoly cn1 = ring.elementary(e, n - 1);
  const MultiPoly cn = ring.elementary(e, n);
  return sign(n) * cn1 + (sign(n + 1) * Rational(1, 2)) * (ring.multiply(c1, cn1) - Rational(3 * n) * cn);
}

std::vector<IdentityCheck> verify_chern_lemma(int n) {
  const ChernRootRing ring(n);
  const auto e = ring.roots();
  MultiPoly alternating(ring.variables());
  MultiPoly weighted(ring.variables());
  for (int i = 0; i <= n; ++i) {
    const MultiPoly chi = ring.ch(ring.wedge_roots(e, i));
    alternating += sign(i) * chi;
    weighted += (sign(i) * Rational(i)) * chi;
  }
  std::vector<MultiPoly> dual;
  for (const auto& r : e) dual.push_back(-r);
  const MultiPoly c1 = ring.elementary(e, 1);
  const MultiPoly cn1 = ring.elementary(e, n - 1);
  const MultiPoly cn = ring.elementary(e, n);
  const MultiPoly rhs2 = sign(n) * cn1 + (sign(n) * Rational(1, 2)) * (ring.multiply(c1, cn1) + Rational(n) * cn);
  return {compare("alternating Ch(Lambda^i E) = c_n(E^dual)", n, alternating, ring.elementary(dual, n)),
          compare("weighted Ch(Lambda^i E)", n, weighted, rhs2)};
}

std::vector<IdentityCheck> verify_jet_chern_identity(int n) {
  const ChernRootRing ring(n);
  const MultiPoly w = ring.omega();
  std::vector<MultiPoly> twisted;  // roots of T(-1)
  std::vector<MultiPoly> omega1;   // roots of Omega(1)
  for (const auto& l : ring.roots()) {
    twisted.push_back(l - w);
    omega1.push_back(w - l);
  }
  const MultiPoly ch_minus1 = ring.exp(-w);
  auto ch_wedge = [&](int i) {
    if (i < 0 || i > n) return MultiPoly(ring.variables());
    return ring.ch(ring.wedge_roots(twisted, i));
  };
  MultiPoly lhs(ring.variables());
  for (int i = 0; i <= n + 1; ++i) {
    lhs += (sign(i + 1) * Rational(i)) * (ring.multiply(ch_wedge(i - 1), ch_minus1) + ch_wedge(i));
  }
  const MultiPoly rhs = ring.elementary(omega1, n) + ring.multiply(w, ring.elementary(omega1, n - 1));

  std::vector<MultiPoly> jet = omega1;  // J = extension of O(1) by Omega(1)
  jet.push_back(w);
  const MultiPoly whitney_lhs = ring.total_chern(jet);
  const MultiPoly whitney_rhs = ring.multiply(ring.constant(1) + w, ring.total_chern(omega1));
  return {compare("weighted jet sum, top degree", n, ring.part(lhs, n), rhs),
          compare("c_n(J) = c_n(Omega(1)) + w c_{n-1}(Omega(1))", n, ring.elementary(jet, n), rhs),
          compare("c(J) = c(O(1)) c(Omega(1))", n, whitney_lhs, whitney_rhs)};
}

}  // namespace cayley
