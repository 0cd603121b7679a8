#include "cayley/oracles.hpp"

#include <algorithm>

#include "cayley/errors.hpp"
#include "cayley/linalg/matrix.hpp"

namespace cayley {

bool BinaryForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
}

BinaryForm binary_form_from(const MultiPoly& p) {
  if (p.num_vars() != 2) throw InputError("binary form needs exactly two variables, got " + p.to_string());
  if (p.is_zero()) throw InputError("zero binary form");
  if (!p.is_homogeneous()) throw InputError("binary form is not homogeneous: " + p.to_string());
  const int e = p.total_degree();
  BinaryForm f;
  for (int i = 0; i <= e; ++i) f.c.push_back(p.coefficient({e - i, i}));
  return f;
}

BinaryForm parse_binary_form(std::string_view text) { return binary_form_from(MultiPoly::parse(text, {"s", "t"})); }

Rational sylvester_resultant(const BinaryForm& p, const BinaryForm& q) {
  if (p.c.empty() || q.c.empty() || p.is_zero() || q.is_zero()) throw InputError("resultant of a zero form");
  const auto dp = static_cast<std::size_t>(p.degree());
  const auto dq = static_cast<std::size_t>(q.degree());
  if (dp + dq == 0) return 1;
  QMatrix s(dp + dq, dp + dq);
  for (std::size_t i = 0; i < dq; ++i)
    for (std::size_t j = 0; j <= dp; ++j) s(i, i + j) = p.c[j];
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t j = 0; j <= dq; ++j) s(dq + i, i + j) = q.c[j];
  return det(s);
}

Rational binary_discriminant(const BinaryForm& p) {
  const int e = p.degree();
  if (e < 2) throw InputError("discriminant needs degree >= 2");
  if (p.is_zero()) throw InputError("discriminant of the zero form");
  BinaryForm ds, dt;
  for (int i = 0; i < e; ++i) {
    ds.c.push_back(p.c[static_cast<std::size_t>(i)] * (e - i));
    dt.c.push_back(p.c[static_cast<std::size_t>(i) + 1] * (i + 1));
  }
  // A vanishing partial means a root of multiplicity e.
  if (ds.is_zero() || dt.is_zero()) return 0;
  const Rational res = sylvester_resultant(ds, dt);
  const Rational sign = (e * (e - 1) / 2) % 2 == 0 ? 1 : -1;
  return sign * res / pow(Rational(e), e - 2);
}

namespace {

Rational macaulay_quotient(const std::vector<MultiPoly>& f, const std::vector<int>& d) {
  const int big_d = d[0] + d[1] + d[2] - 2;
  const auto monos = monomials_of_degree(3, big_d);
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  QMatrix m(monos.size(), monos.size());
  std::vector<std::size_t> extraneous;
  for (std::size_t row = 0; row < monos.size(); ++row) {
    const Exponent& mu = monos[row];
    int owner = -1;
    int divisible = 0;
    for (int i = 0; i < 3; ++i) {
      if (mu[static_cast<std::size_t>(i)] >= d[static_cast<std::size_t>(i)]) {
        ++divisible;
        if (owner < 0) owner = i;
      }
    }
    if (divisible >= 2) extraneous.push_back(row);
    Exponent shift = mu;
    shift[static_cast<std::size_t>(owner)] -= d[static_cast<std::size_t>(owner)];
    for (const auto& [e, c] : f[static_cast<std::size_t>(owner)].terms()) {
      Exponent target = e;
      for (std::size_t k = 0; k < 3; ++k) target[k] += shift[k];
      m(row, index.at(target)) = c;
    }
  }
  const Rational minor = det(m.submatrix(extraneous, extraneous));
  if (minor == 0) throw SelectionError("extraneous minor vanishes");
  return det(m) / minor;
}

}  // namespace

Rational macaulay_resultant_3forms(const MultiPoly& f0, const MultiPoly& f1, const MultiPoly& f2) {
  std::vector<MultiPoly> f{f0, f1, f2};
  std::vector<int> d;
  for (const auto& p : f) {
    if (p.num_vars() != 3) throw InputError("macaulay_resultant_3forms needs ternary forms");
    if (p.is_zero()) return 0;
    if (!p.is_homogeneous()) throw InputError("not homogeneous: " + p.to_string());
    const int deg = p.total_degree();
    if (deg < 1 || deg > 2) throw InputError("macaulay_resultant_3forms supports degrees 1 and 2 only");
    d.push_back(deg);
  }
  if (f0.variables() != f1.variables() || f0.variables() != f2.variables()) {
    throw InputError("forms use different variables");
  }
  try {
    return macaulay_quotient(f, d);
  } catch (const SelectionError&) {
  }
  // Res(f o A) = det(A)^{d0 d1 d2} Res(f) for a linear change of variables A.
  std::mt19937_64 rng(0x3f0);
  const auto& vars = f0.variables();
  for (int attempt = 0; attempt < 16; ++attempt) {
    const QMatrix a = random_invertible(3, rng);
    std::vector<MultiPoly> subs;
    for (std::size_t i = 0; i < 3; ++i) {
      MultiPoly s(vars);
      for (std::size_t j = 0; j < 3; ++j) s += MultiPoly::variable(vars, j) * a(i, j);
      subs.push_back(std::move(s));
    }
    std::vector<MultiPoly> g;
    for (const auto& p : f) g.push_back(p.compose(subs));
    try {
      return macaulay_quotient(g, d) / pow(det(a), static_cast<long>(d[0] * d[1] * d[2]));
    } catch (const SelectionError&) {
    }
  }
  throw ConsistencyError("extraneous factor vanished under every change of variables tried");
}

std::vector<MultiPoly> pencil_pullbacks(const Variety& x, const ResultantPencil& f) {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < f.w.rows(); ++i) out.push_back(x.pullback(pencil_row_form(x, f, i)));
  return out;
}

Rational chow_oracle(const Variety& x, const ResultantPencil& f) {
  const auto rows = pencil_pullbacks(x, f);
  if (x.n() == 1 && x.num_params() == 2) {
    if (rows[0].is_zero() || rows[1].is_zero()) return 0;
    return sylvester_resultant(binary_form_from(rows[0]), binary_form_from(rows[1]));
  }
  if (x.n() == 2 && x.num_params() == 3 && x.param_degree() <= 2) {
    return macaulay_resultant_3forms(rows[0], rows[1], rows[2]);
  }
  throw InputError("no classical resultant oracle for " + x.name());
}

Rational discriminant_oracle(const Variety& x, const DualCovector& f) {
  if (x.n() != 1 || x.num_params() != 2) throw InputError("no discriminant oracle for " + x.name());
  MultiPoly l(x.ambient());
  for (std::size_t j = 0; j < f.f.size(); ++j) {
    Exponent e(f.f.size(), 0);
    e[j] = 1;
    l.add_term(e, f.f[j]);
  }
  const MultiPoly q = x.pullback(l);
  if (q.is_zero()) return 0;
  return binary_discriminant(binary_form_from(q));
}

DualCovector tangent_covector(const Variety& x, std::span<const Rational> params, std::mt19937_64& rng) {
  if (params.size() != x.num_params()) throw InputError("wrong number of parameters");
  const auto& map = x.spec().param_map;
  QMatrix jac(x.num_params(), map.size());
  for (std::size_t p = 0; p < x.num_params(); ++p)
    for (std::size_t j = 0; j < map.size(); ++j) jac(p, j) = map[j].derivative(p).eval(params);
  const auto kernel = kernel_basis(jac);
  if (kernel.empty()) throw InputError("embedded tangent space fills P^N");
  DualCovector f{QVector(map.size(), 0)};
  while (std::all_of(f.f.begin(), f.f.end(), [](const Rational& v) { return v == 0; })) {
    for (const auto& k : kernel) {
      const Rational c = random_integer(rng, -5, 5);
      for (std::size_t j = 0; j < k.size(); ++j) f.f[j] += c * k[j];
    }
  }
  return f;
}

ResultantPencil incident_pencil(const Variety& x, std::span<const Rational> params, std::mt19937_64& rng) {
  if (params.size() != x.num_params()) throw InputError("wrong number of parameters");
  QVector point;
  for (const auto& p : x.spec().param_map) point.push_back(p.eval(params));
  std::size_t pivot = 0;
  while (pivot < point.size() && point[pivot] == 0) ++pivot;
  if (pivot == point.size()) throw InputError("parameters map to the origin");
  ResultantPencil f = random_pencil(x, rng);
  for (std::size_t i = 0; i < f.w.rows(); ++i) {
    Rational value = 0;
    for (std::size_t j = 0; j < point.size(); ++j) value += f.w(i, j) * point[j];
    f.w(i, pivot) -= value / point[pivot];
  }
  return f;
}

}  // namespace cayley
