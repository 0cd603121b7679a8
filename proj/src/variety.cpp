#include "cayley/variety.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cayley/errors.hpp"

namespace cayley {

std::vector<std::string> ambient_variables(int N) {
  std::vector<std::string> v;
  for (int i = 0; i <= N; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

ValidationReport validate(const VarietySpec& spec) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  if (spec.n < 0 || spec.N < spec.n) return fail("need 0 <= n <= N");
  if (spec.d < 1) return fail("degree d must be positive");
  if (spec.params.empty()) return fail("no parameter variables");
  if (spec.param_map.size() != static_cast<std::size_t>(spec.N) + 1) {
    return fail("parametrization has " + std::to_string(spec.param_map.size()) + " components, expected N+1 = " +
                std::to_string(spec.N + 1));
  }
  int e = -1;
  bool all_zero = true;
  for (std::size_t j = 0; j < spec.param_map.size(); ++j) {
    const MultiPoly& p = spec.param_map[j];
    if (p.variables() != spec.params) return fail("parametrization component " + std::to_string(j) + " uses other variables");
    if (!p.is_homogeneous()) return fail("parametrization component " + std::to_string(j) + " is not homogeneous");
    if (p.is_zero()) continue;
    all_zero = false;
    if (e < 0) e = p.total_degree();
    if (p.total_degree() != e) return fail("parametrization components have different degrees");
  }
  if (all_zero || e < 1) return fail("parametrization must have positive degree");
  const auto ambient = ambient_variables(spec.N);
  for (const auto& f : spec.ideal) {
    if (f.variables() != ambient) return fail("ideal generator " + f.to_string() + " is not in x0..xN");
    if (f.is_zero() || !f.is_homogeneous()) return fail("ideal generator " + f.to_string() + " is not a nonzero form");
    if (!f.compose(spec.param_map).is_zero()) {
      return fail("ideal generator " + f.to_string() + " does not vanish on the parametrization");
    }
  }
  if (!spec.ideal.empty()) {
    // Jacobian rank N - n at a few parameter points.
    std::mt19937_64 rng(0x5eed);
    int checked = 0;
    for (int attempt = 0; attempt < 50 && checked < 5; ++attempt) {
      std::vector<Rational> pt;
      for (std::size_t i = 0; i < spec.params.size(); ++i) pt.push_back(random_integer(rng, -5, 5));
      std::vector<Rational> image;
      for (const auto& p : spec.param_map) image.push_back(p.eval(pt));
      if (std::all_of(image.begin(), image.end(), [](const Rational& q) { return q == 0; })) continue;
      QMatrix jac(spec.ideal.size(), ambient.size());
      for (std::size_t a = 0; a < spec.ideal.size(); ++a)
        for (std::size_t j = 0; j < ambient.size(); ++j) jac(a, j) = spec.ideal[a].derivative(j).eval(image);
      if (rank(jac) != static_cast<std::size_t>(spec.N - spec.n)) {
        return fail("Jacobian of the ideal generators has rank " + std::to_string(rank(jac)) +
                    " at a point of X, expected N - n = " + std::to_string(spec.N - spec.n));
      }
      ++checked;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

MonomialIndex::MonomialIndex(std::size_t nvars, int degree)
    : degree_(degree), monomials_(monomials_of_degree(nvars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

QVector MonomialIndex::to_vector(const MultiPoly& p) const {
  QVector v(monomials_.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) {
    auto it = index_.find(e);
    if (it == index_.end()) {
      throw InputError("form " + p.to_string() + " has a term outside degree " + std::to_string(degree_));
    }
    v[it->second] = c;
  }
  return v;
}

MultiPoly MonomialIndex::to_poly(std::span<const Rational> v, const std::vector<std::string>& vars) const {
  MultiPoly p(vars);
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(monomials_[i], v[i]);
  return p;
}

// ---------------------------------------------------------------------------

Variety::Variety(VarietySpec spec) : state_(std::make_shared<State>()) {
  const ValidationReport report = validate(spec);
  if (!report.ok) throw ValidationError(spec.name.empty() ? report.message : spec.name + ": " + report.message);
  state_->ambient = ambient_variables(spec.N);
  for (const auto& p : spec.param_map) {
    if (!p.is_zero()) {
      state_->e = p.total_degree();
      break;
    }
  }
  std::uint64_t h = fnv1a(spec.name);
  h = fnv1a(std::to_string(spec.n) + "," + std::to_string(spec.N) + "," + std::to_string(spec.d), h);
  for (const auto& v : spec.params) h = fnv1a(v, h);
  for (const auto& p : spec.param_map) h = fnv1a(p.to_string(), h);
  for (const auto& f : spec.ideal) h = fnv1a(f.to_string(), h);
  state_->fingerprint = h;
  for (const auto& f : spec.ideal) {
    std::vector<MultiPoly> row;
    for (std::size_t j = 0; j < state_->ambient.size(); ++j) row.push_back(f.derivative(j).compose(spec.param_map));
    state_->jacobian_params.push_back(std::move(row));
  }
  state_->spec = std::move(spec);
}

MultiPoly Variety::pullback(const MultiPoly& ambient_form) const {
  if (ambient_form.variables() != ambient() && !ambient_form.variables().empty()) {
    throw InputError("pullback: form is not in the ambient variables");
  }
  if (ambient_form.variables().empty()) return MultiPoly::constant(spec().params, ambient_form.eval({}));
  return ambient_form.compose(spec().param_map);
}

GradedBasis Variety::build_basis(int m, const std::vector<Exponent>& order) const {
  GradedBasis gb;
  gb.m = m;
  if (m < 0) return gb;
  const auto& params = spec().params;
  const MonomialIndex target(num_params(), parameter_degree(m));
  // Pulled-back powers of each coordinate.
  std::vector<std::vector<MultiPoly>> powers(spec().param_map.size());
  for (std::size_t j = 0; j < powers.size(); ++j) {
    powers[j].push_back(MultiPoly::constant(params, 1));
    for (int k = 1; k <= m; ++k) powers[j].push_back(powers[j].back() * spec().param_map[j]);
  }
  std::vector<MultiPoly> images;
  std::vector<QVector> columns;
  for (const auto& e : order) {
    MultiPoly img = MultiPoly::constant(params, 1);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] != 0) img = img * powers[j][static_cast<std::size_t>(e[j])];
    }
    columns.push_back(target.to_vector(img));
    images.push_back(std::move(img));
  }
  if (columns.empty()) return gb;
  const QMatrix all = QMatrix::from_columns(target.size(), columns);
  for (std::size_t j : select_independent_columns(all).col_indices) {
    gb.basis.push_back(images[j]);
    gb.ambient_lifts.push_back(order[j]);
  }
  return gb;
}

const Variety::Piece& Variety::piece(int m) const {
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->pieces.find(m);
    if (it != state_->pieces.end()) return *it->second;
  }
  auto p = std::make_shared<Piece>();
  p->basis = build_basis(m, monomials_of_degree(ambient().size(), m));
  const MonomialIndex idx(num_params(), parameter_degree(std::max(m, 0)));
  std::vector<QVector> cols;
  for (const auto& b : p->basis.basis) cols.push_back(idx.to_vector(b));
  p->matrix = QMatrix::from_columns(m < 0 ? 0 : idx.size(), cols);
  p->solver = SpanSolver(p->matrix);
  std::lock_guard lock(state_->mutex);
  auto [it, inserted] = state_->pieces.emplace(m, std::move(p));
  return *it->second;
}

const GradedBasis& Variety::graded_basis(int m) const { return piece(m).basis; }

const QMatrix& Variety::basis_matrix(int m) const { return piece(m).matrix; }

GradedBasis Variety::graded_basis_shuffled(int m, std::uint64_t seed) const {
  auto order = monomials_of_degree(ambient().size(), m);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return build_basis(m, order);
}

QVector Variety::coordinates(int m, const MultiPoly& param_form) const {
  const Piece& p = piece(m);
  if (p.basis.dimension() == 0) {
    if (!param_form.is_zero()) throw ConsistencyError("nonzero form in a zero graded piece");
    return {};
  }
  const MonomialIndex idx(num_params(), parameter_degree(m));
  return p.solver.coordinates(idx.to_vector(param_form));
}

QMatrix Variety::multiply_by_form(const MultiPoly& g, int m) const {
  if (!g.is_zero() && (g.total_degree() != 1 || !g.is_homogeneous())) {
    throw InputError("multiply_by_form needs a linear form, got " + g.to_string());
  }
  if (!g.is_zero() && g.variables() != ambient()) throw InputError("multiply_by_form: form is not in x0..xN");
  const GradedBasis& src = graded_basis(m - 1);
  const GradedBasis& dst = graded_basis(m);
  QMatrix out(dst.dimension(), src.dimension());
  if (g.is_zero()) return out;
  const MultiPoly pulled = pullback(g);
  for (std::size_t k = 0; k < src.dimension(); ++k) {
    const QVector x = coordinates(m, pulled * src.basis[k]);
    for (std::size_t i = 0; i < x.size(); ++i) out(i, k) = x[i];
  }
  return out;
}

const QMatrix& Variety::variable_multiplication(std::size_t j, int m) const {
  const auto key = std::make_pair(j, m);
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->multiplications.find(key);
    if (it != state_->multiplications.end()) return *it->second;
  }
  auto mat = std::make_shared<const QMatrix>(multiply_by_form(MultiPoly::variable(ambient(), j), m));
  std::lock_guard lock(state_->mutex);
  auto [it, inserted] = state_->multiplications.emplace(key, std::move(mat));
  return *it->second;
}

std::vector<std::vector<MultiPoly>> Variety::jacobian() const {
  std::vector<std::vector<MultiPoly>> jac;
  for (const auto& f : spec().ideal) {
    std::vector<MultiPoly> row;
    for (std::size_t j = 0; j < ambient().size(); ++j) row.push_back(f.derivative(j));
    jac.push_back(std::move(row));
  }
  return jac;
}

const std::vector<std::vector<MultiPoly>>& Variety::jacobian_on_parameters() const { return state_->jacobian_params; }

}  // namespace cayley
