#include "cayley/discriminant.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "cayley/errors.hpp"
#include "cayley/exterior.hpp"

namespace cayley {

namespace {

struct SectionEntry {
  ConeTangentSections sections;
  SpanSolver solver;
};

std::mutex g_sections_mutex;
std::map<std::tuple<std::uint64_t, long, int>, std::shared_ptr<const SectionEntry>> g_sections;

SectionEntry solve_sections(const Variety& x, long j, int t) {
  const std::size_t amb = static_cast<std::size_t>(x.N()) + 1;
  const GradedBasis& gb = x.graded_basis(t);
  const std::size_t hdim = gb.dimension();
  const ExteriorBasis src(amb, j);

  SectionEntry out;
  out.sections.j = j;
  out.sections.t = t;
  out.sections.graded_dimension = hdim;
  const std::size_t unknowns = src.size() * hdim;
  if (j == 0 || unknowns == 0) {
    out.sections.basis = QMatrix::identity(unknowns);
  } else {
    const ExteriorBasis dst(amb, j - 1);
    const auto& jac = x.jacobian_on_parameters();
    // One block of equations per generator: iota_{dF} omega = 0 as forms in the parameters.
    std::vector<QMatrix> blocks;
    std::size_t total_rows = 0;
    for (std::size_t alpha = 0; alpha < jac.size(); ++alpha) {
      const int gen_degree = x.spec().ideal[alpha].total_degree();
      const MonomialIndex idx(x.num_params(), x.parameter_degree(t) + x.param_degree() * (gen_degree - 1));
      // products[var][h] = dF_alpha/dx_var * basis[h]
      std::vector<std::vector<QVector>> products(amb);
      for (std::size_t v = 0; v < amb; ++v) {
        if (jac[alpha][v].is_zero()) continue;
        for (std::size_t h = 0; h < hdim; ++h) products[v].push_back(idx.to_vector(jac[alpha][v] * gb.basis[h]));
      }
      QMatrix block(dst.size() * idx.size(), unknowns);
      for (std::size_t s = 0; s < src.size(); ++s) {
        for (const auto& ct : contraction_terms(src, dst, s)) {
          if (products[ct.removed].empty()) continue;
          for (std::size_t h = 0; h < hdim; ++h) {
            const QVector& p = products[ct.removed][h];
            for (std::size_t q = 0; q < p.size(); ++q) {
              if (p[q] != 0) block(ct.target * idx.size() + q, s * hdim + h) += ct.sign * p[q];
            }
          }
        }
      }
      total_rows += block.rows();
      blocks.push_back(std::move(block));
    }
    QMatrix system(total_rows, unknowns);
    std::size_t row = 0;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i, ++row)
        for (std::size_t c = 0; c < unknowns; ++c) system(row, c) = b(i, c);
    }
    const auto kernel = kernel_basis(system);
    out.sections.basis = QMatrix::from_columns(unknowns, kernel);
  }
  out.solver = SpanSolver(out.sections.basis);
  return out;
}

const SectionEntry& section_entry(const Variety& x, long j, int t) {
  const auto key = std::make_tuple(x.fingerprint(), j, t);
  {
    std::lock_guard lock(g_sections_mutex);
    auto it = g_sections.find(key);
    if (it != g_sections.end()) return *it->second;
  }
  auto entry = std::make_shared<const SectionEntry>(solve_sections(x, j, t));
  std::lock_guard lock(g_sections_mutex);
  auto [it, inserted] = g_sections.emplace(key, std::move(entry));
  return *it->second;
}

TwistBook book_for(const Variety& x, const TwistSpec& twist) {
  if (twist.r < 1) throw InputError("twist multiplicity r must be at least 1");
  return TwistBook{x.param_degree(), x.n(), twist};
}

void check_covector(const Variety& x, const DualCovector& f) {
  if (f.f.size() != static_cast<std::size_t>(x.N()) + 1) {
    throw InputError("covector has " + std::to_string(f.f.size()) + " entries, " + x.name() + " needs " +
                     std::to_string(x.N() + 1));
  }
  bool zero = true;
  for (const auto& v : f.f) zero = zero && v == 0;
  if (zero) throw InputError("covector is zero");
}

}  // namespace

const ConeTangentSections& cone_tangent_sections(const Variety& x, long j, int t) {
  if (j < 0 || j > x.N() + 1) throw InputError("exterior degree out of range");
  return section_entry(x, j, t).sections;
}

std::vector<std::size_t> discriminant_dims(const Variety& x, const TwistSpec& twist, int m) {
  const TwistBook book = book_for(x, twist);
  std::vector<std::size_t> dims;
  for (int i = 0; i <= x.n() + 1; ++i) {
    dims.push_back(static_cast<std::size_t>(twist.r) *
                   cone_tangent_sections(x, book.exterior_degree(i), book.cone_section_twist(m)).dimension());
  }
  return dims;
}

BasedComplex build_discriminant_complex(const Variety& x, const TwistSpec& twist, int m, const DualCovector& f) {
  check_covector(x, f);
  const TwistBook book = book_for(x, twist);
  const int t = book.cone_section_twist(m);
  const auto r = static_cast<std::size_t>(twist.r);
  const std::size_t amb = static_cast<std::size_t>(x.N()) + 1;
  const std::size_t hdim = x.graded_basis(t).dimension();

  std::vector<const SectionEntry*> entries;
  std::vector<ComplexTerm> terms;
  for (int i = 0; i <= x.n() + 1; ++i) {
    const long k = book.exterior_degree(i);
    const SectionEntry& e = section_entry(x, k, t);
    entries.push_back(&e);
    std::string fp = hex64(x.fingerprint()) + ":T^" + std::to_string(k) + "(" + std::to_string(t) + ")^" +
                     std::to_string(r) + ":" + e.sections.basis.to_string();
    terms.push_back({"H0(L^" + std::to_string(k) + " T(cone)(" + std::to_string(t) + "))^" + std::to_string(r),
                     e.sections.dimension() * r, hex64(fnv1a(fp))});
  }

  std::vector<QMatrix> boundaries;
  for (int i = 0; i <= x.n(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    const SectionEntry& from = *entries[si];
    const SectionEntry& to = *entries[si + 1];
    const ExteriorBasis src(amb, from.sections.j);
    const ExteriorBasis dst(amb, to.sections.j);
    // iota_f on the ambient coordinates of every source section, then back into the target basis.
    QMatrix images(dst.size() * hdim, from.sections.dimension());
    for (std::size_t c = 0; c < from.sections.dimension(); ++c) {
      for (std::size_t s = 0; s < src.size(); ++s) {
        for (const auto& ct : contraction_terms(src, dst, s)) {
          const Rational& fx = f.f[ct.removed];
          if (fx == 0) continue;
          for (std::size_t h = 0; h < hdim; ++h) {
            const Rational& v = from.sections.basis(s * hdim + h, c);
            if (v != 0) images(ct.target * hdim + h, c) += ct.sign * fx * v;
          }
        }
      }
    }
    const QMatrix coords = to.solver.coordinates(images);
    QMatrix d(coords.rows() * r, coords.cols() * r);
    for (std::size_t a = 0; a < coords.rows(); ++a)
      for (std::size_t b = 0; b < coords.cols(); ++b)
        if (coords(a, b) != 0)
          for (std::size_t c = 0; c < r; ++c) d(a * r + c, b * r + c) = coords(a, b);
    boundaries.push_back(std::move(d));
  }
  return BasedComplex(std::move(terms), std::move(boundaries));
}

TorsionResult x_discriminant(const Variety& x, const TwistSpec& twist, int m, const DualCovector& f,
                             const TorsionOptions& options) {
  const BasedComplex c = build_discriminant_complex(x, twist, m, f);
  if (torsion_scaling_exponent(c.dims()) == 0) throw DegenerateDual();
  try {
    return torsion(c, options);
  } catch (const NotExactError&) {
    throw CovectorTangent();
  }
}

long discriminant_degree_check(const Variety& x, const TwistSpec& twist, int m) {
  const auto dims = discriminant_dims(x, twist, m);
  long euler = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(dims[i]);
  const long degree = torsion_scaling_exponent(dims);
  const long expected = static_cast<long>(twist.r) * x.spec().dual_degree;
  if (euler != 0 || (expected != 0 && degree != expected)) {
    throw ConsistencyError("discriminant complex of " + x.name() + " at m=" + std::to_string(m) +
                           ": Euler characteristic " + std::to_string(euler) + ", degree " + std::to_string(degree) +
                           (expected != 0 ? ", expected " + std::to_string(expected) : std::string()) +
                           " (m below the stable range?)");
  }
  return degree;
}

DualCovector random_covector(const Variety& x, std::mt19937_64& rng, long bound) {
  DualCovector f;
  do {
    f.f.clear();
    for (int j = 0; j <= x.N(); ++j) f.f.push_back(random_integer(rng, -bound, bound));
  } while (std::all_of(f.f.begin(), f.f.end(), [](const Rational& v) { return v == 0; }));
  return f;
}

int stable_discriminant_twist(const Variety& x, const TwistSpec& twist, int start, int cap_steps) {
  if (start < 0) start = x.n() + 3;
  std::mt19937_64 rng(0xd15c);
  for (int m = start; m <= start + cap_steps; ++m) {
    try {
      discriminant_degree_check(x, twist, m);
    } catch (const ConsistencyError&) {
      continue;
    }
    if (check_exact(build_discriminant_complex(x, twist, m, random_covector(x, rng))).exact) return m;
  }
  throw ConsistencyError("no stable twist found for the discriminant complex of " + x.name() + " in [" +
                         std::to_string(start) + ", " + std::to_string(start + cap_steps) + "]");
}

std::size_t tangent_power_sections_dim(const Variety& x, long k, int t) {
  const std::size_t np1 = static_cast<std::size_t>(x.n()) + 1;
  if (x.num_params() != np1) throw InputError(x.name() + " is not parametrized by P^n");
  long e_pow = 1;
  for (int i = 0; i < x.n(); ++i) e_pow *= x.param_degree();
  if (e_pow != x.degree()) throw InputError(x.name() + ": parametrization is not birational (d != e^n)");
  if (k < 0 || k > x.n()) return 0;
  const TwistBook book{x.param_degree(), x.n(), {}};
  const int s = book.parameter_degree(t);
  auto forms = [&](int deg) { return deg < 0 ? std::size_t{0} : monomials_of_degree(np1, deg).size(); };
  if (k == 0) return forms(s);
  const int hi = book.euler_target_degree(static_cast<int>(k), t);
  const int lo = book.euler_source_degree(static_cast<int>(k), t);
  const std::size_t target_dim = binomial(np1, static_cast<std::size_t>(k)) * forms(hi);
  if (lo < 0 || target_dim == 0) return target_dim;
  // u ^ . with u = (s_0, ..., s_n), from Lambda^{k-1} (x) S_lo to Lambda^k (x) S_hi.
  const ExteriorBasis from(np1, k - 1);
  const ExteriorBasis to(np1, k);
  const MonomialIndex src(np1, lo);
  const MonomialIndex dst(np1, hi);
  std::map<Exponent, std::size_t> dst_index;
  for (std::size_t q = 0; q < dst.size(); ++q) dst_index.emplace(dst.monomials()[q], q);
  QMatrix wedge(to.size() * dst.size(), from.size() * src.size());
  for (std::size_t u = 0; u < from.size(); ++u) {
    const auto& subset = from.subset(u);
    for (std::size_t v = 0; v < np1; ++v) {
      if (std::find(subset.begin(), subset.end(), v) != subset.end()) continue;
      std::vector<std::size_t> joined = subset;
      const auto below = static_cast<std::size_t>(std::count_if(subset.begin(), subset.end(), [&](std::size_t y) { return y < v; }));
      joined.insert(joined.begin() + static_cast<long>(below), v);
      const int sign = below % 2 == 0 ? 1 : -1;
      const std::size_t target = to.index_of(joined);
      for (std::size_t q = 0; q < src.size(); ++q) {
        Exponent mono = src.monomials()[q];
        mono[v] += 1;
        wedge(target * dst.size() + dst_index.at(mono), u * src.size() + q) = sign;
      }
    }
  }
  return target_dim - rank(wedge);
}

SplitH0Report split_h0_check(const Variety& x, const TwistSpec& twist, int m, long i) {
  const TwistBook book = book_for(x, twist);
  if (i < 0 || i > x.n() + 1) throw InputError("split_h0_check: i out of range");
  SplitH0Report rep;
  rep.i = i;
  rep.m = m;
  const auto r = static_cast<std::size_t>(twist.r);
  rep.cone = r * cone_tangent_sections(x, i, book.cone_section_twist(m)).dimension();
  const int t = book.tangent_twist(m, static_cast<int>(i));
  rep.lower = r * tangent_power_sections_dim(x, i - 1, t);
  rep.upper = r * tangent_power_sections_dim(x, i, t);
  if (!rep.ok()) {
    throw ConsistencyError("split h0 mismatch for " + x.name() + " at m=" + std::to_string(m) + ", i=" +
                           std::to_string(i) + ": " + std::to_string(rep.cone) + " != " + std::to_string(rep.lower) +
                           " + " + std::to_string(rep.upper));
  }
  return rep;
}

}  // namespace cayley
