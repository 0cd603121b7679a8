#include "cayley/resultant.hpp"

#include <numeric>

#include "cayley/errors.hpp"
#include "cayley/exterior.hpp"

namespace cayley {

namespace {

TwistBook book_for(const Variety& x, const TwistSpec& twist) {
  if (twist.r < 1) throw InputError("twist multiplicity r must be at least 1");
  return TwistBook{x.param_degree(), x.n(), twist};
}

void check_pencil(const Variety& x, const ResultantPencil& f) {
  const auto rows = static_cast<std::size_t>(x.n()) + 1;
  const auto cols = static_cast<std::size_t>(x.N()) + 1;
  if (f.w.rows() != rows || f.w.cols() != cols) {
    throw InputError("pencil is " + std::to_string(f.w.rows()) + "x" + std::to_string(f.w.cols()) + ", " + x.name() +
                     " needs " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

std::string term_fingerprint(const Variety& x, const TwistSpec& twist, int t, long k) {
  std::string s = hex64(x.fingerprint()) + ":H0(O(" + std::to_string(t) + "))^" + std::to_string(twist.r) +
                  "xL^" + std::to_string(k) + ":";
  for (const auto& e : x.graded_basis(t).ambient_lifts) {
    for (int v : e) s += std::to_string(v) + ".";
    s += ";";
  }
  return hex64(fnv1a(s));
}

}  // namespace

MultiPoly pencil_row_form(const Variety& x, const ResultantPencil& f, std::size_t row) {
  MultiPoly l(x.ambient());
  for (std::size_t j = 0; j < f.w.cols(); ++j) {
    Exponent e(x.ambient().size(), 0);
    e[j] = 1;
    l.add_term(e, f.w(row, j));
  }
  return l;
}

std::vector<std::size_t> resultant_dims(const Variety& x, const TwistSpec& twist, int m) {
  const TwistBook book = book_for(x, twist);
  const auto np1 = static_cast<std::size_t>(x.n()) + 1;
  std::vector<std::size_t> dims;
  for (int i = 0; i <= x.n() + 1; ++i) {
    const auto k = static_cast<std::size_t>(book.exterior_degree(i));
    dims.push_back(static_cast<std::size_t>(twist.r) * x.graded_basis(book.resultant_term_twist(m, i)).dimension() *
                   binomial(np1, k));
  }
  return dims;
}

BasedComplex build_resultant_complex(const Variety& x, const TwistSpec& twist, int m, const ResultantPencil& f) {
  check_pencil(x, f);
  const TwistBook book = book_for(x, twist);
  const std::size_t np1 = static_cast<std::size_t>(x.n()) + 1;
  const auto r = static_cast<std::size_t>(twist.r);

  std::vector<ComplexTerm> terms;
  std::vector<ExteriorBasis> ext;
  std::vector<std::size_t> hdim;
  for (int i = 0; i <= x.n() + 1; ++i) {
    const long k = book.exterior_degree(i);
    const int t = book.resultant_term_twist(m, i);
    ext.emplace_back(np1, k);
    hdim.push_back(x.graded_basis(t).dimension());
    terms.push_back({"H0(O(" + std::to_string(t) + "))^" + std::to_string(r) + " (x) L^" + std::to_string(k),
                     ext.back().size() * hdim.back() * r, term_fingerprint(x, twist, t, k)});
  }

  std::vector<QMatrix> boundaries;
  for (int i = 0; i <= x.n(); ++i) {
    const auto si = static_cast<std::size_t>(i);
    const int t_target = book.resultant_term_twist(m, i + 1);
    // Multiplication by each l_row from degree t_target-1 to t_target.
    std::vector<QMatrix> mult;
    for (std::size_t row = 0; row < np1; ++row) {
      QMatrix acc(hdim[si + 1], hdim[si]);
      for (std::size_t j = 0; j < f.w.cols(); ++j) {
        if (f.w(row, j) == 0) continue;
        acc += x.variable_multiplication(j, t_target) * f.w(row, j);
      }
      mult.push_back(std::move(acc));
    }
    const std::size_t hs = hdim[si];
    const std::size_t ht = hdim[si + 1];
    QMatrix d(terms[si + 1].dimension, terms[si].dimension);
    for (std::size_t s = 0; s < ext[si].size(); ++s) {
      for (const auto& ct : contraction_terms(ext[si], ext[si + 1], s)) {
        const QMatrix& l = mult[ct.removed];
        for (std::size_t h = 0; h < hs; ++h) {
          for (std::size_t g = 0; g < ht; ++g) {
            if (l(g, h) == 0) continue;
            const Rational v = ct.sign * l(g, h);
            for (std::size_t c = 0; c < r; ++c) d((ct.target * ht + g) * r + c, (s * hs + h) * r + c) += v;
          }
        }
      }
    }
    boundaries.push_back(std::move(d));
  }
  return BasedComplex(std::move(terms), std::move(boundaries));
}

TorsionResult x_resultant(const Variety& x, const TwistSpec& twist, int m, const ResultantPencil& f,
                          const TorsionOptions& options) {
  const BasedComplex c = build_resultant_complex(x, twist, m, f);
  try {
    return torsion(c, options);
  } catch (const NotExactError&) {
    throw PencilMeetsX();
  }
}

long resultant_degree_check(const Variety& x, const TwistSpec& twist, int m) {
  const auto dims = resultant_dims(x, twist, m);
  long euler = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(dims[i]);
  // sum_j (-1)^{j+1} j h0(Lambda^j) with j the exterior degree n+1-i.
  long weighted = 0;
  const long np1 = x.n() + 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const long j = np1 - static_cast<long>(i);
    weighted += ((j + 1) % 2 == 0 ? 1 : -1) * j * static_cast<long>(dims[i]);
  }
  const long expected = static_cast<long>(twist.r) * x.degree() * np1;
  if (euler != 0 || weighted != expected || torsion_scaling_exponent(dims) != expected) {
    throw ConsistencyError("resultant complex of " + x.name() + " at m=" + std::to_string(m) + ": Euler characteristic " +
                           std::to_string(euler) + ", weighted sum " + std::to_string(weighted) + ", expected " +
                           std::to_string(expected) + " (m below the stable range?)");
  }
  return weighted;
}

ResultantPencil random_pencil(const Variety& x, std::mt19937_64& rng, long bound) {
  ResultantPencil f{QMatrix(static_cast<std::size_t>(x.n()) + 1, static_cast<std::size_t>(x.N()) + 1)};
  for (std::size_t i = 0; i < f.w.rows(); ++i)
    for (std::size_t j = 0; j < f.w.cols(); ++j) f.w(i, j) = random_integer(rng, -bound, bound);
  return f;
}

int stable_resultant_twist(const Variety& x, const TwistSpec& twist, int start, int cap_steps) {
  if (start < 0) start = x.n() + 3;
  std::mt19937_64 rng(0xc0ffee);
  for (int m = start; m <= start + cap_steps; ++m) {
    try {
      resultant_degree_check(x, twist, m);
    } catch (const ConsistencyError&) {
      continue;
    }
    if (check_exact(build_resultant_complex(x, twist, m, random_pencil(x, rng))).exact) return m;
  }
  throw ConsistencyError("no stable twist found for the resultant complex of " + x.name() + " in [" +
                         std::to_string(start) + ", " + std::to_string(start + cap_steps) + "]");
}

MultiPoly reconstruct_chow_form(const Variety& x, const TwistSpec& twist, int m, std::uint64_t seed,
                                std::size_t max_monomials) {
  const std::size_t rows = static_cast<std::size_t>(x.n()) + 1;
  const std::size_t cols = static_cast<std::size_t>(x.N()) + 1;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) vars.push_back("w" + std::to_string(i) + "_" + std::to_string(j));

  // Support: products of one degree-(d r) monomial per row.
  const auto row_monos = monomials_of_degree(cols, x.degree() * twist.r);
  std::vector<Exponent> support(1, Exponent{});
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Exponent> next;
    for (const auto& prefix : support) {
      for (const auto& mono : row_monos) {
        Exponent e = prefix;
        e.insert(e.end(), mono.begin(), mono.end());
        next.push_back(std::move(e));
      }
    }
    support = std::move(next);
    if (support.size() > max_monomials) {
      throw InputError("Chow form reconstruction needs " + std::to_string(support.size()) +
                       "+ monomials, above the limit of " + std::to_string(max_monomials));
    }
  }

  std::mt19937_64 rng(seed);
  const std::size_t samples = support.size() + 8;
  std::vector<QVector> eval_rows;
  QVector values;
  while (eval_rows.size() < samples) {
    ResultantPencil f = random_pencil(x, rng, 5);
    Rational value;
    try {
      value = x_resultant(x, twist, m, f).value;
    } catch (const PencilMeetsX&) {
      continue;
    }
    QVector row;
    for (const auto& e : support) {
      Rational mono = 1;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] != 0) mono *= pow(f.w(k / cols, k % cols), e[k]);
      }
      row.push_back(mono);
    }
    eval_rows.push_back(std::move(row));
    values.push_back(value);
  }
  QMatrix a(samples, support.size());
  for (std::size_t i = 0; i < samples; ++i)
    for (std::size_t j = 0; j < support.size(); ++j) a(i, j) = eval_rows[i][j];
  const MinorSelection pick = select_independent_columns(a.transpose());
  if (pick.col_indices.size() != support.size()) {
    throw ConsistencyError("interpolation points do not determine the Chow form");
  }
  std::vector<std::size_t> all(support.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  QVector rhs;
  for (std::size_t i : pick.col_indices) rhs.push_back(values[i]);
  const QVector coeffs = inverse(a.submatrix(pick.col_indices, all)) * std::span<const Rational>(rhs);
  // The surplus samples must agree.
  const QVector check = a * std::span<const Rational>(coeffs);
  for (std::size_t i = 0; i < samples; ++i) {
    if (check[i] != values[i]) throw ConsistencyError("torsion is not a polynomial of the expected multidegree");
  }
  MultiPoly p(vars);
  for (std::size_t j = 0; j < support.size(); ++j) p.add_term(support[j], coeffs[j]);
  return p;
}

}  // namespace cayley
