#pragma once

#include <random>
#include <vector>

#include "cayley/arith/multipoly.hpp"
#include "cayley/discriminant.hpp"
#include "cayley/resultant.hpp"

namespace cayley {

/// sum_i c[i] s^{e-i} t^i, e = c.size() - 1.
struct BinaryForm {
  std::vector<Rational> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const;
};

/// Reads a form given as a homogeneous polynomial in two variables (first = s).
BinaryForm binary_form_from(const MultiPoly& p);
BinaryForm parse_binary_form(std::string_view text);

/// Determinant of the Sylvester matrix (deg q shifted rows of p, then deg p
/// rows of q). Res(s, t) = 1. Zero forms raise InputError.
Rational sylvester_resultant(const BinaryForm& p, const BinaryForm& q);

/// (-1)^{e(e-1)/2} Res(dp/ds, dp/dt) / e^{e-2}, so that as^2+bst+ct^2 gives b^2-4ac.
Rational binary_discriminant(const BinaryForm& p);

/// Macaulay resultant of three ternary forms of degrees in {1, 2}, normalized by
/// Res(x0^d0, x1^d1, x2^d2) = 1. Other degrees raise InputError.
Rational macaulay_resultant_3forms(const MultiPoly& f0, const MultiPoly& f1, const MultiPoly& f2);

/// Pencil rows pulled back to the parameter space.
std::vector<MultiPoly> pencil_pullbacks(const Variety& x, const ResultantPencil& f);

/// Classical resultant of the pulled-back rows: Sylvester on curves with two
/// parameters, Macaulay on surfaces with three parameters and e <= 2.
Rational chow_oracle(const Variety& x, const ResultantPencil& f);

/// Binary discriminant of f pulled back to a rational curve.
Rational discriminant_oracle(const Variety& x, const DualCovector& f);

/// A random covector vanishing on the embedded tangent space at the point of X
/// over the given parameters.
DualCovector tangent_covector(const Variety& x, std::span<const Rational> params, std::mt19937_64& rng);

/// A pencil whose kernel contains the point of X over the given parameters.
ResultantPencil incident_pencil(const Variety& x, std::span<const Rational> params, std::mt19937_64& rng);

}  // namespace cayley
