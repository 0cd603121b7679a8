#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cayley/torsion.hpp"
#include "cayley/twist.hpp"
#include "cayley/variety.hpp"

namespace cayley {

/// A linear form f = sum_j f_j x_j on C^{N+1}.
struct DualCovector {
  QVector f;
};

/// H^0(Lambda^j T(cone) (x) O_X(t)) realized inside Lambda^j(C^{N+1}) (x) H^0(O_X(t)).
/// Columns of `basis` are sections in the coordinates (exterior subset s, graded
/// basis element h) -> s * H + h with H = dim H^0(O_X(t)).
struct ConeTangentSections {
  long j = 0;
  int t = 0;
  std::size_t graded_dimension = 0;
  QMatrix basis;
  std::size_t dimension() const { return basis.cols(); }
};

/// Sections annihilated by contraction with every Jacobian row. Memoized per (X, j, t).
const ConeTangentSections& cone_tangent_sections(const Variety& x, long j, int t);

/// dim E^i = r * h0(Lambda^{n+1-i} T(cone) (x) O_X(a+m)), i = 0..n+1.
std::vector<std::size_t> discriminant_dims(const Variety& x, const TwistSpec& twist, int m);

/// E^i = H^0(Lambda^{n+1-i} T(cone) (x) V(m)); the boundary is contraction with f.
/// Basis of E^i is ordered (section, copy) with the copy index innermost.
BasedComplex build_discriminant_complex(const Variety& x, const TwistSpec& twist, int m, const DualCovector& f);

/// Torsion of the discriminant complex. Throws CovectorTangent when it is not
/// exact and DegenerateDual when its degree in f is 0.
TorsionResult x_discriminant(const Variety& x, const TwistSpec& twist, int m, const DualCovector& f,
                             const TorsionOptions& options = {});

/// Degree in f read off the dimensions. Throws ConsistencyError when the Euler
/// characteristic is nonzero or the variety's known dual degree times r disagrees.
long discriminant_degree_check(const Variety& x, const TwistSpec& twist, int m);

DualCovector random_covector(const Variety& x, std::mt19937_64& rng, long bound = 9);

/// Smallest m >= start (default n+3) passing discriminant_degree_check with an
/// exact complex at a random probe covector.
int stable_discriminant_twist(const Variety& x, const TwistSpec& twist, int start = -1, int cap_steps = 8);

/// h0(Lambda^k T_X (x) O_X(t)) for X the image of P^n under its parametrization,
/// from the Euler sequence on the parameter space. Needs n+1 parameters and d = e^n.
std::size_t tangent_power_sections_dim(const Variety& x, long k, int t);

struct SplitH0Report {
  long i = 0;
  int m = 0;
  std::size_t cone = 0;   // h0(Lambda^i T(cone) (x) V(m))
  std::size_t lower = 0;  // h0(Lambda^{i-1} T_X (x) V(m-i))
  std::size_t upper = 0;  // h0(Lambda^i T_X (x) V(m-i))
  bool ok() const { return cone == lower + upper; }
};

/// Compares the two sides of the split for Lambda^i; throws ConsistencyError on mismatch.
SplitH0Report split_h0_check(const Variety& x, const TwistSpec& twist, int m, long i);

}  // namespace cayley
