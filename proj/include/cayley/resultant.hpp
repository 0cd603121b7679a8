#pragma once

#include <cstdint>
#include <vector>

#include "cayley/torsion.hpp"
#include "cayley/twist.hpp"
#include "cayley/variety.hpp"

namespace cayley {

/// (n+1) x (N+1) matrix; row i is the linear form l_i = sum_j w_ij x_j.
struct ResultantPencil {
  QMatrix w;
};

/// l_row as an ambient linear form.
MultiPoly pencil_row_form(const Variety& x, const ResultantPencil& f, std::size_t row);

/// dim E^i = r * h0(O_X(a + m - (n+1-i))) * C(n+1, n+1-i), i = 0..n+1.
std::vector<std::size_t> resultant_dims(const Variety& x, const TwistSpec& twist, int m);

/// E^i = H^0(V(m-(n+1-i))) (x) Lambda^{n+1-i}, boundary P (x) psi -> sum_k l_k P (x) i_{e_k} psi.
/// Basis of E^i is ordered (exterior subset, graded basis element, copy) with the
/// copy index innermost, which makes the torsion exactly multiplicative in r.
BasedComplex build_resultant_complex(const Variety& x, const TwistSpec& twist, int m, const ResultantPencil& f);

/// Torsion of the resultant complex; throws PencilMeetsX when it is not exact.
TorsionResult x_resultant(const Variety& x, const TwistSpec& twist, int m, const ResultantPencil& f,
                          const TorsionOptions& options = {});

/// sum_j (-1)^{j+1} j dim E^j from the built dimensions; throws ConsistencyError
/// unless it equals r d (n+1) and the Euler characteristic vanishes.
long resultant_degree_check(const Variety& x, const TwistSpec& twist, int m);

/// Random pencil with small integer entries.
ResultantPencil random_pencil(const Variety& x, std::mt19937_64& rng, long bound = 9);

/// Smallest m >= start (default n+3) where the dimension bookkeeping holds and a
/// random probe pencil gives an exact complex; ConsistencyError past the cap.
int stable_resultant_twist(const Variety& x, const TwistSpec& twist, int start = -1, int cap_steps = 8);

/// Tor as an explicit polynomial in the entries w{i}_{j}, by dense interpolation
/// over the multihomogeneous monomials of degree d*r in each row. Refuses
/// supports larger than `max_monomials`.
MultiPoly reconstruct_chow_form(const Variety& x, const TwistSpec& twist, int m, std::uint64_t seed = 1,
                                std::size_t max_monomials = 256);

}  // namespace cayley
