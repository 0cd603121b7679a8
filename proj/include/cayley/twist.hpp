#pragma once

namespace cayley {

/// V = O_X(a)^{+r}.
struct TwistSpec {
  int a = 0;
  int r = 1;
};

/// Every conversion between abstract twists and parameter degrees goes
/// through here. X is parametrized by forms of degree e, so O_X(t) pulls back
/// to O(e*t) on the parameter space.
struct TwistBook {
  int e = 1;       // degree of the parametrization
  int n = 1;       // dim X
  TwistSpec v;

  /// O_X-twist of H^0(V(m - (n+1-i))) in the i-th resultant term.
  int resultant_term_twist(int m, int i) const { return v.a + m - (n + 1 - i); }
  /// Exterior degree of the i-th term of either complex.
  int exterior_degree(int i) const { return n + 1 - i; }
  /// O_X-twist of the coefficient forms of a section of Lambda^j T(cone) (x) V(m).
  int cone_section_twist(int m) const { return v.a + m; }
  /// O_X-twist of Lambda^{i-1} T_X (x) V(m-i) and Lambda^i T_X (x) V(m-i).
  int tangent_twist(int m, int i) const { return v.a + m - i; }
  /// Parameter degree of forms in H^0(O_X(t)).
  int parameter_degree(int t) const { return e * t; }
  /// Lambda^k T_{P^n}(e t) is the cokernel of u ^ . from Lambda^{k-1} (x) forms of
  /// degree e t + k - 1 into Lambda^k (x) forms of degree e t + k.
  int euler_target_degree(int k, int t) const { return e * t + k; }
  int euler_source_degree(int k, int t) const { return e * t + k - 1; }
};

}  // namespace cayley
