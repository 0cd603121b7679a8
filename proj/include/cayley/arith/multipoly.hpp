#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/arith/rational.hpp"

namespace cayley {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Graded-lex "less": lower total degree first, ties broken lexicographically
/// with variable 0 most significant. This is the one monomial order used
/// everywhere (term storage, printing, basis enumeration).
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree `degree` in `nvars` variables,
/// in descending graded-lex order (x0^d first).
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);

/// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
  static MultiPoly monomial(std::vector<std::string> variables, Exponent exponent,
                            const Rational& c = Rational(1));

  /// Parses `3/2*x0^2*x1 - x2`; also accepts parentheses and integer powers of
  /// parenthesized sums. Unknown identifiers raise InputError.
  static MultiPoly parse(std::string_view text, const std::vector<std::string>& variables);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e (drops the term if the sum cancels).
  void add_term(const Exponent& e, const Rational& c);

  Rational eval(std::span<const Rational> point) const;
  MultiPoly derivative(std::size_t var) const;
  /// Substitutes subs[i] for variable i; the result lives in subs' variable list.
  MultiPoly compose(std::span<const MultiPoly> subs) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string() const;

 private:
  void unify_variables(const MultiPoly& o);

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

}  // namespace cayley
