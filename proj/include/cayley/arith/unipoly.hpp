#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayley/arith/rational.hpp"

namespace cayley {

/// Dense univariate polynomial, lowest degree first, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  /// x^l
  static UniPoly power(int l);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(int k) const;
  Rational eval(const Rational& x) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
};

/// Unique polynomial of degree < samples.size() through all (x, y) samples.
/// Repeated abscissae raise InputError.
UniPoly interpolate_univariate(std::span<const std::pair<Rational, Rational>> samples);

}  // namespace cayley
