#include "cayley/arith/unipoly.hpp"

#include "cayley/errors.hpp"

namespace cayley {

UniPoly::UniPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::power(int l) {
  std::vector<Rational> c(static_cast<std::size_t>(l) + 1, Rational(0));
  c.back() = 1;
  return UniPoly(std::move(c));
}

Rational UniPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = abs(c);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

UniPoly interpolate_univariate(std::span<const std::pair<Rational, Rational>> samples) {
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (samples[i].first == samples[j].first) {
        throw InputError("interpolation: repeated abscissa " + samples[i].first.get_str());
      }
    }
  }
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = samples[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);
      if (i == level) break;
    }
  }
  std::vector<Rational> poly(n == 0 ? 0 : 1, Rational(0));
  if (n == 0) return UniPoly();
  poly[0] = dd[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (x - x_k) + dd[k]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * samples[k].first;
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return UniPoly(std::move(poly));
}

}  // namespace cayley
