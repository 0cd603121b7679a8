#include <doctest.h>

#include <random>

#include "cayley/errors.hpp"
#include "cayley/oracles.hpp"

using namespace cayley;

namespace {

BinaryForm form(const char* text) { return parse_binary_form(text); }

BinaryForm random_form(int e, std::mt19937_64& rng) {
  BinaryForm f;
  for (int i = 0; i <= e; ++i) f.c.push_back(random_integer(rng, -6, 6));
  if (f.c.front() == 0) f.c.front() = 1;
  return f;
}

BinaryForm product(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm p;
  p.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
  return p;
}

const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPoly ternary(const char* text) { return MultiPoly::parse(text, kXYZ); }

}  // namespace

TEST_CASE("Sylvester resultant values") {
  CHECK(sylvester_resultant(form("s"), form("t")) == 1);
  CHECK(sylvester_resultant(form("s - t"), form("s - t")) == 0);
  // roots of s^2 - t^2: s = +-t; s^2 + st at s = t gives 2, at s = -t gives 0
  CHECK(sylvester_resultant(form("s^2 - t^2"), form("s^2 + s*t")) == 0);
  // (s - t)(s + t) against s^2 + 2t^2: 4x4 determinant, product of q over the roots = 3 * 3
  CHECK(sylvester_resultant(form("s^2 - t^2"), form("s^2 + 2*t^2")) == 9);
  CHECK_THROWS_AS(sylvester_resultant(BinaryForm{{0, 0}}, form("s")), InputError);
}

TEST_CASE("property: antisymmetry and multiplicativity") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 10; ++k) {
    const BinaryForm p = random_form(1 + k % 3, rng);
    const BinaryForm q = random_form(1 + (k + 1) % 3, rng);
    const BinaryForm r = random_form(1 + (k + 2) % 2, rng);
    const int sign = (p.degree() * q.degree()) % 2 == 0 ? 1 : -1;
    CHECK(sylvester_resultant(p, q) == sign * sylvester_resultant(q, p));
    CHECK(sylvester_resultant(p, product(q, r)) == sylvester_resultant(p, q) * sylvester_resultant(p, r));
  }
}

TEST_CASE("binary discriminants") {
  CHECK(binary_discriminant(form("s^2 - t^2")) == 4);
  CHECK(binary_discriminant(form("(s + t)^2")) == 0);
  CHECK(binary_discriminant(form("2*s^2 + 3*s*t + 5*t^2")) == 9 - 40);
  // s^3 + p s t^2 + q t^3 has discriminant -4p^3 - 27q^2
  CHECK(binary_discriminant(form("s^3 - s*t^2")) == 4);
  CHECK(binary_discriminant(form("s^3 + 2*s*t^2 + t^3")) == -4 * 8 - 27);
  CHECK(binary_discriminant(form("t^3")) == 0);
  CHECK_THROWS_AS(binary_discriminant(form("s + t")), InputError);
}

TEST_CASE("property: discriminant vanishes on repeated roots") {
  std::mt19937_64 rng(72);
  for (int k = 0; k < 10; ++k) {
    const BinaryForm l = random_form(1, rng);
    const BinaryForm rest = random_form(1 + k % 3, rng);
    CHECK(binary_discriminant(product(product(l, l), rest)) == 0);
  }
}

TEST_CASE("Macaulay resultant of three forms") {
  // Linear forms: the coefficient determinant.
  CHECK(macaulay_resultant_3forms(ternary("x + 2*y"), ternary("y - z"), ternary("3*x + z")) == 1 * (1 * 1 - 0) - 2 * (0 + 3) + 0);
  CHECK(macaulay_resultant_3forms(ternary("x^2"), ternary("y^2"), ternary("z^2")) == 1);
  CHECK(macaulay_resultant_3forms(ternary("x^2 + y*z"), ternary("x*y - z^2"), ternary("x*y - z^2")) == 0);
  // Common zero (1:1:1).
  CHECK(macaulay_resultant_3forms(ternary("x^2 - y*z"), ternary("y^2 - x*z"), ternary("x + y - 2*z")) == 0);
  // Diagonal forms: Res(a x^2, b y^2, c z^2) = a^4 b^4 c^4.
  CHECK(macaulay_resultant_3forms(ternary("2*x^2"), ternary("y^2"), ternary("3*z^2")) == 16 * 81);
  CHECK_THROWS_AS(macaulay_resultant_3forms(ternary("x^3"), ternary("y"), ternary("z")), InputError);
}

TEST_CASE("Macaulay resultant: mixed degrees and change of variables") {
  std::mt19937_64 rng(73);
  // Res(f o A) = det(A)^{d0 d1 d2} Res(f).
  const std::vector<MultiPoly> f{ternary("x^2 + y*z - z^2"), ternary("x + 3*y - z"), ternary("y^2 - 2*x*z + x*y")};
  const Rational base = macaulay_resultant_3forms(f[0], f[1], f[2]);
  CHECK(base != 0);
  const QMatrix a = random_invertible(3, rng);
  std::vector<MultiPoly> subs;
  for (std::size_t i = 0; i < 3; ++i) {
    MultiPoly s(kXYZ);
    for (std::size_t j = 0; j < 3; ++j) s += MultiPoly::variable(kXYZ, j) * a(i, j);
    subs.push_back(s);
  }
  const Rational moved = macaulay_resultant_3forms(f[0].compose(subs), f[1].compose(subs), f[2].compose(subs));
  CHECK(moved == pow(det(a), 4) * base);
}
