#include <doctest.h>

#include "cayley/arith/multipoly.hpp"
#include "cayley/arith/unipoly.hpp"
#include "cayley/errors.hpp"

using namespace cayley;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("+2") == 2);
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(to_string(Rational(6, -8)) == "-3/4");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("rational powers") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow(Rational(0), -1), InputError);
}

TEST_CASE("random rationals stay in range") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Rational q = random_nonzero_rational(rng, 5, 3);
    CHECK(q != 0);
    CHECK(abs(q.get_num()) <= 5);
    CHECK(q.get_den() <= 3);
    const Rational z = random_integer(rng, -2, 2);
    CHECK(z >= -2);
    CHECK(z <= 2);
  }
}

TEST_CASE("monomials come in descending graded-lex order") {
  const auto m = monomials_of_degree(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == Exponent{2, 0, 0});
  CHECK(m[1] == Exponent{1, 1, 0});
  CHECK(m.back() == Exponent{0, 0, 2});
  CHECK(monomials_of_degree(4, 3).size() == 20);
  CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("polynomial parsing round trip") {
  const std::vector<std::string> v{"x0", "x1", "x2"};
  const MultiPoly p = MultiPoly::parse("3/2*x0^2*x1 - x2", v);
  CHECK(p.num_terms() == 2);
  CHECK(p.coefficient({2, 1, 0}) == Rational(3, 2));
  CHECK(p.coefficient({0, 0, 1}) == -1);
  CHECK(MultiPoly::parse(p.to_string(), v) == p);
  CHECK(MultiPoly::parse("(x0 + x1)^2", v) == MultiPoly::parse("x0^2 + 2*x0*x1 + x1^2", v));
  CHECK_THROWS_AS(MultiPoly::parse("x0 + y", v), InputError);
  CHECK_THROWS_AS(MultiPoly::parse("x0 +", v), InputError);
}

TEST_CASE("polynomial arithmetic") {
  const std::vector<std::string> v{"s", "t"};
  const MultiPoly s = MultiPoly::variable(v, 0);
  const MultiPoly t = MultiPoly::variable(v, 1);
  const MultiPoly p = (s + t) * (s - t);
  CHECK(p == s * s - t * t);
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + MultiPoly::constant(v, 1)).is_homogeneous());
  CHECK(MultiPoly(v).total_degree() == -1);
  CHECK(pow(s + t, 3).num_terms() == 4);
  CHECK((p - p).is_zero());
}

TEST_CASE("evaluation, derivative, composition") {
  const std::vector<std::string> v{"x0", "x1", "x2"};
  const MultiPoly f = MultiPoly::parse("x0*x2 - x1^2", v);
  const std::vector<Rational> pt{1, 2, 4};
  CHECK(f.eval(pt) == 0);
  CHECK(f.derivative(1) == MultiPoly::parse("-2*x1", v));
  const std::vector<std::string> p{"s", "t"};
  const std::vector<MultiPoly> conic{MultiPoly::parse("s^2", p), MultiPoly::parse("s*t", p), MultiPoly::parse("t^2", p)};
  CHECK(f.compose(conic).is_zero());
  const std::vector<Rational> bad{1, 2};
  CHECK_THROWS_AS(f.eval(bad), InputError);
}

TEST_CASE("univariate interpolation") {
  // x^3 - 2x + 1 through four points.
  std::vector<std::pair<Rational, Rational>> pts;
  for (int x = -1; x <= 2; ++x) pts.emplace_back(x, x * x * x - 2 * x + 1);
  const UniPoly p = interpolate_univariate(pts);
  CHECK(p == UniPoly({1, -2, 0, 1}));
  CHECK(p.eval(5) == 116);
  CHECK(UniPoly::power(3).degree() == 3);
  pts.emplace_back(2, 0);
  CHECK_THROWS_AS(interpolate_univariate(pts), InputError);
}

TEST_CASE("fingerprints are stable") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hex64(255) == "00000000000000ff");
}
