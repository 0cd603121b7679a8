#include <doctest.h>

#include <random>

#include "cayley/errors.hpp"
#include "cayley/torsion.hpp"

using namespace cayley;

namespace {

QMatrix make(std::size_t r, std::size_t c, std::vector<Rational> e) { return QMatrix(r, c, std::move(e)); }

BasedComplex koszul(const Rational& a, const Rational& b) {
  return BasedComplex::from_dims({1, 2, 1}, {make(2, 1, {a, b}), make(1, 2, {-b, a})});
}

}  // namespace

TEST_CASE("two-term complex is the determinant") {
  CHECK(torsion(BasedComplex::from_dims({1, 1}, {make(1, 1, {Rational(7, 3)})})).value == Rational(7, 3));
  CHECK(torsion(BasedComplex::from_dims({2, 2}, {make(2, 2, {2, 0, 0, 3})})).value == 6);
  CHECK(torsion(BasedComplex::from_dims({2, 2}, {make(2, 2, {1, 2, 3, 4})})).value == -2);
}

TEST_CASE("Koszul complex of a vector") {
  CHECK(torsion(koszul(1, 2)).value == 1);
  // Scaling both boundaries by mu multiplies the torsion by mu^D with D = 0.
  CHECK(torsion_scaling_exponent({1, 2, 1}) == 0);
  CHECK(torsion(koszul(3, 5)).value == torsion(koszul(3, 5).scaled(4)).value);
}

TEST_CASE("scaling exponent from dimensions") {
  CHECK(torsion_scaling_exponent({1, 1}) == 1);
  CHECK(torsion_scaling_exponent({3, 3}) == 3);
  CHECK(torsion_scaling_exponent({5, 14, 9}) == 4);
  CHECK(torsion_scaling_exponent({1, 2, 1}) == 0);
}

TEST_CASE("structural and exactness errors") {
  CHECK_THROWS_AS(BasedComplex::from_dims({1, 2}, {make(1, 1, {1})}), StructuralError);
  CHECK_THROWS_AS(check_exact(BasedComplex::from_dims({1, 1, 1}, {make(1, 1, {1}), make(1, 1, {1})})), StructuralError);
  CHECK_THROWS_AS(torsion(BasedComplex::from_dims({1, 1}, {make(1, 1, {0})})), NotExactError);
  const ExactnessReport r = check_exact(koszul(0, 0));
  CHECK_FALSE(r.exact);
  CHECK(check_exact(koszul(1, 0)).rank_profile == std::vector<std::size_t>{1, 1});
}

TEST_CASE("property: torsion is independent of the minor selection") {
  std::mt19937_64 rng(31);
  for (int c = 0; c < 10; ++c) {
    const BasedComplex cx = random_exact_complex({2, 3, 1}, rng);
    const Rational base = torsion(cx).value;
    for (int k = 0; k < 5; ++k) CHECK(torsion_with_selection(cx, random_selection(cx, rng)).value == base);
  }
}

TEST_CASE("invalid selections are rejected") {
  const BasedComplex cx = BasedComplex::from_dims({2, 2}, {make(2, 2, {1, 1, 1, 1})});
  CHECK_THROWS(torsion(cx));
  const BasedComplex ok = koszul(1, 2);
  CHECK_THROWS_AS(torsion_with_selection(ok, {{0}, {}}), SelectionError);
}

TEST_CASE("property: scaling law Tor(mu d) = mu^D Tor(d)") {
  std::mt19937_64 rng(32);
  for (const std::vector<std::size_t>& kappas :
       std::vector<std::vector<std::size_t>>{{3}, {1, 2}, {2, 2, 1}, {1, 3, 2, 1}}) {
    const BasedComplex cx = random_exact_complex(kappas, rng);
    const long d = torsion_scaling_exponent(cx.dims());
    const Rational mu = random_nonzero_rational(rng, 5, 3);
    CHECK(torsion(cx.scaled(mu)).value == pow(mu, d) * torsion(cx).value);
  }
}

TEST_CASE("property: change of basis multiplies by determinants") {
  std::mt19937_64 rng(33);
  for (const std::vector<std::size_t>& kappas : std::vector<std::vector<std::size_t>>{{2}, {1, 2}, {2, 1, 2}}) {
    const BasedComplex cx = random_exact_complex(kappas, rng);
    std::vector<QMatrix> changes;
    for (auto d : cx.dims()) changes.push_back(random_invertible(d, rng));
    const long n = cx.top_index();
    Rational factor = 1;
    for (std::size_t i = 0; i < changes.size(); ++i) {
      const long sign_exp = ((n + static_cast<long>(i) + 1) % 2 == 0) ? 1 : -1;
      factor *= pow(det(changes[i]), sign_exp);
    }
    CHECK(torsion(rebase(cx, changes)).value == torsion(cx).value * factor);
  }
}

TEST_CASE("modular determinants give the same torsion") {
  std::mt19937_64 rng(34);
  const BasedComplex cx = random_exact_complex({3, 4, 2}, rng);
  CHECK(torsion(cx, TorsionOptions{true}).value == torsion(cx).value);
}

TEST_CASE("fingerprint tracks the bases, not the maps") {
  CHECK(koszul(1, 2).fingerprint() == koszul(2, 1).fingerprint());
  std::mt19937_64 rng(35);
  const BasedComplex cx = koszul(1, 2);
  std::vector<QMatrix> changes;
  for (auto d : cx.dims()) changes.push_back(random_invertible(d, rng));
  CHECK(rebase(cx, changes).fingerprint() != cx.fingerprint());
}
